#include <random>
#include <set>

#include "doctest.h"

#include "../fixtures.hpp"
#include "hosoya/census.hpp"

using hosoya::count_primes_upto;
using hosoya::density_table;
using hosoya::distinct_primes;
using hosoya::entry;
using hosoya::fib;
using hosoya::fl_prime_search;
using hosoya::FlVariant;
using hosoya::Integer;
using hosoya::is_prime;
using hosoya::is_probable_prime_bpsw;
using hosoya::LineClass;
using hosoya::lucas;
using hosoya::prime_coords;
using hosoya::prime_free_lines;
using hosoya::PrimeRecord;
using hosoya::primes_in_row;
using hosoya::VerdictKind;

TEST_SUITE("census") {

TEST_CASE("is_prime agrees with trial division up to 10^6") {
    const unsigned long long limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    for (unsigned long long q = 2; q * q <= limit; ++q) {
        if (composite[q]) continue;
        for (unsigned long long j = q * q; j <= limit; j += q)
            composite[j] = true;
    }
    for (unsigned long long v = 0; v <= limit; ++v) {
        auto verdict = is_prime(Integer(static_cast<unsigned long>(v)));
        if (v <= 1)
            CHECK(verdict.kind == VerdictKind::zero_or_one);
        else
            CHECK(verdict.passed() == !composite[v]);
    }
}

TEST_CASE("verdict examples") {
    CHECK(is_prime(Integer(14736260449LL)).kind == VerdictKind::composite);
    CHECK(is_prime(Integer(2207)).kind == VerdictKind::prime);
    CHECK(is_prime(Integer(0)).kind == VerdictKind::zero_or_one);
    CHECK(is_prime(Integer(1)).kind == VerdictKind::zero_or_one);
    CHECK_THROWS_AS(is_prime(Integer(-7)), std::domain_error);
}

TEST_CASE("composite divisors, when present, are proper") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 2000; ++trial) {
        Integer v(static_cast<unsigned long>(rng() % 1'000'000'000ULL));
        auto verdict = is_prime(v);
        if (verdict.divisor) {
            CHECK(*verdict.divisor > 1);
            CHECK(*verdict.divisor < v);
            CHECK(v % *verdict.divisor == 0);
        }
    }
}

TEST_CASE("probable-prime path agrees with the deterministic path") {
    // Odd values with no factor below 2000: exactly the inputs the
    // big-number path would see.
    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 4000) {
        std::uint64_t v = rng() | 1ULL;
        bool small_factor = false;
        for (std::uint64_t q = 3; q < 2000; q += 2)
            if (v % q == 0) {
                small_factor = true;
                break;
            }
        if (small_factor) continue;
        ++tested;
        CHECK(is_probable_prime_bpsw(Integer(static_cast<unsigned long>(v))) ==
              hosoya::is_prime_u64(v));
    }
}

TEST_CASE("strong pseudoprimes to one component fail the combination") {
    // Strong base-2 pseudoprimes.
    for (long long v : {2047LL, 3277LL, 4033LL, 4681LL, 8321LL, 15841LL,
                        29341LL, 42799LL, 49141LL, 52633LL})
        CHECK(!is_probable_prime_bpsw(Integer(v)));
    // Strong Lucas pseudoprimes (Selfridge parameters).
    for (long long v : {5459LL, 5777LL, 10877LL, 16109LL, 18971LL, 22499LL,
                        24569LL, 25199LL, 40309LL, 58519LL})
        CHECK(!is_probable_prime_bpsw(Integer(v)));
    // Carmichael numbers.
    for (long long v : {561LL, 1105LL, 1729LL, 2465LL, 2821LL, 6601LL})
        CHECK(!is_prime(Integer(v)).passed());
}

TEST_CASE("big values agree with the GMP probable-prime test") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 400; ++trial) {
        Integer v = 1;
        for (int limb = 0; limb < 4; ++limb)
            v = (v << 64) + Integer(static_cast<unsigned long>(rng()));
        v |= 1;
        auto verdict = is_prime(v);
        int gmp = mpz_probab_prime_p(v.get_mpz_t(), 30);
        CHECK(verdict.passed() == (gmp != 0));
    }
    // A few structured cases.
    Integer m127 = (Integer(1) << 127) - 1;
    CHECK(is_prime(m127).kind == VerdictKind::probable_prime);
    CHECK(is_prime(m127 * m127).kind == VerdictKind::composite);
    CHECK(is_prime(fib(131)).passed());
    CHECK(!is_prime(fib(211)).passed());
}

TEST_CASE("primes_in_row examples") {
    auto r5 = primes_in_row(5, 1);
    REQUIRE(r5.size() == 3);
    CHECK(r5[0].coord == hosoya::Coord{5, 1});
    CHECK(r5[0].value == 3);
    CHECK(r5[1].value == 7);
    CHECK(r5[2].value == 5);

    auto r8 = primes_in_row(8, 1);
    REQUIRE(r8.size() == 3);
    CHECK(r8[0].value == 13);
    CHECK(r8[1].value == 29);
    CHECK(r8[2].value == 23);

    CHECK(primes_in_row(50, 1).empty());
    CHECK(primes_in_row(1, 1).empty());
    CHECK_THROWS_AS(primes_in_row(0, 1), std::domain_error);
    CHECK_THROWS_AS(primes_in_row(5, 0), std::domain_error);
}

TEST_CASE("prime_coords examples") {
    auto coords = prime_coords(12, 3);
    std::vector<std::pair<long long, long long>> expect = {
        {5, 3},  {8, 3},  {9, 3},  {9, 4},  {11, 3},
        {11, 4}, {11, 5}, {12, 3}, {12, 4}, {12, 5}};
    REQUIRE(coords.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(coords[i].coord.r == expect[i].first);
        CHECK(coords[i].coord.k == expect[i].second);
        CHECK(coords[i].value == entry(coords[i].coord));
        CHECK(coords[i].digits == coords[i].value.get_str().size());
    }
    CHECK(prime_coords(4, 3).empty());
}

TEST_CASE("row scan respects symmetry") {
    // Scanning the full row and folding mirrors gives the same set as
    // scanning the canonical half.
    for (long long r : {5LL, 8LL, 11LL, 24LL, 30LL}) {
        auto half = primes_in_row(r, 1);
        std::set<long long> half_cols;
        for (const auto& rec : half) half_cols.insert(rec.coord.k);
        std::set<long long> folded;
        auto full = hosoya::row(r);
        for (long long k = 1; k <= r; ++k) {
            const Integer& v = full.entries[k - 1];
            if (v > 1 && is_prime(v).passed())
                folded.insert(std::min(k, r - k + 1));
        }
        CHECK(folded == half_cols);
    }
}

TEST_CASE("distinct primes in appearance order") {
    auto d14 = distinct_primes(14);
    const auto& head = hosoya::testdata::distinct_primes_14_head20();
    REQUIRE(d14.size() == 22);
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(d14[i] == head[i]);
    CHECK(d14[20] == 521);
    CHECK(d14[21] == 443);

    CHECK(distinct_primes(2).empty());

    std::set<Integer> dedup(d14.begin(), d14.end());
    CHECK(dedup.size() == d14.size());

    // Every reported value is an entry somewhere in the scanned rows.
    std::set<Integer> all_entries;
    for (long long r = 1; r <= 14; ++r) {
        auto full = hosoya::row(r);
        all_entries.insert(full.entries.begin(), full.entries.end());
    }
    for (const auto& v : d14) CHECK(all_entries.count(v) == 1);
}

TEST_CASE("density rows for n = 10, 20, 30") {
    auto rows = density_table({10, 20, 30});
    REQUIRE(rows.size() == 3);
    const auto& expect = hosoya::testdata::density_rows();
    for (int i = 0; i < 3; ++i) {
        CHECK(rows[i].n == expect[i].n);
        CHECK(rows[i].distinct_entries == expect[i].distinct_entries);
        CHECK(rows[i].distinct_primes == expect[i].distinct_primes);
        CHECK(rows[i].primes_below == expect[i].primes_below);
        CHECK(rows[i].distinct_entries ==
              hosoya::distinct_count(rows[i].n));
    }
    CHECK_THROWS_AS(density_table({2}), std::domain_error);
}

TEST_CASE("prime counting function") {
    CHECK(count_primes_upto(1) == 0);
    CHECK(count_primes_upto(2) == 1);
    CHECK(count_primes_upto(10) == 4);
    CHECK(count_primes_upto(100) == 25);
    CHECK(count_primes_upto(541) == 100);
    CHECK(count_primes_upto(1'000'000) == 78498);
}

TEST_CASE("prime-free lines below 120") {
    auto lines = prime_free_lines(120);
    std::set<long long> got;
    for (const auto& line : lines)
        if (line.r >= 3) got.insert(line.r);
    std::set<long long> expect = {7,  10, 13, 16,  19,  22,  25,  28,  31,
                                  34, 37, 40, 43,  46,  49,  50,  52,  55,
                                  58, 61, 64, 67,  70,  71,  73,  75,  76,
                                  78, 79, 82, 85,  86,  88,  91,  94,  97,
                                  100, 103, 106, 109, 110, 112, 115, 118, 119};
    CHECK(got == expect);
    for (const auto& line : lines) {
        if (line.r == 50) CHECK(line.cls == LineClass::gcd_explained);
        if (line.r == 71) CHECK(line.cls == LineClass::prime_row);
        if (line.r == 7) CHECK(line.cls == LineClass::parity);
        if (line.r == 75) CHECK(line.cls == LineClass::gcd_explained);
    }
    // Row 4 carries the prime 2 despite being an all-even row.
    for (const auto& line : lines) CHECK(line.r != 4);
}

TEST_CASE("F + L searches") {
    auto plus = fl_prime_search(200, FlVariant::plus);
    const auto& prefix = hosoya::testdata::fl_plus_prefix();
    REQUIRE(plus.size() >= prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i)
        CHECK(plus[i].value == prefix[i]);

    // Identity: every plus hit equals the column-3 entry three rows down.
    for (const auto& hit : plus)
        CHECK(hit.value == entry({hit.r + 3, 3}));

    // r = 1 gives 1 + 3 = 4, excluded.
    for (const auto& hit : plus) CHECK(hit.r != 1);

    auto minus = fl_prime_search(200, FlVariant::minus);
    std::map<long long, Integer> plus_at, minus_at;
    for (const auto& hit : plus) plus_at[hit.r] = hit.value;
    for (const auto& hit : minus) minus_at[hit.r] = hit.value;
    std::vector<std::pair<long long, long long>> pairs;
    for (const auto& [r, v] : minus_at)
        if (plus_at.count(r))
            pairs.push_back({v.get_si(), plus_at[r].get_si()});
    CHECK(pairs == hosoya::testdata::fl_neighbor_pairs());
}

TEST_CASE("emitters") {
    auto records = prime_coords(12, 3);
    std::string csv = hosoya::records_to_csv(records, false);
    CHECK(csv.substr(0, 19) == "r,k,digits,value\n5,");
    CHECK(csv == hosoya::records_to_csv(records, false));
    auto j = hosoya::records_to_json(records, false);
    CHECK(j.size() == records.size());
    CHECK(j[0]["r"] == 5);
    CHECK(j[0]["k"] == 3);
    CHECK(j[0]["value"] == "5");

    // Large values collapse to digit counts unless full_values is set.
    auto big = primes_in_row(139, 1);
    REQUIRE(!big.empty());
    REQUIRE(big[0].digits > hosoya::kInlineValueDigits);
    std::string compact = hosoya::records_to_csv(big, false);
    CHECK(compact.find(big[0].value.get_str()) == std::string::npos);
    std::string full = hosoya::records_to_csv(big, true);
    CHECK(full.find(big[0].value.get_str()) != std::string::npos);
    auto jc = hosoya::records_to_json(big, false);
    CHECK(!jc[0].contains("value"));

    auto density = density_table({10});
    CHECK(hosoya::density_to_csv(density) == "n,N,pi_triangle,pi_N\n10,27,11,9\n");
    auto lines = prime_free_lines(60);
    std::string lcsv = hosoya::lines_to_csv(lines);
    CHECK(lcsv.find("50,gcd_explained\n") != std::string::npos);
}

}  // TEST_SUITE
