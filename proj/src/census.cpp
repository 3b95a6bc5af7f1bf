#include "hosoya/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hosoya/parallel.hpp"

namespace hosoya {

namespace {

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        std::vector<bool> composite(2000, false);
        for (std::uint64_t q = 2; q < 2000; ++q) {
            if (composite[q]) continue;
            out.push_back(q);
            for (std::uint64_t j = q * q; j < 2000; j += q) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool strong_base2(const mpz_class& n) {
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    mpz_class x, base = 2;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas test with Selfridge parameters (P = 1, Q = (1 - D)/4,
// D the first of 5, -7, 9, -11, ... with Jacobi(D, n) = -1).
// Callers guarantee n odd, n > 5, n not a perfect square.
bool strong_lucas_selfridge(const mpz_class& n) {
    mpz_class D = 5;
    for (;;) {
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) return false;  // shares a factor with D
        if (D > 0)
            D = -(D + 2);
        else
            D = -(D - 2);
    }
    const mpz_class Q = (1 - D) / 4;

    mpz_class d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    // Binary chain, most significant bit first: U(1) = 1, V(1) = P = 1.
    mpz_class U = 1, V = 1, Qk = Q % n, t;
    long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    for (long i = bits - 2; i >= 0; --i) {
        // m -> 2m: U(2m) = U V, V(2m) = V^2 - 2 Q^m
        U = U * V % n;
        V = (V * V - 2 * Qk) % n;
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            // m -> m+1: U' = (U + V)/2, V' = (D U + V)/2  (halving mod odd n)
            t = U + V;
            if (mpz_odd_p(t.get_mpz_t())) t += n;
            t >>= 1;
            V = D * U + V;
            if (mpz_odd_p(V.get_mpz_t())) V += n;
            V >>= 1;
            U = t % n;
            V = V % n;
            Qk = Qk * Q % n;
        }
    }
    U %= n;
    if (U < 0) U += n;
    V %= n;
    if (V < 0) V += n;
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = (V * V - 2 * Qk) % n;
        if (V < 0) V += n;
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

unsigned long long ceil_half(long long r) {
    return static_cast<unsigned long long>((r + 1) / 2);
}

std::string value_field(const Integer& v, std::size_t digits, bool full_values) {
    if (full_values || digits <= kInlineValueDigits) return v.get_str();
    return {};
}

}  // namespace

bool is_probable_prime_bpsw(const Integer& v) {
    if (!strong_base2(v)) return false;
    if (mpz_perfect_square_p(v.get_mpz_t())) return false;
    return strong_lucas_selfridge(v);
}

PrimalityVerdict is_prime(const Integer& v) {
    if (v < 0) throw std::domain_error("is_prime: negative value");
    if (v <= 1) return {VerdictKind::zero_or_one, std::nullopt};
    for (std::uint64_t q : small_primes()) {
        if (v == q) return {VerdictKind::prime, std::nullopt};
        if (mpz_fdiv_ui(v.get_mpz_t(), q) == 0)
            return {VerdictKind::composite, Integer(static_cast<unsigned long>(q))};
        if (Integer(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q) > v)
            return {VerdictKind::prime, std::nullopt};
    }
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 64 && v.fits_ulong_p()) {
        bool p = is_prime_u64(mpz_get_ui(v.get_mpz_t()));
        return {p ? VerdictKind::prime : VerdictKind::composite, std::nullopt};
    }
    if (mpz_perfect_square_p(v.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
        return {VerdictKind::composite, root};
    }
    if (is_probable_prime_bpsw(v)) return {VerdictKind::probable_prime, std::nullopt};
    return {VerdictKind::composite, std::nullopt};
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::zero_or_one: return "zero_or_one";
        case VerdictKind::composite: return "composite";
        case VerdictKind::prime: return "prime";
        case VerdictKind::probable_prime: return "probable_prime";
    }
    return "";
}

namespace {

PrimeRecord make_record(Coord c, Integer v, VerdictKind kind) {
    PrimeRecord rec;
    rec.coord = c;
    rec.digits = mpz_sizeinbase(v.get_mpz_t(), 10);
    // sizeinbase may overestimate by one
    if (rec.digits > 1) {
        Integer pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, rec.digits - 1);
        if (v < pow10) --rec.digits;
    }
    rec.value = std::move(v);
    rec.verdict = kind;
    return rec;
}

std::vector<PrimeRecord> scan_row(long long r, long long min_col,
                                  const std::vector<Integer>& f,
                                  const SieveTable& t) {
    std::vector<PrimeRecord> out;
    for (long long k = std::max(min_col, 1LL);
         k <= static_cast<long long>(ceil_half(r)); ++k) {
        Integer v = f[k - 1] * f[r - k + 2] + f[k] * f[r - k];
        if (v <= 1) continue;
        if (t.reject({r, k})) continue;
        PrimalityVerdict verdict = is_prime(v);
        if (verdict.passed())
            out.push_back(make_record({r, k}, std::move(v), verdict.kind));
    }
    return out;
}

}  // namespace

std::vector<PrimeRecord> primes_in_row(long long r, long long min_col,
                                       const SieveTable& t) {
    if (r < 1) throw std::domain_error("primes_in_row: row must be >= 1");
    if (min_col < 1) throw std::domain_error("primes_in_row: min_col must be >= 1");
    return scan_row(r, min_col, fib_prefix(r + 2), t);
}

std::vector<PrimeRecord> prime_coords(long long max_row, long long min_col,
                                      const SieveTable& t) {
    if (max_row < 1) throw std::domain_error("prime_coords: max_row must be >= 1");
    if (min_col < 1) throw std::domain_error("prime_coords: min_col must be >= 1");
    std::vector<std::vector<PrimeRecord>> per_row(
        static_cast<std::size_t>(max_row) + 1);
    const std::vector<Integer> f = fib_prefix(max_row + 2);
    parallel_for(1, max_row + 1,
                 [&](long long r) { per_row[r] = scan_row(r, min_col, f, t); });
    std::vector<PrimeRecord> out;
    for (auto& rowhits : per_row)
        for (auto& rec : rowhits) out.push_back(std::move(rec));
    return out;
}

namespace {

// Shared scan behind distinct_primes and density_table: distinct prime
// values in first-appearance order, plus the cumulative count after each
// checkpoint row.
struct DistinctScan {
    std::vector<Integer> primes;
    std::map<long long, unsigned long long> count_at;  // checkpoint -> count
    std::map<long long, unsigned long long> entries_at;
};

DistinctScan scan_distinct(long long max_row,
                           const std::vector<long long>& checkpoints,
                           const SieveTable& t) {
    struct Candidate {
        Coord coord;
        Integer value;
        long long order = 0;
        bool passed = false;
        VerdictKind kind = VerdictKind::composite;
    };
    std::set<Integer> seen;
    std::vector<Candidate> candidates;
    std::vector<std::pair<long long, long long>> marks;  // (row, order count)
    const std::vector<Integer> f = fib_prefix(max_row + 2);
    std::map<long long, unsigned long long> entries_at;
    std::set<long long> cps(checkpoints.begin(), checkpoints.end());
    long long order = 0;
    for (long long r = 1; r <= max_row; ++r) {
        for (long long k = 1; k <= static_cast<long long>(ceil_half(r)); ++k) {
            Integer v = f[k - 1] * f[r - k + 2] + f[k] * f[r - k];
            if (!seen.insert(v).second) continue;
            if (v <= 1) continue;
            if (t.reject({r, k})) continue;
            candidates.push_back({{r, k}, std::move(v), ++order, false,
                                  VerdictKind::composite});
        }
        if (cps.count(r)) {
            marks.push_back({r, order});
            entries_at[r] = seen.size();
        }
    }
    parallel_for(0, static_cast<long long>(candidates.size()), [&](long long i) {
        PrimalityVerdict verdict = is_prime(candidates[i].value);
        candidates[i].passed = verdict.passed();
        candidates[i].kind = verdict.kind;
    });

    DistinctScan out;
    std::vector<unsigned long long> prefix_passed(candidates.size() + 1, 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        prefix_passed[i + 1] = prefix_passed[i] + (candidates[i].passed ? 1 : 0);
        if (candidates[i].passed) out.primes.push_back(std::move(candidates[i].value));
    }
    for (auto [r, upto] : marks) {
        out.count_at[r] = prefix_passed[static_cast<std::size_t>(upto)];
        out.entries_at[r] = entries_at[r];
    }
    return out;
}

}  // namespace

std::vector<Integer> distinct_primes(long long max_row, const SieveTable& t) {
    if (max_row < 1) throw std::domain_error("distinct_primes: max_row must be >= 1");
    return scan_distinct(max_row, {}, t).primes;
}

unsigned long long count_primes_upto(unsigned long long n) {
    if (n < 2) return 0;
    // Odd-only bit sieve.
    const unsigned long long half = (n - 1) / 2;  // count of odds in [3, n]
    std::vector<std::uint64_t> bits((half + 64) / 64, 0);
    auto is_set = [&](unsigned long long i) {
        return (bits[i >> 6] >> (i & 63)) & 1ULL;
    };
    for (unsigned long long i = 0; i < half; ++i) {
        if (is_set(i)) continue;
        unsigned long long q = 2 * i + 3;
        if (q * q > n) break;
        for (unsigned long long j = (q * q - 3) / 2; j < half; j += q)
            bits[j >> 6] |= 1ULL << (j & 63);
    }
    unsigned long long count = 1;  // the prime 2
    for (unsigned long long i = 0; i < half; ++i)
        if (!is_set(i)) ++count;
    return count;
}

std::vector<DensityRow> density_table(std::vector<long long> rows,
                                      const SieveTable& t) {
    for (long long n : rows)
        if (n < 3) throw std::domain_error("density_table: rows must be >= 3");
    if (rows.empty()) return {};
    long long max_row = *std::max_element(rows.begin(), rows.end());
    DistinctScan scan = scan_distinct(max_row, rows, t);
    std::vector<DensityRow> out;
    out.reserve(rows.size());
    for (long long n : rows) {
        DensityRow row;
        row.n = n;
        row.distinct_entries = distinct_count(n);
        row.distinct_primes = scan.count_at.at(n);
        row.primes_below = count_primes_upto(row.distinct_entries);
        out.push_back(row);
    }
    return out;
}

const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::parity: return "parity";
        case LineClass::gcd_explained: return "gcd_explained";
        case LineClass::prime_row: return "prime_row";
        case LineClass::sporadic: return "sporadic";
    }
    return "";
}

namespace {

bool row_is_prime_free(long long r, const std::vector<Integer>& f,
                       const SieveTable& t) {
    if (r <= 2) return true;  // entries 0 and 1 only
    // Rows r = 1 (mod 3) carry even entries throughout; the only even
    // prime would be an entry equal to 2, and the row minimum F(r-1)
    // rules that out beyond row 4.
    if (r % 3 == 1 && r > 4) return true;
    for (long long k = 1; k <= static_cast<long long>(ceil_half(r)); ++k) {
        Integer v = f[k - 1] * f[r - k + 2] + f[k] * f[r - k];
        if (v <= 1) continue;
        if (t.reject({r, k})) continue;
        if (is_prime(v).passed()) return false;
    }
    return true;
}

}  // namespace

std::vector<PrimeFreeLine> prime_free_lines(long long max_row,
                                            const SieveTable& t) {
    if (max_row < 3) throw std::domain_error("prime_free_lines: max_row must be >= 3");
    const std::vector<Integer> f = fib_prefix(max_row + 2);
    std::vector<char> free_flag(static_cast<std::size_t>(max_row) + 1, 0);
    parallel_for(1, max_row + 1, [&](long long r) {
        free_flag[r] = row_is_prime_free(r, f, t) ? 1 : 0;
    });
    std::vector<PrimeFreeLine> out;
    for (long long r = 1; r <= max_row; ++r) {
        if (!free_flag[r]) continue;
        LineClass cls;
        if (r % 3 == 1)
            cls = LineClass::parity;
        else if (is_prime_u64(static_cast<std::uint64_t>(r)))
            cls = LineClass::prime_row;
        else if (!is_prime_u64(static_cast<std::uint64_t>(r) + 2))
            cls = LineClass::gcd_explained;
        else
            cls = LineClass::sporadic;
        out.push_back({r, cls});
    }
    return out;
}

std::vector<FlHit> fl_prime_search(long long max_r, FlVariant variant) {
    if (max_r < 1) throw std::domain_error("fl_prime_search: max_r must be >= 1");
    const std::vector<Integer> f = fib_prefix(max_r + 2);
    auto lucas_at = [&](long long j) -> Integer {
        if (j == 0) return Integer(2);
        return f[j - 1] + f[j + 1];
    };
    struct Slot {
        Integer value;
        bool passed = false;
        VerdictKind kind = VerdictKind::composite;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(max_r) + 1);
    for (long long r = 1; r <= max_r; ++r)
        slots[r].value =
            f[r] + lucas_at(variant == FlVariant::plus ? r + 1 : r - 1);
    parallel_for(1, max_r + 1, [&](long long r) {
        if (slots[r].value <= 1) return;
        PrimalityVerdict verdict = is_prime(slots[r].value);
        slots[r].passed = verdict.passed();
        slots[r].kind = verdict.kind;
    });
    std::vector<FlHit> out;
    for (long long r = 1; r <= max_r; ++r)
        if (slots[r].passed)
            out.push_back({r, std::move(slots[r].value), slots[r].kind});
    return out;
}

std::string records_to_csv(std::span<const PrimeRecord> records, bool full_values) {
    std::ostringstream os;
    os << "r,k,digits,value\n";
    for (const PrimeRecord& rec : records)
        os << rec.coord.r << ',' << rec.coord.k << ',' << rec.digits << ','
           << value_field(rec.value, rec.digits, full_values) << '\n';
    return os.str();
}

nlohmann::json records_to_json(std::span<const PrimeRecord> records,
                               bool full_values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PrimeRecord& rec : records) {
        nlohmann::json item = {{"r", rec.coord.r},
                               {"k", rec.coord.k},
                               {"digits", rec.digits}};
        std::string v = value_field(rec.value, rec.digits, full_values);
        if (!v.empty()) item["value"] = v;
        arr.push_back(std::move(item));
    }
    return arr;
}

std::string density_to_csv(std::span<const DensityRow> rows) {
    std::ostringstream os;
    os << "n,N,pi_triangle,pi_N\n";
    for (const DensityRow& row : rows)
        os << row.n << ',' << row.distinct_entries << ',' << row.distinct_primes
           << ',' << row.primes_below << '\n';
    return os.str();
}

nlohmann::json density_to_json(std::span<const DensityRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DensityRow& row : rows)
        arr.push_back({{"n", row.n},
                       {"N", row.distinct_entries},
                       {"pi_triangle", row.distinct_primes},
                       {"pi_N", row.primes_below}});
    return arr;
}

std::string lines_to_csv(std::span<const PrimeFreeLine> lines) {
    std::ostringstream os;
    os << "r,class\n";
    for (const PrimeFreeLine& line : lines)
        os << line.r << ',' << to_string(line.cls) << '\n';
    return os.str();
}

nlohmann::json lines_to_json(std::span<const PrimeFreeLine> lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PrimeFreeLine& line : lines)
        arr.push_back({{"r", line.r}, {"class", to_string(line.cls)}});
    return arr;
}

std::string fl_to_csv(std::span<const FlHit> hits, bool full_values) {
    std::ostringstream os;
    os << "r,digits,value\n";
    for (const FlHit& hit : hits) {
        std::size_t digits = mpz_sizeinbase(hit.value.get_mpz_t(), 10);
        os << hit.r << ',' << digits << ','
           << value_field(hit.value, digits, full_values) << '\n';
    }
    return os.str();
}

nlohmann::json fl_to_json(std::span<const FlHit> hits, bool full_values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FlHit& hit : hits) {
        std::size_t digits = mpz_sizeinbase(hit.value.get_mpz_t(), 10);
        nlohmann::json item = {{"r", hit.r}, {"digits", digits}};
        std::string v = value_field(hit.value, digits, full_values);
        if (!v.empty()) item["value"] = v;
        arr.push_back(std::move(item));
    }
    return arr;
}

}  // namespace hosoya
