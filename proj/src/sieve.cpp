#include "hosoya/sieve.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hosoya {

std::vector<ResidueClass> seed_classes(std::uint64_t p) {
    if (p < 3 || !is_prime_u64(p))
        throw std::domain_error("seed_classes: not an odd prime");
    const std::uint64_t d = d_p(p);
    if (d > 10'000ULL)
        throw std::domain_error("seed_classes: d_p exceeds the block-scan cap");
    std::set<std::pair<std::uint64_t, std::uint64_t>> found;
    // Every (r mod d, k mod d) pair occurs exactly once in this block,
    // and every coordinate in it is valid (k <= d < r).
    for (std::uint64_t r = d + 1; r <= 2 * d; ++r)
        for (std::uint64_t k = 1; k <= d; ++k)
            if (entry_mod({static_cast<long long>(r),
                           static_cast<long long>(k)}, p) == 0)
                found.insert({r % d, k % d});
    std::vector<ResidueClass> out;
    out.reserve(found.size());
    for (auto [rr, kk] : found) out.push_back({p, d, rr, kk});
    return out;
}

SieveTable SieveTable::build(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    SieveTable t;
    for (std::uint64_t p : primes) {
        std::vector<ResidueClass> classes = seed_classes(p);
        PerPrime per;
        per.p = p;
        per.modulus = classes.front().modulus;
        per.guard_row = 2;
        // F(guard_row - 1) > p bounds the entry away from p itself.
        std::uint64_t a = 1, b = 1;  // F(r-1), F(r) at r = guard_row
        while (a <= p) {
            std::uint64_t next = a + b;
            a = b;
            b = next;
            ++per.guard_row;
        }
        for (const ResidueClass& rc : classes)
            per.classes.push_back({rc.r_res, rc.k_res});
        t.primes_.push_back(p);
        t.table_.push_back(std::move(per));
        t.by_prime_.push_back(std::move(classes));
    }
    return t;
}

const std::vector<ResidueClass>& SieveTable::classes_for(std::uint64_t p) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
        if (primes_[i] == p) return by_prime_[i];
    throw std::domain_error("SieveTable: prime not in table");
}

std::size_t SieveTable::class_count() const {
    std::size_t n = 0;
    for (const auto& v : by_prime_) n += v.size();
    return n;
}

std::optional<std::uint64_t> SieveTable::reject(Coord c) const {
    require_valid(c);
    if (c.r <= 2) return std::nullopt;  // entries 0 and 1 are non-candidates
    for (const PerPrime& per : table_) {
        std::pair<std::uint64_t, std::uint64_t> key = {
            static_cast<std::uint64_t>(c.r) % per.modulus,
            static_cast<std::uint64_t>(c.k) % per.modulus};
        if (!std::binary_search(per.classes.begin(), per.classes.end(), key))
            continue;
        if (static_cast<std::uint64_t>(c.r) >= per.guard_row) return per.p;
        // Small rows: the growth bound does not apply, compare exactly.
        if (entry(c) > per.p) return per.p;
    }
    return std::nullopt;
}

const SieveTable& default_sieve_table() {
    static const SieveTable table = SieveTable::build({3, 5, 7, 11, 13, 17, 19});
    return table;
}

std::optional<std::uint64_t> sieve_reject(Coord c, const SieveTable& t) {
    return t.reject(c);
}

std::vector<std::optional<std::uint64_t>> coverage_report(long long r,
                                                          const SieveTable& t) {
    if (r < 1) throw std::domain_error("coverage_report: row must be >= 1");
    std::vector<std::optional<std::uint64_t>> out;
    out.reserve(static_cast<std::size_t>((r + 1) / 2));
    for (long long k = 1; k <= (r + 1) / 2; ++k) out.push_back(t.reject({r, k}));
    return out;
}

std::string table_to_csv(const SieveTable& t) {
    std::ostringstream os;
    os << "p,modulus,r_res,k_res\n";
    for (std::uint64_t p : t.primes())
        for (const ResidueClass& rc : t.classes_for(p))
            os << rc.p << ',' << rc.modulus << ',' << rc.r_res << ','
               << rc.k_res << '\n';
    return os.str();
}

nlohmann::json table_to_json(const SieveTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint64_t p : t.primes())
        for (const ResidueClass& rc : t.classes_for(p))
            arr.push_back({{"p", rc.p},
                           {"modulus", rc.modulus},
                           {"r_res", rc.r_res},
                           {"k_res", rc.k_res}});
    return arr;
}

}  // namespace hosoya
