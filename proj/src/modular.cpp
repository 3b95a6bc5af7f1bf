#include "hosoya/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace hosoya {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                           int s) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::domain_error(std::string(who) + ": not an odd prime");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for the full 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!strong_probable_prime(n, a, d, s)) return false;
    return true;
}

int legendre5(std::uint64_t p) {
    require_odd_prime(p, "legendre5");
    switch (p % 5) {
        case 0: return 0;
        case 1:
        case 4: return 1;
        default: return -1;
    }
}

std::uint64_t d_p(std::uint64_t p) {
    int chi = legendre5(p);
    std::uint64_t d = chi == 0 ? 5 : (chi == 1 ? p - 1 : p + 1);
    if (fib_mod(d, p) != 0)
        throw std::logic_error("d_p: rank check failed");
    return d;
}

PisanoInfo pisano(std::uint64_t m) {
    if (m < 2 || m > 10'000'000ULL)
        throw std::domain_error("pisano: modulus must be in [2, 10^7]");
    PisanoInfo info;
    info.modulus = m;
    std::uint64_t a = 0, b = 1;  // F(i), F(i+1)
    for (std::uint64_t i = 1;; ++i) {
        std::uint64_t next = (a + b) % m;
        a = b;
        b = next;  // now a = F(i), b = F(i+1)
        if (a == 0 && info.rank == 0) info.rank = i;
        if (a == 0 && b == 1) {
            info.period = i;
            return info;
        }
    }
}

std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(unsigned long long n,
                                                     std::uint64_t m) {
    if (m < 2) throw std::domain_error("fib_pair_mod: modulus must be >= 2");
    std::uint64_t lo = 0, hi = 1 % m;
    if (n == 0) return {lo, hi};
    int top = 63;
    while (!((n >> top) & 1ULL)) --top;
    for (int bit = top; bit >= 0; --bit) {
        std::uint64_t twice_hi = (2 * hi) % m;
        std::uint64_t even_term =
            mulmod(lo, (twice_hi + m - lo) % m, m);              // F(2i)
        std::uint64_t odd_term =
            (mulmod(lo, lo, m) + mulmod(hi, hi, m)) % m;          // F(2i+1)
        if ((n >> bit) & 1ULL) {
            lo = odd_term;
            hi = (even_term + odd_term) % m;
        } else {
            lo = even_term;
            hi = odd_term;
        }
    }
    return {lo, hi};
}

std::uint64_t fib_mod(unsigned long long n, std::uint64_t m) {
    return fib_pair_mod(n, m).first;
}

std::uint64_t entry_mod(Coord c, std::uint64_t m) {
    require_valid(c);
    if (m < 2) throw std::domain_error("entry_mod: modulus must be >= 2");
    auto [fk1, fk] = fib_pair_mod(static_cast<unsigned long long>(c.k - 1), m);
    auto [frk, frk1] =
        fib_pair_mod(static_cast<unsigned long long>(c.r - c.k), m);
    std::uint64_t frk2 = (frk + frk1) % m;
    return (mulmod(fk1, frk2, m) + mulmod(fk, frk, m)) % m;
}

bool parity_rule(long long r) {
    if (r < 1) throw std::domain_error("parity_rule: row must be >= 1");
    return r % 3 == 1;
}

std::uint64_t predicted_residue_even_col(std::uint64_t p, std::uint64_t t) {
    if (legendre5(p) != 1)
        throw std::domain_error("predicted_residue_even_col: requires p = +-1 (mod 5)");
    if (t < 1 || 2 * t > p)
        throw std::domain_error("predicted_residue_even_col: need 1 <= 2t <= p");
    std::uint64_t f = fib_mod(2 * t - 1, p);
    return mulmod(2 % p, mulmod(f, f, p), p);
}

std::uint64_t predicted_residue_odd_col(std::uint64_t p, std::uint64_t t) {
    if (legendre5(p) != -1)
        throw std::domain_error("predicted_residue_odd_col: requires p = +-2 (mod 5)");
    if (t < 1 || 2 * t + 1 > p)
        throw std::domain_error("predicted_residue_odd_col: need 1 <= 2t+1 <= p");
    std::uint64_t f = fib_mod(2 * t + 1, p);
    std::uint64_t sq = mulmod(2 % p, mulmod(f, f, p), p);
    return (sq + p - 1) % p;
}

std::vector<long long> Mod12Rule::columns(long long r) const {
    std::vector<long long> out;
    if (kind == Mod12Case::all_columns_even) {
        for (long long k = 1; k <= r; ++k) out.push_back(k);
        return out;
    }
    long long start = kind == Mod12Case::mod3_at_4t_plus_1 ? 1 : 2;
    for (long long k = start; k <= r; k += 4) out.push_back(k);
    return out;
}

std::string Mod12Rule::description() const {
    switch (kind) {
        case Mod12Case::all_columns_even:
            return "all columns even";
        case Mod12Case::mod3_at_4t_plus_1:
            return "columns 4t+1 divisible by 3";
        case Mod12Case::mod3_at_4t_plus_2:
            return "columns 4t+2 divisible by 3";
    }
    return {};
}

Mod12Rule mod12_classes(std::uint64_t p) {
    if (p <= 3) throw std::domain_error("mod12_classes: requires p > 3");
    require_odd_prime(p, "mod12_classes");
    switch (p % 12) {
        case 1:
        case 7: return {Mod12Case::all_columns_even, 2};
        case 5: return {Mod12Case::mod3_at_4t_plus_1, 3};
        case 11: return {Mod12Case::mod3_at_4t_plus_2, 3};
        default:
            throw std::logic_error("mod12_classes: unreachable residue");
    }
}

std::vector<ResiduePair> universal_zero_classes(std::uint64_t p) {
    std::uint64_t d = d_p(p);
    auto norm = [d](long long a, long long b) {
        auto wrap = [d](long long v) {
            long long m = v % static_cast<long long>(d);
            if (m < 0) m += static_cast<long long>(d);
            return static_cast<std::uint64_t>(m);
        };
        return ResiduePair{wrap(a), wrap(b)};
    };
    std::vector<ResiduePair> out = {norm(1, 1), norm(-2, 0), norm(-2, -1),
                                    norm(-5, -2)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hosoya
