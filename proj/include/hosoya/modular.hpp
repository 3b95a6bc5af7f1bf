#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hosoya/triangle.hpp"

namespace hosoya {

/// Deterministic primality for machine-word integers (strong tests over a
/// fixed base set that covers the whole uint64 range).
bool is_prime_u64(std::uint64_t n);

/// +1 if p = +-1 (mod 5), -1 if p = +-2 (mod 5), 0 if p = 5.
/// Domain: odd primes.
int legendre5(std::uint64_t p);

/// d_p = p - (5/p); F(d_p) = 0 (mod p), checked on construction.
/// d_5 is defined as 5 so the mod-5 class row is representable.
std::uint64_t d_p(std::uint64_t p);

struct PisanoInfo {
    std::uint64_t modulus = 0;
    std::uint64_t period = 0;  // smallest n >= 1 with (F(n), F(n+1)) = (0, 1)
    std::uint64_t rank = 0;    // smallest n >= 1 with F(n) = 0 (mod m)
};

/// Exact period and rank of apparition by direct iteration, 2 <= m <= 10^7.
PisanoInfo pisano(std::uint64_t m);

/// F(n) mod m by fast doubling entirely in modular arithmetic.
std::uint64_t fib_mod(unsigned long long n, std::uint64_t m);

/// (F(n) mod m, F(n+1) mod m).
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(unsigned long long n,
                                                     std::uint64_t m);

/// H(r,k) mod m without materializing the big entry.
std::uint64_t entry_mod(Coord c, std::uint64_t m);

/// True iff r = 1 (mod 3); equivalently, every entry of row r is even.
bool parity_rule(long long r);

/// 2 F(2t-1)^2 mod p; equals H(p,2t) mod p when p = +-1 (mod 5).
std::uint64_t predicted_residue_even_col(std::uint64_t p, std::uint64_t t);

/// (2 F(2t+1)^2 - 1) mod p; equals H(p,2t+1) mod p when p = +-2 (mod 5).
std::uint64_t predicted_residue_odd_col(std::uint64_t p, std::uint64_t t);

enum class Mod12Case {
    all_columns_even,   // p = 1 or 7 (mod 12): H(p,k) even for all k
    mod3_at_4t_plus_1,  // p = 5 (mod 12): 3 | H(p,4t+1)
    mod3_at_4t_plus_2,  // p = 11 (mod 12): 3 | H(p,4t+2)
};

struct Mod12Rule {
    Mod12Case kind;
    unsigned divisor;  // 2 or 3
    /// Columns of row r covered by the rule.
    std::vector<long long> columns(long long r) const;
    std::string description() const;
};

/// Which residue-of-12 case applies to a prime p > 3.
Mod12Rule mod12_classes(std::uint64_t p);

/// A residue pair (r mod d, k mod d), normalized into [0, d)^2.
struct ResiduePair {
    std::uint64_t r_res = 0;
    std::uint64_t k_res = 0;
    friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
    friend auto operator<=>(const ResiduePair&, const ResiduePair&) = default;
};

/// The four classes mod d_p with entry = 0 (mod p) at every coordinate:
/// (1,1), (-2,0), (-2,-1), (-5,-2), normalized and sorted.
std::vector<ResiduePair> universal_zero_classes(std::uint64_t p);

}  // namespace hosoya
