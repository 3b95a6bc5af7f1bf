#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hosoya/sieve.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

enum class VerdictKind { zero_or_one, composite, prime, probable_prime };

struct PrimalityVerdict {
    VerdictKind kind = VerdictKind::zero_or_one;
    /// Present for some composites: a proper divisor in (1, value).
    std::optional<Integer> divisor;
    bool passed() const {
        return kind == VerdictKind::prime || kind == VerdictKind::probable_prime;
    }
};

/// Primality for nonnegative values. Below 2^64 the verdict is
/// deterministic (trial division plus strong tests over a complete base
/// set); above, a strong base-2 test combined with a strong Lucas test,
/// reported as probable_prime.
PrimalityVerdict is_prime(const Integer& v);

/// The strong base-2 + strong Lucas combination on an odd value > 1 with
/// no small factors. Exposed so the deterministic and probabilistic paths
/// can be compared on their overlap.
bool is_probable_prime_bpsw(const Integer& v);

const char* to_string(VerdictKind k);

struct PrimeRecord {
    Coord coord;
    Integer value;
    VerdictKind verdict = VerdictKind::prime;
    std::size_t digits = 0;  // decimal length
};

/// Prime entries of row r at columns min_col..ceil(r/2) (the canonical
/// half; mirror columns carry the same values). Sieve-rejected columns
/// are skipped before any big-integer test.
std::vector<PrimeRecord> primes_in_row(long long r, long long min_col,
                                       const SieveTable& t = default_sieve_table());

/// primes_in_row concatenated over r <= max_row, (r, k) order.
/// Rows are scanned in parallel; the merge is deterministic.
std::vector<PrimeRecord> prime_coords(long long max_row, long long min_col,
                                      const SieveTable& t = default_sieve_table());

/// Distinct prime values among all entries with r <= max_row, ordered by
/// first appearance (row-major, left to right).
std::vector<Integer> distinct_primes(long long max_row,
                                     const SieveTable& t = default_sieve_table());

struct DensityRow {
    long long n = 0;                    // row count
    unsigned long long distinct_entries = 0;   // N
    unsigned long long distinct_primes = 0;    // primes among the entries
    unsigned long long primes_below = 0;       // pi(N)
};

/// One row per requested n (each >= 3), single triangle scan shared
/// across all of them.
std::vector<DensityRow> density_table(std::vector<long long> rows,
                                      const SieveTable& t = default_sieve_table());

/// pi(n) by a bit-packed Eratosthenes sieve; counts primes <= n.
unsigned long long count_primes_upto(unsigned long long n);

enum class LineClass {
    parity,         // r = 1 (mod 3): every entry is even
    gcd_explained,  // r + 2 composite: entries inherit Fibonacci divisors
    prime_row,      // r itself is prime
    sporadic,       // r composite, r + 2 prime: the unexplained cases
};

const char* to_string(LineClass c);

struct PrimeFreeLine {
    long long r = 0;
    LineClass cls = LineClass::parity;
    friend bool operator==(const PrimeFreeLine&, const PrimeFreeLine&) = default;
};

/// Every r <= max_row whose row contains no prime entry, tagged with the
/// reason class. Sieve rejection first, primality tests on survivors.
std::vector<PrimeFreeLine> prime_free_lines(long long max_row,
                                            const SieveTable& t = default_sieve_table());

enum class FlVariant { plus, minus };

struct FlHit {
    long long r = 0;
    Integer value;
    VerdictKind verdict = VerdictKind::prime;
};

/// All r <= max_r with F(r) + L(r+1) (plus) or F(r) + L(r-1) (minus)
/// prime or probable prime. F(r) + L(r+1) = H(r+3, 3).
std::vector<FlHit> fl_prime_search(long long max_r, FlVariant variant);

/// Values longer than this many digits are emitted as digit counts only,
/// unless full values are requested.
inline constexpr std::size_t kInlineValueDigits = 24;

std::string records_to_csv(std::span<const PrimeRecord> records, bool full_values);
nlohmann::json records_to_json(std::span<const PrimeRecord> records, bool full_values);
std::string density_to_csv(std::span<const DensityRow> rows);
nlohmann::json density_to_json(std::span<const DensityRow> rows);
std::string lines_to_csv(std::span<const PrimeFreeLine> lines);
nlohmann::json lines_to_json(std::span<const PrimeFreeLine> lines);
std::string fl_to_csv(std::span<const FlHit> hits, bool full_values);
nlohmann::json fl_to_json(std::span<const FlHit> hits, bool full_values);

}  // namespace hosoya
