#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hosoya/modular.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

/// A congruence class (r, k) mod d_p all of whose coordinates carry
/// entries divisible by p. Produced by block-scan discovery, so every
/// class comes with a scanned witness coordinate.
struct ResidueClass {
    std::uint64_t p = 0;
    std::uint64_t modulus = 0;  // d_p(p)
    std::uint64_t r_res = 0;
    std::uint64_t k_res = 0;
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
    friend auto operator<=>(const ResidueClass&, const ResidueClass&) = default;
};

/// All zero classes of p, found by scanning the complete residue block
/// r in [d+1, 2d], k in [1, d]. Sorted by (r_res, k_res).
std::vector<ResidueClass> seed_classes(std::uint64_t p);

class SieveTable {
  public:
    /// Builds the per-prime class sets; duplicates are dropped silently.
    /// Every entry must be an odd prime with d_p <= 10^4.
    static SieveTable build(std::vector<std::uint64_t> primes);

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    const std::vector<ResidueClass>& classes_for(std::uint64_t p) const;
    std::size_t class_count() const;

    /// Some table prime that proves entry(c) composite: the coordinate
    /// lies in a zero class of p and the entry strictly exceeds p. Entries
    /// 0 and 1 are never claimed. Smallest applicable prime wins, so the
    /// result is deterministic.
    std::optional<std::uint64_t> reject(Coord c) const;

  private:
    struct PerPrime {
        std::uint64_t p = 0;
        std::uint64_t modulus = 0;
        std::uint64_t guard_row = 0;  // smallest r with F(r-1) > p
        std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;  // sorted
    };
    std::vector<std::uint64_t> primes_;
    std::vector<PerPrime> table_;
    std::vector<std::vector<ResidueClass>> by_prime_;
};

/// The paper-table default: primes 3, 5, 7, 11, 13, 17, 19.
const SieveTable& default_sieve_table();

std::optional<std::uint64_t> sieve_reject(Coord c, const SieveTable& t);

/// Per-column verdicts for row r, columns 1..ceil(r/2); index k-1.
std::vector<std::optional<std::uint64_t>> coverage_report(long long r,
                                                          const SieveTable& t);

/// rows = (p, modulus, r_res, k_res), header included, normalized residues.
std::string table_to_csv(const SieveTable& t);
nlohmann::json table_to_json(const SieveTable& t);

}  // namespace hosoya
