#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hosoya/fib.hpp"

namespace hosoya {

/// Smallest nonnegative solution of x = residues[i] (mod moduli[i]).
/// Moduli must be pairwise coprime and positive.
Integer crt(const std::vector<Integer>& residues,
            const std::vector<Integer>& moduli);

/// Witness that the m x m block at (n, k) is entirely composite: the cell
/// (i, j) entry H(n+i, k+j) is divisible by F(P[i][j]) by construction.
struct NeighborhoodCert {
    int m = 0;
    Integer n;
    Integer k;
    std::vector<std::vector<std::uint64_t>> primes;  // row-major grid
    Integer modulus;                                 // product of the grid
};

/// Deterministic cert for block side m (1 <= m <= 16): the grid takes the
/// first m^2 odd primes row-major, (n, k) solve the congruences
/// n = -(i+2), k = -j (mod P[i][j]), and the smallest solution is lifted
/// until k > m and n >= k + m.
NeighborhoodCert build_neighborhood(int m);

enum class VerifyMode { divisor, value };

struct CellCheck {
    int i = 0;
    int j = 0;
    std::uint64_t p = 0;
    bool ok = false;
    std::string note;
};

struct VerificationReport {
    bool ok = false;
    VerifyMode mode = VerifyMode::divisor;
    std::vector<CellCheck> cells;
};

/// divisor mode: checks P[i][j] | n+i+2 and P[i][j] | k+j per cell, plus
/// the growth condition that makes F(P) a proper divisor; no big entries
/// are materialized. value mode: additionally materializes every entry
/// and confirms 1 < F(P) < H with F(P) | H; refused when n is too large
/// to evaluate.
VerificationReport verify_neighborhood(const NeighborhoodCert& cert,
                                       VerifyMode mode);

nlohmann::json cert_to_json(const NeighborhoodCert& cert);
NeighborhoodCert cert_from_json(const nlohmann::json& j);

}  // namespace hosoya
