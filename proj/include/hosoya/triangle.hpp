#pragma once

#include <vector>

#include "hosoya/fib.hpp"

namespace hosoya {

/// Position in the triangle: row r >= 1, column 1 <= k <= r.
struct Coord {
    long long r = 1;
    long long k = 1;
    friend bool operator==(const Coord&, const Coord&) = default;
};

bool valid(Coord c);
/// Throws std::domain_error on an invalid coordinate.
void require_valid(Coord c);

/// Exact entry value, H(r,k) = F(k-1) F(r-k+2) + F(k) F(r-k).
/// Two products of nonnegative terms; the canonical evaluation path.
Integer entry(Coord c);

/// Same value through the 2x2 determinant F(k+1) F(r-k+2) - F(k) F(r-k+1).
/// Kept as an independent cross-check route.
Integer entry_det(Coord c);

struct Row {
    long long r = 1;
    std::vector<Integer> entries;  // entries[k-1] = H(r,k), palindromic
};

/// All r entries of row r; one Fibonacci prefix, O(r) multiplications.
Row row(long long r);

/// Values down the slash diagonal m: H(n,m) for n = m .. m+count-1,
/// via H(n,m) = L(n-m+1) F(m-1) + F(n-m) F(m-2).
std::vector<Integer> diagonal_slash(long long m, long long count);

/// Values down the backslash diagonal m: H(n+m-1,m) for n = 1 .. count,
/// via H(n+m-1,m) = L(m) F(n-1) + F(m-1) F(n-2).
std::vector<Integer> diagonal_backslash(long long m, long long count);

/// Number of distinct entries among the first r rows:
/// floor(((r+1)/2)^2) - 3, calibrated for r >= 3.
unsigned long long distinct_count(long long r);

/// Coefficients a[i][j], 0 <= i,j <= max_degree, of the truncated power
/// series (x + y + xy) / ((1 - x - x^2)(1 - y - y^2)), exact arithmetic.
/// The series carries the triangle as a[i][j] = H(i+j+1, j+1): the sum
/// runs over x^(r-k) y^(k-1), not x^r y^k.
std::vector<std::vector<Integer>> gf_coefficients(int max_degree);

}  // namespace hosoya
