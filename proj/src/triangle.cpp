#include "hosoya/triangle.hpp"

#include <stdexcept>
#include <string>

namespace hosoya {

bool valid(Coord c) { return c.r >= 1 && c.k >= 1 && c.k <= c.r; }

void require_valid(Coord c) {
    if (!valid(c))
        throw std::domain_error("invalid coordinate (" + std::to_string(c.r) +
                                "," + std::to_string(c.k) + ")");
}

Integer entry(Coord c) {
    require_valid(c);
    FibPair a = fib_pair(c.k - 1);   // F(k-1), F(k)
    FibPair b = fib_pair(c.r - c.k); // F(r-k), F(r-k+1)
    return a.lo * (b.lo + b.hi) + a.hi * b.lo;
}

Integer entry_det(Coord c) {
    require_valid(c);
    FibPair a = fib_pair(c.k);       // F(k), F(k+1)
    FibPair b = fib_pair(c.r - c.k); // F(r-k), F(r-k+1)
    return a.hi * (b.lo + b.hi) - a.lo * b.hi;
}

Row row(long long r) {
    if (r < 1) throw std::domain_error("row index must be >= 1");
    std::vector<Integer> f = fib_prefix(r + 2);
    Row out;
    out.r = r;
    out.entries.reserve(static_cast<std::size_t>(r));
    for (long long k = 1; k <= r; ++k)
        out.entries.push_back(f[k - 1] * f[r - k + 2] + f[k] * f[r - k]);
    return out;
}

std::vector<Integer> diagonal_slash(long long m, long long count) {
    if (m < 1 || count < 1)
        throw std::domain_error("diagonal index and length must be >= 1");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(count));
    const Integer fm1 = fib(m - 1);
    const Integer fm2 = fib(m - 2);
    for (long long n = m; n < m + count; ++n)
        out.push_back(lucas(n - m + 1) * fm1 + fib(n - m) * fm2);
    return out;
}

std::vector<Integer> diagonal_backslash(long long m, long long count) {
    if (m < 1 || count < 1)
        throw std::domain_error("diagonal index and length must be >= 1");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(count));
    const Integer lm = lucas(m);
    const Integer fm1 = fib(m - 1);
    for (long long n = 1; n <= count; ++n)
        out.push_back(lm * fib(n - 1) + fm1 * fib(n - 2));
    return out;
}

unsigned long long distinct_count(long long r) {
    if (r < 3) throw std::domain_error("distinct_count requires r >= 3");
    if (r > 2'000'000'000LL)
        throw std::domain_error("distinct_count: row count out of range");
    unsigned long long s = static_cast<unsigned long long>(r) + 1ULL;
    return s * s / 4ULL - 3ULL;
}

namespace {

// Coefficients of 1/den modulo x^(degree+1); den[0] must be a unit.
std::vector<Integer> series_inverse(const std::vector<Integer>& den, int degree) {
    std::vector<Integer> inv(static_cast<std::size_t>(degree) + 1);
    inv[0] = 1 / den[0];
    for (int n = 1; n <= degree; ++n) {
        Integer acc = 0;
        for (std::size_t j = 1; j < den.size() && j <= static_cast<std::size_t>(n); ++j)
            acc += den[j] * inv[n - j];
        inv[n] = -acc * inv[0];
    }
    return inv;
}

}  // namespace

std::vector<std::vector<Integer>> gf_coefficients(int max_degree) {
    if (max_degree < 0 || max_degree > 64)
        throw std::domain_error("gf_coefficients: degree must be in [0, 64]");
    const std::vector<Integer> den = {Integer(1), Integer(-1), Integer(-1)};
    std::vector<Integer> inv = series_inverse(den, max_degree);
    const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n, Integer(0)));
    // Numerator monomials x, y, xy applied to inv(x) * inv(y).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i >= 1) a[i][j] += inv[i - 1] * inv[j];
            if (j >= 1) a[i][j] += inv[i] * inv[j - 1];
            if (i >= 1 && j >= 1) a[i][j] += inv[i - 1] * inv[j - 1];
        }
    return a;
}

}  // namespace hosoya
