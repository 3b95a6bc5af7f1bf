#include "hosoya/fib.hpp"

#include <stdexcept>

namespace hosoya {

namespace {

// Binary fast doubling, most significant bit first:
//   F(2m)   = F(m) * (2 F(m+1) - F(m))
//   F(2m+1) = F(m)^2 + F(m+1)^2
void fib_pair_unsigned(unsigned long long m, Integer& lo, Integer& hi) {
    lo = 0;
    hi = 1;
    if (m == 0) return;
    int top = 63;
    while (!((m >> top) & 1ULL)) --top;
    Integer even_term, odd_term;
    for (int b = top; b >= 0; --b) {
        even_term = hi;
        even_term <<= 1;
        even_term -= lo;
        even_term *= lo;            // F(2m)
        odd_term = lo * lo + hi * hi;  // F(2m+1)
        if ((m >> b) & 1ULL) {
            lo = odd_term;
            hi = even_term + odd_term;
        } else {
            lo.swap(even_term);
            hi.swap(odd_term);
        }
    }
}

}  // namespace

FibPair fib_pair(long long n) {
    FibPair out;
    out.index = n;
    if (n >= 0) {
        fib_pair_unsigned(static_cast<unsigned long long>(n), out.lo, out.hi);
        return out;
    }
    // Negative indices: compute the window at m = |n|, then mirror with
    // F(-j) = (-1)^(j-1) F(j). Never run the recurrence backwards.
    unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
    Integer lo, hi;
    fib_pair_unsigned(m, lo, hi);
    Integer prev = hi - lo;  // F(m-1)
    out.lo = (m % 2 == 0) ? Integer(-lo) : lo;            // F(-m)
    out.hi = ((m - 1) % 2 == 0) ? Integer(-prev) : prev;  // F(-(m-1))
    return out;
}

Integer fib(long long n) { return fib_pair(n).lo; }

Integer lucas(long long n) {
    FibPair p = fib_pair(n);
    return 2 * p.hi - p.lo;
}

std::vector<Integer> fib_prefix(long long n) {
    if (n < 0) throw std::invalid_argument("fib_prefix: negative length");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.emplace_back(0);
    if (n == 0) return out;
    out.emplace_back(1);
    for (long long i = 2; i <= n; ++i) out.push_back(out[i - 1] + out[i - 2]);
    return out;
}

}  // namespace hosoya
