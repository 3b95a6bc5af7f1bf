#pragma once

#include <gmpxx.h>

#include <vector>

namespace hosoya {

using Integer = mpz_class;

/// Window carried by the fast-doubling ladder: lo = F(n), hi = F(n+1).
struct FibPair {
    long long index = 0;
    Integer lo;
    Integer hi;
};

/// (F(n), F(n+1)) for any signed index, O(log |n|) big multiplications.
FibPair fib_pair(long long n);

/// F(n) with F(0) = 0, F(1) = 1; F(-n) = (-1)^(n-1) F(n).
Integer fib(long long n);

/// L(n) = F(n-1) + F(n+1); L(0) = 2, L(1) = 1.
Integer lucas(long long n);

/// F(0)..F(n) in one pass. Row and census scanners share this prefix
/// instead of issuing n independent fib() calls.
std::vector<Integer> fib_prefix(long long n);

}  // namespace hosoya
