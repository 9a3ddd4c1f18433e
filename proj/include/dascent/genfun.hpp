#pragma once

#include <optional>

#include "dascent/polynomial.hpp"
#include "dascent/word.hpp"

// The Fibonacci-polynomial family F_{d,n}, composition polynomials K_{d,n},
// Fibotorials, the self-modified generating function, its shifted rows, the
// large-d limit series, and the weak-descent distribution polynomial.

namespace dascent {

// F_{d,n} = 1 for n < d (negative n included), else F_{d,n-1} + x F_{d,n-d}.
// Counts {1,d}-compositions of n by number of d-parts. d = 0 yields the
// series 1/(1-x)^(n+1): a truncation order is mandatory there and ignored
// for d >= 1.
Poly fib_poly(Entry d, Entry n, std::optional<Entry> trunc = {});

// Length distribution of compositions of n with all parts >= d, extracted
// from (1-y) F_d(x,y). k_poly(d, 0) = 1 for d >= 1; at d = 0 it is the
// truncated series 1/(1-x).
Poly k_poly(Entry d, Entry n, std::optional<Entry> trunc = {});

// Product of fib_poly(d, i) for 0 <= i <= n.
Poly fibotorial(Entry d, Entry n, std::optional<Entry> trunc = {});

// 1 + sum_{k>=1} q^k x^k fibotorial(d, k-1)(x) through x^trunc; q marks the
// maximum entry and x the length of a self-modified d-ascent sequence.
QxSeries self_gf(Entry d, Entry trunc);

// (self_gf(d) - (1 + qx + ... + (qx)^(d-1))) / (qx)^d through x^trunc. The
// division is exact; a remainder indicates an internal bug (logic_error).
QxSeries shifted_self(Entry d, Entry trunc);

// R(q,x) = sum_k (qx)^k (1+x)(1+2x)...(1+kx), the limit of the shifted rows.
QxSeries limit_series(Entry trunc);

// Weak-descent distribution over the 112- and 213-avoiding self-modified
// d-ascent sequences of length n: fib_poly(d+1, n-1) in q. Requires n >= 1.
Poly des_poly(Entry d, Entry n);

}  // namespace dascent
