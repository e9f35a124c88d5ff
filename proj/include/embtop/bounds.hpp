#pragma once

#include <gmpxx.h>

#include <vector>

namespace embtop {

/// Exact exponent e(d) = d + 1 - 3^{-(d-1)} governing the f_d(n) upper bound.
/// e(1) = 1, e(2) = 8/3, e(3) = 35/9, ...
mpq_class bound_exponent(int d);

/// ceil(n^{e(d)}) computed exactly: the least integer c with c^q >= n^p where
/// e(d) = p/q in lowest terms.
mpz_class bound_ceiling(long long n, int d);

/// One unrolled level of the recursion phi_d <= c * n^{1 + 2d/3} * phi_{d-1}^{1/3}:
/// phi_d(n) <= c^{c_exponent} * n^{exponent}. The constant stays symbolic.
struct RecursionLevel {
    int d = 0;
    mpq_class exponent;    // e(d)
    mpq_class c_exponent;  // sum of 3^{-i} weights accumulated on c
};

/// Unrolls the recursion from phi_1(n) <= c n down to the requested d and
/// returns every level. The exponents must (and do) match bound_exponent.
std::vector<RecursionLevel> unroll_recursion(int d);

/// Numeric convenience: c^{c_exponent} * n^{exponent} in double precision for
/// a concrete constant c.
double evaluate_recursion_bound(const RecursionLevel& level, long long n, double c);

}  // namespace embtop
