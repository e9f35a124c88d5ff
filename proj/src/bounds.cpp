#include "embtop/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace embtop {

mpq_class bound_exponent(int d) {
    if (d < 1) throw std::invalid_argument("bound exponent: need d >= 1");
    mpz_class three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(d - 1));
    mpq_class e(d + 1);
    e -= mpq_class(1, three_pow);
    e.canonicalize();
    return e;
}

mpz_class bound_ceiling(long long n, int d) {
    if (n < 1) throw std::invalid_argument("bound ceiling: need n >= 1");
    const mpq_class e = bound_exponent(d);
    const mpz_class p = e.get_num();
    const mpz_class q = e.get_den();

    mpz_class n_pow;
    mpz_pow_ui(n_pow.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t(),
               static_cast<unsigned long>(p.get_ui()));
    mpz_class root;
    const int exact =
        mpz_root(root.get_mpz_t(), n_pow.get_mpz_t(), static_cast<unsigned long>(q.get_ui()));
    if (!exact) root += 1;
    return root;
}

std::vector<RecursionLevel> unroll_recursion(int d) {
    if (d < 1) throw std::invalid_argument("recursion: need d >= 1");
    std::vector<RecursionLevel> levels;
    RecursionLevel cur{1, mpq_class(1), mpq_class(1)};
    levels.push_back(cur);
    for (int k = 2; k <= d; ++k) {
        RecursionLevel next;
        next.d = k;
        next.exponent = mpq_class(1) + mpq_class(2 * k, 3) + cur.exponent / 3;
        next.exponent.canonicalize();
        next.c_exponent = mpq_class(1) + cur.c_exponent / 3;
        next.c_exponent.canonicalize();
        levels.push_back(next);
        cur = next;
    }
    return levels;
}

double evaluate_recursion_bound(const RecursionLevel& level, long long n, double c) {
    return std::pow(c, level.c_exponent.get_d()) *
           std::pow(static_cast<double>(n), level.exponent.get_d());
}

}  // namespace embtop
