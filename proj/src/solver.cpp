#include "starsearch/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace starsearch {

namespace {

double pow_int(double base, int e) {
    double v = 1.0;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

// b^m / (b - 1), the quantity a base-b geometric strategy must keep below
// rho_r to stay r-competitive.
double geometric_constant(int m, double b) { return pow_int(b, m) / (b - 1.0); }

}  // namespace

SearchConstants search_constants(int m) {
    if (m < 2) throw std::domain_error("search_constants: m must be >= 2");
    const double rho = pow_int(double(m), m) / pow_int(double(m - 1), m - 1);
    return SearchConstants{m, rho, 1.0 + 2.0 * rho, double(m) / double(m - 1)};
}

double rho_r(int m, double r) {
    const SearchConstants c = search_constants(m);
    if (r < c.r_star - 1e-9) throw std::domain_error("rho_r: r below the optimal ratio for this m");
    return (r - 1.0) / 2.0;
}

double solve_base(int m, double r) {
    const SearchConstants c = search_constants(m);
    const double target = rho_r(m, r);  // validates the domain
    if (target <= c.rho_star * (1.0 + 1e-14)) return c.b_opt;

    double lo = c.b_opt;
    double hi = target + 1.0;
    while (geometric_constant(m, hi) < target) hi *= 2.0;
    // f is increasing on [b_opt, inf): plain bisection, then Newton polish.
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (geometric_constant(m, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    double b = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double bm1 = pow_int(b, m - 1);
        const double f = bm1 * b / (b - 1.0) - target;
        const double df = bm1 * (m * (b - 1.0) - b) / ((b - 1.0) * (b - 1.0));
        if (df <= 0.0) break;
        const double step = f / df;
        const double nb = b - step;
        if (nb <= 1.0 || !std::isfinite(nb)) break;
        b = nb;
    }
    return b;
}

std::uint64_t binom_tail(int n, int m) {
    if (n < 0 || n > 64 || m < 0 || m > n)
        throw std::domain_error("binom_tail: need 0 <= m <= n <= 64");
    unsigned __int128 sum = 0;
    unsigned __int128 coeff = 1;  // C(n, 0)
    for (int j = 0; j <= m; ++j) {
        sum += coeff;
        coeff = coeff * (unsigned __int128)(n - j) / (unsigned __int128)(j + 1);
    }
    if (sum > (unsigned __int128)std::numeric_limits<std::uint64_t>::max())
        throw std::domain_error("binom_tail: result exceeds 64 bits");
    return (std::uint64_t)sum;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

std::pair<double, double> entropy_sandwich(int n, int m) {
    if (!(m > 0 && 2 * m < n)) throw std::domain_error("entropy_sandwich: need 0 < m < n/2");
    const double frac = double(m) / double(n);
    const double upper = std::exp2(double(n) * binary_entropy(frac));
    const double lower = upper / std::sqrt(8.0 * double(m) * (1.0 - frac));
    return {lower, upper};
}

}  // namespace starsearch
