#pragma once

#include <cstdint>
#include <utility>

namespace starsearch {

// Closed-form constants for the m-ray star. rho_star = m^m/(m-1)^(m-1) is the
// best geometric constant, r_star = 1 + 2*rho_star the optimal competitive
// ratio, b_opt = m/(m-1) the base attaining it.
struct SearchConstants {
    int m = 2;
    double rho_star = 4.0;
    double r_star = 9.0;
    double b_opt = 2.0;
};

SearchConstants search_constants(int m);

// (r - 1) / 2. Throws std::domain_error if r < r_star(m).
double rho_r(int m, double r);

// Largest real b > 1 with b^m/(b-1) == rho_r(m, r). Bisection on
// [b_opt, rho_r + 1] plus a Newton polish; at r == r_star returns b_opt
// (double root). Throws std::domain_error if r < r_star(m).
double solve_base(int m, double r);

// Sum of binomial coefficients C(n, 0) + ... + C(n, m), exact integer
// arithmetic. Domain: 0 <= m <= n <= 64 (and the result must fit 64 bits,
// which only excludes n == m == 64). Throws std::domain_error otherwise.
std::uint64_t binom_tail(int n, int m);

// Binary entropy -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

// {lower, upper} with lower = 2^(n H(m/n)) / sqrt(8 m (1 - m/n)) and
// upper = 2^(n H(m/n)); brackets binom_tail(n, m) for 0 < m < n/2.
// Throws std::domain_error outside that range.
std::pair<double, double> entropy_sandwich(int n, int m);

}  // namespace starsearch
