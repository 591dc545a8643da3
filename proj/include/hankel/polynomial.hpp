#ifndef HANKEL_POLYNOMIAL_HPP
#define HANKEL_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

// Univariate polynomial helpers. Coefficients are stored in ascending order,
// c[0] + c[1] t + ... + c[d] t^d.
namespace hankel::poly {

// Exact binomial coefficient C(n, k). Throws CapacityError when the value
// does not fit in a signed 64-bit integer.
std::int64_t binomial(int n, int k);

std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

double evaluate(std::span<const double> c, double t);

std::vector<double> derivative(std::span<const double> c);

// Drops trailing coefficients whose magnitude is at most rel * max|c|.
std::vector<double> trimmed(std::span<const double> c, double rel = 0.0);

// Distinct real roots in the half-open interval (lo, hi], ascending.
// Isolation uses a Sturm chain, so no root is skipped regardless of
// multiplicity; each root is then polished by bracketed Newton steps.
std::vector<double> real_roots(std::span<const double> c, double lo, double hi);

// Distinct real roots on the whole line (Cauchy bound on the magnitude).
std::vector<double> real_roots(std::span<const double> c);

}  // namespace hankel::poly

#endif  // HANKEL_POLYNOMIAL_HPP
