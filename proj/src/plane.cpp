#include "hankel/plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

namespace {

constexpr int kScanSamples = 4096;

// sum_{k=0}^{d} C(d,k) p_{k+offset} c^(d-k) s^k; zero for d < 0.
double shifted_form(const PlaneTensor& p, int offset, int d, double c, double s) {
  if (d < 0) return 0.0;
  double acc = 0.0;
  double spow = 1.0;
  for (int k = 0; k <= d; ++k) {
    acc += static_cast<double>(poly::binomial(d, k)) * p.coeff(k + offset) *
           std::pow(c, d - k) * spow;
    spow *= s;
  }
  return acc;
}

struct CircleSample {
  double g;
  double dg;
  double d2g;
};

CircleSample on_circle(const PlaneTensor& p, double theta) {
  const int l = p.degree();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double g = shifted_form(p, 0, l, c, s);
  const double g1 = shifted_form(p, 0, l - 1, c, s);
  const double g2 = shifted_form(p, 1, l - 1, c, s);
  const double h11 = shifted_form(p, 0, l - 2, c, s);
  const double h12 = shifted_form(p, 1, l - 2, c, s);
  const double h22 = shifted_form(p, 2, l - 2, c, s);
  // Tangent (-s, c); Euler's identity gives grad . y = l g.
  const double dg = l * (-s * g1 + c * g2);
  const double d2g = l * (l - 1) * (s * s * h11 - 2.0 * s * c * h12 + c * c * h22) - l * g;
  return {g, dg, d2g};
}

// Safeguarded Newton on g' inside [lo, hi] where g' changes sign.
double refine_stationary(const PlaneTensor& p, double lo, double hi, double gscale) {
  double flo = on_circle(p, lo).dg;
  double fhi = on_circle(p, hi).dg;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const CircleSample cs = on_circle(p, x);
    if (std::abs(cs.dg) <= 1e-12 * gscale) break;
    if ((cs.dg < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = cs.dg;
    } else {
      hi = x;
    }
    double next = cs.d2g != 0.0 ? x - cs.dg / cs.d2g : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(x))) break;
    x = next;
  }
  return x;
}

}  // namespace

double phi_eval(const PlaneTensor& p, double t) {
  const int l = p.degree();
  // Bernstein coefficients b_j = p_{l-j}.
  std::vector<double> b(p.coeffs().rbegin(), p.coeffs().rend());
  const double u = 1.0 - t;
  for (int r = 1; r <= l; ++r) {
    for (int j = 0; j + r <= l; ++j) {
      b[static_cast<std::size_t>(j)] = u * b[static_cast<std::size_t>(j)] +
                                       t * b[static_cast<std::size_t>(j) + 1];
    }
  }
  return b[0];
}

std::vector<double> phi_monomial(const PlaneTensor& p) {
  const int l = p.degree();
  std::vector<double> a(static_cast<std::size_t>(l) + 1, 0.0);
  // phi = sum_j b_j C(l,j) t^j (1-t)^(l-j); coefficient of t^i is
  // sum_{j<=i} b_j C(l,i) C(i,j) (-1)^(i-j).
  for (int i = 0; i <= l; ++i) {
    const double cli = static_cast<double>(poly::binomial(l, i));
    double acc = 0.0;
    for (int j = 0; j <= i; ++j) {
      const double term = cli * static_cast<double>(poly::binomial(i, j)) * p.coeff(l - j);
      acc += (i - j) % 2 == 0 ? term : -term;
    }
    a[static_cast<std::size_t>(i)] = acc;
  }
  const double pmax = p.max_abs_coeff();
  double amax = 0.0;
  for (double v : a) amax = std::max(amax, std::abs(v));
  if (pmax > 0.0 && amax > 1e12 * pmax) {
    throw NumericalError("Bernstein to monomial conversion growth exceeds 1e12", amax / pmax);
  }
  return a;
}

CopositivityReport copositive_check(const PlaneTensor& p, double tol) {
  if (tol < 0.0) throw ArgumentError("tolerance must be nonnegative");
  const double p0 = p.coeff(0);
  const double pl = p.coeff(p.degree());

  CopositivityReport out;
  out.critical_points = {0.0, 1.0};
  if (p0 < -tol || pl < -tol) {
    out.is_copositive = false;
    out.min_phi = std::min(p0, pl);
    out.witness_t = p0 <= pl ? 1.0 : 0.0;
    return out;
  }

  const std::vector<double> dphi = poly::derivative(phi_monomial(p));
  for (double t : poly::real_roots(dphi, 0.0, 1.0)) {
    if (t > 0.0 && t < 1.0) out.critical_points.push_back(t);
  }
  std::sort(out.critical_points.begin(), out.critical_points.end());

  double best_t = 0.0;
  out.min_phi = phi_eval(p, 0.0);
  for (double t : out.critical_points) {
    const double v = phi_eval(p, t);
    if (v < out.min_phi) {
      out.min_phi = v;
      best_t = t;
    }
  }
  if (out.min_phi < -tol * std::max(1.0, p.max_abs_coeff())) {
    out.is_copositive = false;
    out.witness_t = best_t;
  }
  return out;
}

PlaneExtremes z_extremes(const PlaneTensor& p) {
  const int l = p.degree();
  double gscale = 1.0;
  {
    double s = 0.0;
    for (int k = 0; k <= l; ++k) {
      s += static_cast<double>(poly::binomial(l, k)) * std::abs(p.coeff(k));
    }
    gscale = std::max(1.0, s);
  }

  const double step = 2.0 * std::numbers::pi / kScanSamples;
  std::vector<double> g(kScanSamples);
  for (int j = 0; j < kScanSamples; ++j) g[static_cast<std::size_t>(j)] = on_circle(p, j * step).g;
  auto at = [&](int j) { return g[static_cast<std::size_t>((j + kScanSamples) % kScanSamples)]; };

  const auto [min_it, max_it] = std::minmax_element(g.begin(), g.end());
  double best_min_theta = static_cast<double>(min_it - g.begin()) * step;
  double best_max_theta = static_cast<double>(max_it - g.begin()) * step;
  double best_min = *min_it;
  double best_max = *max_it;

  auto consider = [&](double theta) {
    const double v = on_circle(p, theta).g;
    if (v < best_min) {
      best_min = v;
      best_min_theta = theta;
    }
    if (v > best_max) {
      best_max = v;
      best_max_theta = theta;
    }
  };

  for (int j = 0; j < kScanSamples; ++j) {
    const double prev = at(j - 1);
    const double cur = at(j);
    const double next = at(j + 1);
    const bool local_min = cur <= prev && cur <= next && (cur < prev || cur < next);
    const bool local_max = cur >= prev && cur >= next && (cur > prev || cur > next);
    if (!local_min && !local_max) continue;
    const double lo = (j - 1) * step;
    const double hi = (j + 1) * step;
    const double dlo = on_circle(p, lo).dg;
    const double dhi = on_circle(p, hi).dg;
    if ((dlo <= 0.0) != (dhi <= 0.0) || dlo == 0.0 || dhi == 0.0) {
      consider(refine_stationary(p, lo, hi, gscale));
    }
  }

  PlaneExtremes out;
  out.y_min = {std::cos(best_min_theta), std::sin(best_min_theta)};
  out.y_max = {std::cos(best_max_theta), std::sin(best_max_theta)};
  out.lambda_min = plane_form(p, out.y_min[0], out.y_min[1]);
  out.lambda_max = plane_form(p, out.y_max[0], out.y_max[1]);
  return out;
}

}  // namespace hankel
