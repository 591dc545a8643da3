#ifndef HANKEL_PLANE_HPP
#define HANKEL_PLANE_HPP

#include <array>
#include <optional>
#include <vector>

#include "hankel/associated.hpp"

namespace hankel {

struct CopositivityReport {
  bool is_copositive = true;
  /// t in [0, 1] with phi(t) below the reporting threshold.
  std::optional<double> witness_t;
  /// Always contains 0 and 1, ascending.
  std::vector<double> critical_points;
  double min_phi = 0.0;
};

struct PlaneExtremes {
  double lambda_min = 0.0;
  std::array<double, 2> y_min{1.0, 0.0};
  double lambda_max = 0.0;
  std::array<double, 2> y_max{1.0, 0.0};
};

/// phi(t) = sum_k C(l,k) p_k t^(l-k) (1-t)^k, i.e. P y^l on the segment
/// y = (t, 1-t). Evaluated by de Casteljau in the Bernstein basis, so
/// phi(0) = p_l and phi(1) = p_0 exactly.
double phi_eval(const PlaneTensor& p, double t);

/// Monomial coefficients of phi. Throws NumericalError when the basis change
/// inflates coefficients by more than 1e12.
std::vector<double> phi_monomial(const PlaneTensor& p);

/// Copositivity of a plane tensor: endpoint test, then phi at every real
/// root of phi' in (0, 1). Values within tol * max(1, max|p_k|) of zero count
/// as nonnegative.
CopositivityReport copositive_check(const PlaneTensor& p, double tol = kDefaultTol);

/// Extremes of P y^l over the unit circle.
PlaneExtremes z_extremes(const PlaneTensor& p);

}  // namespace hankel

#endif  // HANKEL_PLANE_HPP
