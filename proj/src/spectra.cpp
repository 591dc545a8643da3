#include "hankel/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hankel/associated.hpp"
#include "hankel/errors.hpp"
#include "hankel/plane.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

namespace {

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double z_residual(const HankelTensor& a, const std::vector<double>& x, double lambda) {
  const std::vector<double> g = eval_gradient_form(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(g[i] - lambda * x[i]));
  return r;
}

double h_residual(const HankelTensor& a, const std::vector<double>& x, double lambda) {
  const std::vector<double> g = eval_gradient_form(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r = std::max(r, std::abs(g[i] - lambda * std::pow(x[i], a.order() - 1)));
  }
  return r;
}

// One power-method run from a unit start vector.
EigenPair power_run(const HankelTensor& a, double sign, double shift, std::vector<double> x,
                    int iters) {
  std::vector<double> g = eval_gradient_form(a, x);
  double lambda = dot(x, g);
  double residual = z_residual(a, x, lambda);
  for (int it = 0; it < iters; ++it) {
    if (residual <= 1e-13 * (1.0 + std::abs(lambda))) break;
    std::vector<double> next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = sign * g[i] + shift * x[i];
    const double nrm = norm2(next);
    if (nrm == 0.0) break;
    for (double& v : next) v /= nrm;
    const double prev = lambda;
    x = std::move(next);
    g = eval_gradient_form(a, x);
    lambda = dot(x, g);
    residual = z_residual(a, x, lambda);
    if (std::abs(lambda - prev) <= 1e-16 * (1.0 + std::abs(lambda)) &&
        residual <= 1e-10 * (1.0 + std::abs(lambda))) {
      break;
    }
  }
  return {lambda, std::move(x), EigenKind::Z, residual <= 1e-8 * (1.0 + std::abs(lambda)),
          residual};
}

// Scale to ||x||_inf = 1 with the largest-magnitude entry positive.
std::vector<double> inf_normalized(std::vector<double> x) {
  const auto it = std::max_element(x.begin(), x.end(),
                                   [](double p, double q) { return std::abs(p) < std::abs(q); });
  const double s = *it;
  for (double& v : x) v /= s;
  return x;
}

void project_to_simplex(std::vector<double>& x) {
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  for (double& v : x) v = std::max(v - theta, 0.0);
}

// Calls visit(x) for every point of the simplex grid {x : x_i = c_i / steps}.
template <typename Visit>
void grid_points(std::vector<double>& x, std::size_t pos, int remaining, int steps,
                 Visit& visit) {
  if (pos + 1 == x.size()) {
    x[pos] = static_cast<double>(remaining) / steps;
    visit(x);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    x[pos] = static_cast<double>(c) / steps;
    grid_points(x, pos + 1, remaining - c, steps, visit);
  }
}

double grid_size(int dim, int steps) {
  // C(steps + dim - 1, dim - 1) in floating point.
  double out = 1.0;
  for (int i = 1; i < dim; ++i) out = out * (steps + i) / i;
  return out;
}

}  // namespace

double power_method_shift(const HankelTensor& a) {
  double s = 0.0;
  for (int k = 0; k <= a.degree(); ++k) {
    s += static_cast<double>(count_s(k, a.order(), a.dim())) * std::abs(a.gen(k));
  }
  return (a.order() - 1) * s;
}

EigenPair zeig_extreme(const HankelTensor& a, Extreme mode, const ZeigOptions& opts) {
  if (opts.restarts < 1) throw ArgumentError("restarts must be at least 1");
  if (opts.iters < 1) throw ArgumentError("iters must be at least 1");
  const double sign = mode == Extreme::Max ? 1.0 : -1.0;
  const double shift = power_method_shift(a);
  const auto n = static_cast<std::size_t>(a.dim());

  std::vector<std::vector<double>> starts;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    starts.push_back(std::move(e));
  }
  for (int r = 0; r < opts.restarts; ++r) {
    // Each restart owns its generator, so results do not depend on run order.
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::vector<double> x(n);
    double nrm = 0.0;
    while (nrm == 0.0) {
      for (double& v : x) v = normal(rng);
      nrm = norm2(x);
    }
    for (double& v : x) v /= nrm;
    starts.push_back(std::move(x));
  }

  std::vector<EigenPair> runs;
  runs.reserve(starts.size());
  for (auto& start : starts) runs.push_back(power_run(a, sign, shift, std::move(start), opts.iters));

  // Best value wins; among near-equal values prefer converged runs, then the earliest.
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    const double better = sign * (runs[i].value - runs[best].value);
    if (better > 1e-14 * (1.0 + std::abs(runs[best].value)) ||
        (std::abs(better) <= 1e-14 * (1.0 + std::abs(runs[best].value)) &&
         runs[i].converged && !runs[best].converged)) {
      best = i;
    }
  }
  return runs[best];
}

std::vector<EigenPair> heig_dim2(const HankelTensor& a) {
  if (a.dim() != 2) throw DomainError("heig_dim2 requires dimension 2");
  const int m = a.order();
  std::vector<EigenPair> out;

  auto accept = [&](std::vector<double> x, double lambda) {
    x = inf_normalized(std::move(x));
    const double r = h_residual(a, x, lambda);
    if (!(r <= 1e-8 * (1.0 + std::abs(lambda)))) return;
    for (const auto& p : out) {
      if (std::abs(p.value - lambda) <= 1e-9 && std::abs(p.vector[0] - x[0]) <= 1e-9 &&
          std::abs(p.vector[1] - x[1]) <= 1e-9) {
        return;
      }
    }
    out.push_back({lambda, std::move(x), EigenKind::H, true, r});
  };

  // x = (0, 1): A x^(m-1) = (v_{m-1}, v_m).
  accept({0.0, 1.0}, a.gen(m));

  // x = (1, t): F1 = sum_k C(m-1,k) v_k t^k, F2 = sum_k C(m-1,k) v_{k+1} t^k.
  std::vector<double> f1(static_cast<std::size_t>(m), 0.0);
  std::vector<double> f2(static_cast<std::size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    const double c = static_cast<double>(poly::binomial(m - 1, k));
    f1[static_cast<std::size_t>(k)] = c * a.gen(k);
    f2[static_cast<std::size_t>(k)] = c * a.gen(k + 1);
  }
  std::vector<double> g(static_cast<std::size_t>(2 * (m - 1)) + 1, 0.0);
  for (int k = 0; k < m; ++k) {
    g[static_cast<std::size_t>(k)] += f2[static_cast<std::size_t>(k)];
    g[static_cast<std::size_t>(k + m - 1)] -= f1[static_cast<std::size_t>(k)];
  }
  double vmax = 0.0;
  for (double v : a.gen()) vmax = std::max(vmax, std::abs(v));
  double gmax = 0.0;
  for (double v : g) gmax = std::max(gmax, std::abs(v));

  std::vector<double> ts;
  if (gmax <= 1e-14 * std::max(1.0, vmax)) {
    // Every (1, t) is an eigenvector; report representatives.
    ts = {-1.0, 0.0, 1.0};
  } else {
    ts = poly::real_roots(g);
  }
  for (double t : ts) accept({1.0, t}, poly::evaluate(f1, t));
  return out;
}

ZBounds bounds_prop6(const HankelTensor& a) {
  double lo = a.gen(0);
  double hi = a.gen(0);
  for (int i = 1; i < a.dim(); ++i) {
    lo = std::min(lo, a.gen(i * a.order()));
    hi = std::max(hi, a.gen(i * a.order()));
  }
  return {lo, hi, BoundSource::Prop6};
}

double plane_bound_scale(int order, int dim, double y1, double y2) {
  const int l = (dim - 1) * order;
  double acc = 0.0;
  for (int k = 0; k <= l; ++k) {
    acc += static_cast<double>(count_s(k, order, dim)) * std::pow(y1, 2 * (l - k)) *
           std::pow(y2, 2 * k);
  }
  return std::sqrt(acc);
}

ZBounds bounds_prop7(const HankelTensor& a) {
  if (a.degree() % 2 != 0) {
    throw PreconditionError("plane-tensor bounds need m(n-1) even");
  }
  const PlaneExtremes ext = z_extremes(assoc_plane(a));
  ZBounds out{std::nullopt, std::nullopt, BoundSource::Prop7};
  const double smin = plane_bound_scale(a.order(), a.dim(), ext.y_min[0], ext.y_min[1]);
  const double smax = plane_bound_scale(a.order(), a.dim(), ext.y_max[0], ext.y_max[1]);
  if (smin >= 1e-14) out.upper_for_min = ext.lambda_min / smin;
  if (smax >= 1e-14) out.lower_for_max = ext.lambda_max / smax;
  return out;
}

bool odd_sign_check(const EigenPair& pair, SignClass cls, int order) {
  if (order % 2 == 0) throw DomainError("sign pattern holds only for odd order");
  if (pair.kind != EigenKind::Z) throw ArgumentError("sign pattern applies to Z-eigenpairs");
  if (pair.vector.empty()) throw DimensionError("eigenvector is empty");
  if (pair.value == 0.0) return true;
  const double s = pair.value > 0.0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < pair.vector.size(); i += 2) {
    if (s * pair.vector[i] < -1e-9) return false;
  }
  if (cls == SignClass::Complete && s * pair.vector[0] < 1e-12) return false;
  return true;
}

std::optional<std::vector<double>> copositive_falsify(const HankelTensor& a, int depth) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  constexpr double kBudget = 2e6;
  int steps = depth;
  while (steps > 1 && grid_size(a.dim(), steps) > kBudget) --steps;

  std::vector<double> best;
  double best_value = 0.0;
  auto visit = [&](const std::vector<double>& x) {
    const double v = eval_form(a, x);
    if (best.empty() || v < best_value) {
      best_value = v;
      best = x;
    }
  };
  std::vector<double> x(static_cast<std::size_t>(a.dim()));
  grid_points(x, 0, steps, steps, visit);

  // Projected gradient with backtracking from the worst grid point.
  double step = 1.0 / std::max(1.0, power_method_shift(a) * a.order());
  for (int it = 0; it < 20; ++it) {
    const std::vector<double> grad = eval_gradient_form(a, best);
    bool improved = false;
    for (int tries = 0; tries < 30 && !improved; ++tries) {
      std::vector<double> trial(best.size());
      for (std::size_t i = 0; i < best.size(); ++i) {
        trial[i] = best[i] - step * a.order() * grad[i];
      }
      project_to_simplex(trial);
      const double v = eval_form(a, trial);
      if (v < best_value) {
        best_value = v;
        best = std::move(trial);
        improved = true;
        step *= 2.0;
      } else {
        step *= 0.5;
      }
    }
    if (!improved) break;
  }
  if (best_value < -1e-12) return best;
  return std::nullopt;
}

}  // namespace hankel
