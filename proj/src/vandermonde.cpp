#include "hankel/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

void require_distinct(std::vector<double> nodes, const char* what) {
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes_collide(nodes[i - 1], nodes[i])) {
      throw ArgumentError(std::string(what) + ": nodes must be pairwise distinct");
    }
  }
}

// moments[i] = sum_k coeff_k node_k^i for i = 0..count-1, with 0^0 = 1.
std::vector<double> moments(std::span<const double> nodes, std::span<const double> coeffs,
                            int count) {
  std::vector<double> out(static_cast<std::size_t>(count), 0.0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    double power = 1.0;
    for (auto& slot : out) {
      slot += coeffs[k] * power;
      power *= nodes[k];
    }
  }
  return out;
}

}  // namespace

bool nodes_collide(double a, double b) {
  return std::abs(a - b) <=
         VandermondeDecomposition::kNodeSeparation * std::max(std::abs(a), std::abs(b));
}

VandermondeDecomposition::VandermondeDecomposition(std::vector<VandermondeTerm> terms)
    : terms_(std::move(terms)) {
  std::vector<double> nodes;
  for (const auto& t : terms_) {
    if (!std::isfinite(t.node) || !std::isfinite(t.coeff)) {
      throw ValueError("decomposition term is not finite");
    }
    if (std::abs(t.coeff) <= kMinCoeff) {
      throw ArgumentError("decomposition coefficients must be nonzero");
    }
    nodes.push_back(t.node);
  }
  require_distinct(std::move(nodes), "Vandermonde decomposition");
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) {
    throw ArgumentError("measure needs as many weights as nodes");
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!std::isfinite(nodes_[j]) || !std::isfinite(weights_[j])) {
      throw ValueError("measure entry is not finite");
    }
    if (weights_[j] < 0.0) {
      throw ArgumentError("measure weight " + std::to_string(j) + " is negative");
    }
  }
  require_distinct(nodes_, "measure");
}

std::vector<double> chebyshev_nodes(int r) {
  if (r < 1) throw DomainError("need at least one node");
  if (r == 1) return {0.0};
  std::vector<double> out(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    out[static_cast<std::size_t>(k)] = std::cos(k * std::numbers::pi / (r - 1));
  }
  return out;
}

std::vector<double> solve_vandermonde(std::span<const double> nodes,
                                      std::span<const double> rhs) {
  if (nodes.size() != rhs.size()) {
    throw DimensionError("Vandermonde system needs as many nodes as right-hand sides");
  }
  require_distinct({nodes.begin(), nodes.end()}, "Vandermonde system");
  std::vector<double> z(rhs.begin(), rhs.end());
  const std::size_t n = z.size();
  if (n == 0) return z;
  // Golub & Van Loan, Algorithm 4.6.2 (primal system V z = b with V_ij = x_j^i).
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) z[i] -= nodes[k] * z[i - 1];
  }
  for (std::size_t kk = n - 1; kk-- > 0;) {
    for (std::size_t i = kk + 1; i < n; ++i) z[i] /= nodes[i] - nodes[i - kk - 1];
    for (std::size_t i = kk; i + 1 < n; ++i) z[i] -= z[i + 1];
  }
  return z;
}

VandermondeDecomposition decompose(const HankelTensor& a,
                                   std::optional<std::vector<double>> nodes) {
  const int r = a.degree() + 1;
  std::vector<double> u = nodes ? std::move(*nodes) : chebyshev_nodes(r);
  if (u.size() != static_cast<std::size_t>(r)) {
    throw DimensionError("decompose needs exactly " + std::to_string(r) + " nodes, got " +
                         std::to_string(u.size()));
  }
  for (double x : u) {
    if (!std::isfinite(x)) throw ValueError("node is not finite");
  }
  const std::vector<double> alpha = solve_vandermonde(u, a.gen());

  double vnorm = 0.0;
  for (double v : a.gen()) vnorm = std::max(vnorm, std::abs(v));
  const std::vector<double> back = moments(u, alpha, r);
  double residual = 0.0;
  for (int i = 0; i < r; ++i) {
    residual = std::max(residual, std::abs(back[static_cast<std::size_t>(i)] - a.gen(i)));
  }
  if (!std::isfinite(residual) || residual > 1e-6 * vnorm) {
    throw NumericalError("Vandermonde solve is ill-conditioned", residual);
  }

  double amax = 0.0;
  for (double x : alpha) amax = std::max(amax, std::abs(x));
  const double cutoff = std::max(1e-12 * amax, VandermondeDecomposition::kMinCoeff);
  std::vector<VandermondeTerm> terms;
  for (int k = 0; k < r; ++k) {
    const double c = alpha[static_cast<std::size_t>(k)];
    if (std::abs(c) > cutoff) terms.push_back({u[static_cast<std::size_t>(k)], c});
  }
  return VandermondeDecomposition(std::move(terms));
}

HankelTensor compose(const VandermondeDecomposition& d, int order, int dim) {
  if (order < 2 || dim < 2) throw DomainError("compose needs order >= 2 and dim >= 2");
  std::vector<double> nodes;
  std::vector<double> coeffs;
  for (const auto& t : d.terms()) {
    nodes.push_back(t.node);
    coeffs.push_back(t.coeff);
  }
  return HankelTensor(order, dim, moments(nodes, coeffs, (dim - 1) * order + 1));
}

bool is_positive(const VandermondeDecomposition& d) {
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [](const VandermondeTerm& t) { return t.coeff > 0.0; });
}

VandermondeDecomposition hadamard_vd(const VandermondeDecomposition& d1,
                                     const VandermondeDecomposition& d2) {
  std::vector<VandermondeTerm> products;
  for (const auto& a : d1.terms()) {
    for (const auto& b : d2.terms()) products.push_back({a.node * b.node, a.coeff * b.coeff});
  }
  std::sort(products.begin(), products.end(),
            [](const auto& x, const auto& y) { return x.node < y.node; });
  std::vector<VandermondeTerm> merged;
  for (const auto& t : products) {
    if (!merged.empty() && nodes_collide(merged.back().node, t.node)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const VandermondeTerm& t) {
    return std::abs(t.coeff) <= VandermondeDecomposition::kMinCoeff;
  });
  return VandermondeDecomposition(std::move(merged));
}

HankelTensor from_measure(const DiscreteMeasure& mu, int order, int dim) {
  if (order < 2 || dim < 2) throw DomainError("from_measure needs order >= 2 and dim >= 2");
  return HankelTensor(order, dim, moments(mu.nodes(), mu.weights(), (dim - 1) * order + 1));
}

}  // namespace hankel
