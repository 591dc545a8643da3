#ifndef HANKEL_VANDERMONDE_HPP
#define HANKEL_VANDERMONDE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hankel/tensor.hpp"

namespace hankel {

struct VandermondeTerm {
  double node = 0.0;
  double coeff = 0.0;

  friend bool operator==(const VandermondeTerm&, const VandermondeTerm&) = default;
};

/// A = sum_k coeff_k (1, u_k, ..., u_k^(n-1))^(tensor m) over distinct nodes
/// u_k with nonzero coefficients. The empty list is the zero tensor.
class VandermondeDecomposition {
 public:
  static constexpr double kNodeSeparation = 1e-12;
  static constexpr double kMinCoeff = 1e-14;

  VandermondeDecomposition() = default;
  /// Throws ArgumentError when nodes collide or a coefficient is (near) zero.
  explicit VandermondeDecomposition(std::vector<VandermondeTerm> terms);

  std::span<const VandermondeTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<VandermondeTerm> terms_;
};

/// Nonnegative point masses; the discrete stand-in for a generating function.
class DiscreteMeasure {
 public:
  /// Throws ArgumentError on negative weights, duplicate nodes or length mismatch.
  DiscreteMeasure(std::vector<double> nodes, std::vector<double> weights);

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// True when |a - b| <= 1e-12 * max(|a|, |b|).
bool nodes_collide(double a, double b);

/// Chebyshev points of the second kind, cos(k pi / (r-1)), k = 0..r-1.
std::vector<double> chebyshev_nodes(int r);

/// Solves sum_k alpha_k u_k^i = b_i (i = 0..r-1) for alpha by the
/// Bjorck-Pereyra scheme. Nodes must be distinct.
std::vector<double> solve_vandermonde(std::span<const double> nodes, std::span<const double> rhs);

/// Decomposition with r = (n-1)m+1 terms on the given (or Chebyshev) nodes,
/// dropping coefficients at or below 1e-12 * max|alpha|.
/// Throws ArgumentError on duplicate nodes, DimensionError on a wrong node
/// count, NumericalError when the solve residual exceeds 1e-6 * max|v|.
VandermondeDecomposition decompose(const HankelTensor& a,
                                   std::optional<std::vector<double>> nodes = std::nullopt);

HankelTensor compose(const VandermondeDecomposition& d, int order, int dim);

/// All coefficients positive: certifies a complete Hankel tensor.
bool is_positive(const VandermondeDecomposition& d);

/// Products of all term pairs; colliding nodes are merged.
VandermondeDecomposition hadamard_vd(const VandermondeDecomposition& d1,
                                     const VandermondeDecomposition& d2);

/// Moments gen[k] = sum_j w_j t_j^k.
HankelTensor from_measure(const DiscreteMeasure& mu, int order, int dim);

}  // namespace hankel

#endif  // HANKEL_VANDERMONDE_HPP
