#ifndef HANKEL_ASSOCIATED_HPP
#define HANKEL_ASSOCIATED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hankel/tensor.hpp"

namespace hankel {

inline constexpr double kDefaultTol = 1e-10;

/// Square Hankel matrix built from a tensor's generating vector, entry
/// (i, j) = w[i + j] (0-based). When (n-1)m is odd the corner entry
/// w[2q-2] is a free completion scalar.
class HankelMatrix {
 public:
  HankelMatrix(int size, std::vector<double> w, std::optional<double> completion);

  int size() const noexcept { return size_; }
  std::span<const double> w() const noexcept { return w_; }
  std::optional<double> completion() const noexcept { return completion_; }
  double operator()(int i, int j) const { return w_[static_cast<std::size_t>(i + j)]; }
  /// Row-major copy of the full matrix.
  std::vector<double> dense() const;
  double max_abs_entry() const;

 private:
  int size_;
  std::vector<double> w_;
  std::optional<double> completion_;
};

struct PsdResult {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  /// Unit eigenvector of the minimal eigenvalue, set only when it is negative.
  std::optional<std::vector<double>> witness;
};

struct StrongCertificate {
  bool is_strong = false;
  double min_eigenvalue = 0.0;
  std::optional<double> completion_used;
  /// z with z^T M z < 0 for the reported matrix, when not strong.
  std::optional<std::vector<double>> violation_vector;
  HankelMatrix matrix;
};

/// Symmetric tensor of dimension 2 stored by its l+1 distinct entries:
/// p[k] is the entry with k indices equal to 2.
class PlaneTensor {
 public:
  PlaneTensor(int degree, std::vector<double> coeffs);

  int degree() const noexcept { return degree_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  double max_abs_coeff() const;

  friend bool operator==(const PlaneTensor&, const PlaneTensor&) = default;

 private:
  int degree_;
  std::vector<double> coeffs_;
};

/// P y^l = sum_k C(l,k) p_k y1^(l-k) y2^k.
double plane_form(const PlaneTensor& p, double y1, double y2);

struct NecessaryCheck {
  bool passes = true;
  /// Least 1-based i with v_{(i-1)m} < 0.
  std::optional<int> failing_index;
};

/// Number of tuples in [n]^m whose entries sum to k + m.
std::uint64_t count_s(int k, int m, int n);

/// Throws ArgumentError if a completion is supplied while (n-1)m is even.
HankelMatrix assoc_matrix(const HankelTensor& a, std::optional<double> completion = std::nullopt);

PsdResult psd_check(const HankelMatrix& m, double tol = kDefaultTol);

/// All eigenvalues, ascending.
std::vector<double> eigenvalues(const HankelMatrix& m);

/// Decides whether the associated Hankel matrix is (or, in the odd case, can be
/// completed to be) positive semi-definite. The odd case uses the Schur
/// complement: with P the leading block and b the border column, a PSD
/// completion exists iff P is PSD and b lies in range(P); the smallest such
/// completion is b^T P^+ b.
StrongCertificate is_strong(const HankelTensor& a, double tol = kDefaultTol);

/// Plane tensor of degree (n-1)m with p_k = s(k,m,n) v_k / C((n-1)m, k).
PlaneTensor assoc_plane(const HankelTensor& a);

/// v_{(i-1)m} >= 0 for all i; necessary for copositivity.
NecessaryCheck copositive_necessary(const HankelTensor& a);

}  // namespace hankel

#endif  // HANKEL_ASSOCIATED_HPP
