#ifndef HANKEL_TENSOR_HPP
#define HANKEL_TENSOR_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace hankel {

/// Symmetric order-m, dimension-n tensor whose entry a(i_1..i_m) depends only
/// on i_1 + ... + i_m. The generating vector v_0..v_{(n-1)m} is the whole
/// tensor: a(i_1..i_m) = v[i_1 + ... + i_m - m] with 1-based indices.
class HankelTensor {
 public:
  /// Validates the shape and finiteness of `gen`.
  /// Throws DomainError (order or dim < 2), DimensionError (length),
  /// ValueError (non-finite entry).
  HankelTensor(int order, int dim, std::vector<double> gen);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  /// (n-1)m, the largest index of the generating vector.
  int degree() const noexcept { return (dim_ - 1) * order_; }
  std::span<const double> gen() const noexcept { return gen_; }
  double gen(int k) const { return gen_.at(static_cast<std::size_t>(k)); }

  friend bool operator==(const HankelTensor&, const HankelTensor&) = default;

 private:
  int order_;
  int dim_;
  std::vector<double> gen_;
};

/// Dense row-major storage of a symmetric tensor; test oracle only.
struct DenseSymmetricTensor {
  static constexpr std::size_t kMaxEntries = 10'000'000;

  int order = 0;
  int dim = 0;
  std::vector<double> entries;
};

HankelTensor make_hankel(int order, int dim, std::vector<double> gen);

/// 1-based multi-index access. Throws BoundsError / DimensionError.
double entry(const HankelTensor& a, std::span<const int> idx);

/// A x^m, computed from the coefficients of p(t)^m with p(t) = sum_i x_i t^(i-1).
double eval_form(const HankelTensor& a, std::span<const double> x);

/// A x^(m-1), the n-vector whose i-th entry is the form with one index fixed to i.
std::vector<double> eval_gradient_form(const HankelTensor& a, std::span<const double> x);

/// Entrywise product; acts componentwise on generating vectors.
HankelTensor hadamard(const HankelTensor& a, const HankelTensor& b);

/// Throws CapacityError when dim^order exceeds DenseSymmetricTensor::kMaxEntries.
DenseSymmetricTensor to_dense(const HankelTensor& a);

/// Naive sum over all dim^order index tuples.
double dense_eval(const DenseSymmetricTensor& d, std::span<const double> x);

}  // namespace hankel

#endif  // HANKEL_TENSOR_HPP
