#include "hankel/tensor.hpp"

#include <cmath>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

namespace {

void require_length(std::span<const double> x, int n, const char* what) {
  if (x.size() != static_cast<std::size_t>(n)) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(n) +
                         ", got " + std::to_string(x.size()));
  }
}

// Coefficients of p(t)^power for p(t) = sum_i x_i t^(i-1).
std::vector<double> power_coefficients(std::span<const double> x, int power) {
  std::vector<double> acc{1.0};
  for (int j = 0; j < power; ++j) acc = poly::convolve(acc, x);
  return acc;
}

}  // namespace

HankelTensor::HankelTensor(int order, int dim, std::vector<double> gen)
    : order_(order), dim_(dim), gen_(std::move(gen)) {
  if (order_ < 2 || dim_ < 2) {
    throw DomainError("Hankel tensor needs order >= 2 and dim >= 2, got order " +
                      std::to_string(order_) + ", dim " + std::to_string(dim_));
  }
  const std::size_t expected = static_cast<std::size_t>(degree()) + 1;
  if (gen_.size() != expected) {
    throw DimensionError("generating vector must have length (dim-1)*order+1 = " +
                         std::to_string(expected) + ", got " + std::to_string(gen_.size()));
  }
  for (std::size_t k = 0; k < gen_.size(); ++k) {
    if (!std::isfinite(gen_[k])) {
      throw ValueError("generating vector entry " + std::to_string(k) + " is not finite");
    }
  }
}

HankelTensor make_hankel(int order, int dim, std::vector<double> gen) {
  return HankelTensor(order, dim, std::move(gen));
}

double entry(const HankelTensor& a, std::span<const int> idx) {
  if (idx.size() != static_cast<std::size_t>(a.order())) {
    throw DimensionError("index tuple must have length " + std::to_string(a.order()));
  }
  int sum = 0;
  for (int i : idx) {
    if (i < 1 || i > a.dim()) {
      throw BoundsError("index " + std::to_string(i) + " outside [1, " +
                        std::to_string(a.dim()) + "]");
    }
    sum += i;
  }
  return a.gen(sum - a.order());
}

double eval_form(const HankelTensor& a, std::span<const double> x) {
  require_length(x, a.dim(), "eval_form");
  const std::vector<double> c = power_coefficients(x, a.order());
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += a.gen()[k] * c[k];
  return acc;
}

std::vector<double> eval_gradient_form(const HankelTensor& a, std::span<const double> x) {
  require_length(x, a.dim(), "eval_gradient_form");
  const std::vector<double> d = power_coefficients(x, a.order() - 1);
  std::vector<double> out(static_cast<std::size_t>(a.dim()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) acc += a.gen()[i + k] * d[k];
    out[i] = acc;
  }
  return out;
}

HankelTensor hadamard(const HankelTensor& a, const HankelTensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) {
    throw DimensionError("Hadamard product needs equal order and dimension");
  }
  std::vector<double> gen(a.gen().size());
  for (std::size_t k = 0; k < gen.size(); ++k) gen[k] = a.gen()[k] * b.gen()[k];
  return HankelTensor(a.order(), a.dim(), std::move(gen));
}

DenseSymmetricTensor to_dense(const HankelTensor& a) {
  std::size_t count = 1;
  for (int j = 0; j < a.order(); ++j) {
    count *= static_cast<std::size_t>(a.dim());
    if (count > DenseSymmetricTensor::kMaxEntries) {
      throw CapacityError("dense expansion exceeds " +
                          std::to_string(DenseSymmetricTensor::kMaxEntries) + " entries");
    }
  }
  DenseSymmetricTensor d{a.order(), a.dim(), std::vector<double>(count)};
  // Row-major: the last index varies fastest. Track the 0-based index sum.
  std::vector<int> idx(static_cast<std::size_t>(a.order()), 0);
  int sum = 0;
  for (std::size_t flat = 0; flat < count; ++flat) {
    d.entries[flat] = a.gen(sum);
    for (int pos = a.order() - 1; pos >= 0; --pos) {
      auto& i = idx[static_cast<std::size_t>(pos)];
      if (++i < a.dim()) {
        ++sum;
        break;
      }
      sum -= i - 1;
      i = 0;
    }
  }
  return d;
}

double dense_eval(const DenseSymmetricTensor& d, std::span<const double> x) {
  require_length(x, d.dim, "dense_eval");
  std::vector<int> idx(static_cast<std::size_t>(d.order), 0);
  double acc = 0.0;
  for (double value : d.entries) {
    double prod = value;
    for (int i : idx) prod *= x[static_cast<std::size_t>(i)];
    acc += prod;
    for (int pos = d.order - 1; pos >= 0; --pos) {
      auto& i = idx[static_cast<std::size_t>(pos)];
      if (++i < d.dim) break;
      i = 0;
    }
  }
  return acc;
}

}  // namespace hankel
