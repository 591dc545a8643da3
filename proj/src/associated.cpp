#include "hankel/associated.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

namespace {

Eigen::MatrixXd to_eigen(const HankelMatrix& m) {
  const int q = m.size();
  Eigen::MatrixXd out(q, q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

PsdResult psd_of(const Eigen::MatrixXd& m, double scale, double tol) {
  PsdResult out;
  if (m.size() == 0) {
    out.is_psd = true;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge", 0.0);
  }
  out.min_eigenvalue = solver.eigenvalues()(0);
  out.is_psd = out.min_eigenvalue >= -tol * std::max(1.0, scale);
  if (out.min_eigenvalue < 0.0) out.witness = to_std(solver.eigenvectors().col(0));
  return out;
}

double quadratic(const HankelMatrix& m, const std::vector<double>& z) {
  double acc = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      acc += z[static_cast<std::size_t>(i)] * m(i, j) * z[static_cast<std::size_t>(j)];
    }
  }
  return acc;
}

}  // namespace

HankelMatrix::HankelMatrix(int size, std::vector<double> w, std::optional<double> completion)
    : size_(size), w_(std::move(w)), completion_(completion) {
  if (size_ < 1 || w_.size() != static_cast<std::size_t>(2 * size_ - 1)) {
    throw DimensionError("Hankel matrix of size " + std::to_string(size_) +
                         " needs 2*size-1 diagonal values, got " + std::to_string(w_.size()));
  }
}

std::vector<double> HankelMatrix::dense() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(size_ * size_));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

double HankelMatrix::max_abs_entry() const {
  double out = 0.0;
  for (double v : w_) out = std::max(out, std::abs(v));
  return out;
}

PlaneTensor::PlaneTensor(int degree, std::vector<double> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 1) throw DomainError("plane tensor degree must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1) {
    throw DimensionError("plane tensor of degree " + std::to_string(degree_) + " needs " +
                         std::to_string(degree_ + 1) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
  for (double v : coeffs_) {
    if (!std::isfinite(v)) throw ValueError("plane tensor coefficient is not finite");
  }
}

double PlaneTensor::max_abs_coeff() const {
  double out = 0.0;
  for (double v : coeffs_) out = std::max(out, std::abs(v));
  return out;
}

double plane_form(const PlaneTensor& p, double y1, double y2) {
  const int l = p.degree();
  double acc = 0.0;
  for (int k = 0; k <= l; ++k) {
    acc += static_cast<double>(poly::binomial(l, k)) * p.coeff(k) * std::pow(y1, l - k) *
           std::pow(y2, k);
  }
  return acc;
}

std::uint64_t count_s(int k, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("count_s needs m >= 1 and n >= 1");
  const int top = (n - 1) * m;
  if (k < 0 || k > top) {
    throw DomainError("count_s: k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(top) + "]");
  }
  // ways[s] = number of ways to write s as an ordered sum of the parts placed
  // so far, each part in [0, n-1].
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[0] = 1;
  for (int part = 0; part < m; ++part) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= k; ++s) {
      const auto from = ways[static_cast<std::size_t>(s)];
      if (from == 0) continue;
      for (int d = 0; d < n && s + d <= k; ++d) {
        auto& slot = next[static_cast<std::size_t>(s + d)];
        if (__builtin_add_overflow(slot, from, &slot)) {
          throw CapacityError("count_s exceeds 64-bit range");
        }
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(k)];
}

HankelMatrix assoc_matrix(const HankelTensor& a, std::optional<double> completion) {
  const int l = a.degree();
  const int q = (l + 3) / 2;  // ceil((l + 2) / 2)
  const bool odd = l % 2 == 1;
  if (!odd && completion) {
    throw ArgumentError("completion is only defined when (n-1)m is odd");
  }
  if (completion && !std::isfinite(*completion)) {
    throw ValueError("completion is not finite");
  }
  std::vector<double> w(a.gen().begin(), a.gen().end());
  std::optional<double> used;
  if (odd) {
    used = completion.value_or(0.0);
    w.push_back(*used);
  }
  return HankelMatrix(q, std::move(w), used);
}

PsdResult psd_check(const HankelMatrix& m, double tol) {
  if (tol < 0.0) throw ArgumentError("tolerance must be nonnegative");
  for (double v : m.w()) {
    if (!std::isfinite(v)) throw ValueError("matrix entry is not finite");
  }
  return psd_of(to_eigen(m), m.max_abs_entry(), tol);
}

std::vector<double> eigenvalues(const HankelMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge", 0.0);
  }
  return to_std(solver.eigenvalues());
}

StrongCertificate is_strong(const HankelTensor& a, double tol) {
  if (tol < 0.0) throw ArgumentError("tolerance must be nonnegative");
  if (a.degree() % 2 == 0) {
    HankelMatrix m = assoc_matrix(a);
    PsdResult r = psd_check(m, tol);
    StrongCertificate out{r.is_psd, r.min_eigenvalue, std::nullopt, std::nullopt, m};
    if (!r.is_psd) out.violation_vector = r.witness;
    return out;
  }

  const HankelMatrix bordered = assoc_matrix(a, 0.0);
  const int q = bordered.size();
  const int k = q - 1;
  const Eigen::MatrixXd full = to_eigen(bordered);
  const Eigen::MatrixXd lead = full.topLeftCorner(k, k);
  const Eigen::VectorXd border = full.col(k).head(k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lead);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge", 0.0);
  }
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::MatrixXd& evecs = solver.eigenvectors();
  const double largest = evals.cwiseAbs().maxCoeff();
  // Smallest completion making the Schur complement nonnegative: b^T P^+ b,
  // with singular values below tol * largest treated as zero.
  double completion = 0.0;
  for (int i = 0; i < k; ++i) {
    if (evals(i) > tol * largest && evals(i) > 0.0) {
      const double proj = evecs.col(i).dot(border);
      completion += proj * proj / evals(i);
    }
  }

  const HankelMatrix m = assoc_matrix(a, completion);
  PsdResult r = psd_check(m, tol);
  StrongCertificate out{r.is_psd, r.min_eigenvalue, completion, std::nullopt, m};
  if (r.is_psd) return out;

  const double scale = std::max(1.0, bordered.max_abs_entry());
  if (evals(0) < -tol * scale) {
    // Leading block already indefinite: no completion can help.
    std::vector<double> z = to_std(evecs.col(0));
    z.push_back(0.0);
    out.violation_vector = std::move(z);
  } else {
    out.violation_vector = r.witness;
  }
  if (out.violation_vector && quadratic(m, *out.violation_vector) >= 0.0) {
    out.violation_vector = r.witness;
  }
  return out;
}

PlaneTensor assoc_plane(const HankelTensor& a) {
  const int l = a.degree();
  if (l > 60) {
    throw CapacityError("associated plane tensor degree " + std::to_string(l) +
                        " exceeds the exact binomial range (60)");
  }
  std::vector<double> p(static_cast<std::size_t>(l) + 1);
  for (int k = 0; k <= l; ++k) {
    const auto s = count_s(k, a.order(), a.dim());
    const auto c = poly::binomial(l, k);
    p[static_cast<std::size_t>(k)] =
        static_cast<double>(s) / static_cast<double>(c) * a.gen(k);
  }
  return PlaneTensor(l, std::move(p));
}

NecessaryCheck copositive_necessary(const HankelTensor& a) {
  for (int i = 1; i <= a.dim(); ++i) {
    if (a.gen((i - 1) * a.order()) < 0.0) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace hankel
