#ifndef HANKEL_SPECTRA_HPP
#define HANKEL_SPECTRA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hankel/tensor.hpp"

namespace hankel {

enum class EigenKind { Z, H };
enum class Extreme { Min, Max };
enum class SignClass { Complete, Strong };
enum class BoundSource { Prop6, Prop7 };

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  EigenKind kind = EigenKind::Z;
  bool converged = false;
  /// ||A x^(m-1) - value * x||_inf for Z pairs, with x^[m-1] in place of x for H pairs.
  double residual = 0.0;
};

/// Bounds on the extreme Z-eigenvalues: lambda_min(A) <= upper_for_min and
/// lambda_max(A) >= lower_for_max. A bound is absent when its normalizer
/// degenerates.
struct ZBounds {
  std::optional<double> upper_for_min;
  std::optional<double> lower_for_max;
  BoundSource source = BoundSource::Prop6;
};

struct ZeigOptions {
  int restarts = 20;
  int iters = 500;
  std::uint64_t seed = 0;
};

/// (m-1) * sum_k s(k,m,n) |v_k|, the shift used by zeig_extreme.
double power_method_shift(const HankelTensor& a);

/// Extreme Z-eigenpair estimate by the shifted symmetric higher-order power
/// method, x <- normalize(+-A x^(m-1) + beta x). Runs from each coordinate
/// vector and from `restarts` random unit vectors; returns the best pair.
/// Deterministic for a fixed seed. Non-convergence is reported through
/// EigenPair::converged.
EigenPair zeig_extreme(const HankelTensor& a, Extreme mode, const ZeigOptions& opts = {});

/// All real H-eigenpairs of a dimension-2 Hankel tensor, each normalized to
/// ||x||_inf = 1 with its largest-magnitude component positive. May be empty
/// for odd order. Throws DomainError unless dim == 2.
std::vector<EigenPair> heig_dim2(const HankelTensor& a);

/// min_i v_{(i-1)m} and max_i v_{(i-1)m}.
ZBounds bounds_prop6(const HankelTensor& a);

/// Bounds from the extreme Z-eigenpairs of the associated plane tensor.
/// Throws PreconditionError when (n-1)m is odd.
ZBounds bounds_prop7(const HankelTensor& a);

/// Normalizer relating a plane Z-eigenvector y to the Vandermonde vector
/// u = (1, y2/y1, ...): |y1|^l ||u||^m = sqrt(sum_k s(k,m,n) y1^(2l-2k) y2^(2k)).
double plane_bound_scale(int order, int dim, double y1, double y2);

/// Sign pattern of a Z-eigenvector of an odd-order complete or strong Hankel
/// tensor. Throws DomainError for even order, ArgumentError for H pairs.
bool odd_sign_check(const EigenPair& pair, SignClass cls, int order);

/// Searches the standard simplex (grid of step 1/depth, then projected
/// gradient polish) for x >= 0 with A x^m < -1e-12. A miss certifies nothing.
std::optional<std::vector<double>> copositive_falsify(const HankelTensor& a, int depth = 64);

}  // namespace hankel

#endif  // HANKEL_SPECTRA_HPP
