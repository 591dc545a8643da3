// Shared generators and brute-force oracles for the test suites. Nothing here
// calls into the code paths it is used to check.
#ifndef HANKEL_TESTS_SUPPORT_HPP
#define HANKEL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

namespace hankel::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<double> uniform_vector(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, lo, hi);
  return v;
}

inline HankelTensor random_tensor(Rng& rng, int order, int dim, double bound = 1.0) {
  return HankelTensor(order, dim,
                      uniform_vector(rng, static_cast<std::size_t>((dim - 1) * order + 1),
                                     -bound, bound));
}

// Distinct nodes in [lo, hi] separated by at least `gap`.
inline std::vector<double> distinct_nodes(Rng& rng, int count, double lo, double hi,
                                          double gap = 1e-3) {
  std::vector<double> out;
  while (static_cast<int>(out.size()) < count) {
    const double t = uniform(rng, lo, hi);
    if (std::all_of(out.begin(), out.end(), [&](double s) { return std::abs(s - t) >= gap; })) {
      out.push_back(t);
    }
  }
  return out;
}

inline DiscreteMeasure random_measure(Rng& rng, int max_nodes = 6) {
  const int count = pick(rng, 1, max_nodes);
  return DiscreteMeasure(distinct_nodes(rng, count, -1.5, 1.5),
                         uniform_vector(rng, static_cast<std::size_t>(count), 0.0, 1.0));
}

inline VandermondeDecomposition random_positive_decomposition(Rng& rng, int max_terms = 5) {
  const int count = pick(rng, 1, max_terms);
  const auto nodes = distinct_nodes(rng, count, -1.5, 1.5);
  std::vector<VandermondeTerm> terms;
  for (double u : nodes) terms.push_back({u, uniform(rng, 0.05, 1.0)});
  return VandermondeDecomposition(std::move(terms));
}

// Number of tuples in [n]^m with sum k + m, by full enumeration.
inline std::uint64_t enumerate_count(int k, int m, int n) {
  std::vector<int> idx(static_cast<std::size_t>(m), 1);
  std::uint64_t count = 0;
  while (true) {
    int sum = 0;
    for (int i : idx) sum += i;
    if (sum - m == k) ++count;
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) {
      idx[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return count;
}

// Binomial by Pascal's triangle in doubles (exact for the small sizes used).
inline double pascal(int n, int k) {
  std::vector<double> row{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = next;
  }
  return row[static_cast<std::size_t>(k)];
}

// min over t in [0,1] of sum_k C(l,k) p_k t^(l-k) (1-t)^k on a uniform grid.
inline double grid_min_phi(const std::vector<double>& p, int samples) {
  const int l = static_cast<int>(p.size()) - 1;
  std::vector<double> binom;
  for (int k = 0; k <= l; ++k) binom.push_back(pascal(l, k));
  double best = INFINITY;
  for (int i = 0; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    double v = 0.0;
    for (int k = 0; k <= l; ++k) {
      v += binom[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)] * std::pow(t, l - k) *
           std::pow(1.0 - t, k);
    }
    best = std::min(best, v);
  }
  return best;
}

}  // namespace hankel::testing

#endif  // HANKEL_TESTS_SUPPORT_HPP
