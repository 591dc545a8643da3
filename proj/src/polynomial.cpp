#include "hankel/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hankel/errors.hpp"

namespace hankel::poly {

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") is undefined");
  }
  k = std::min(k, n - k);
  // C(n, i+1) = C(n, i) * (n - i) / (i + 1) stays integral at every step.
  __int128 value = 1;
  for (int i = 0; i < k; ++i) {
    value = value * (n - i) / (i + 1);
    if (value > std::numeric_limits<std::int64_t>::max()) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(value);
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

double evaluate(std::span<const double> c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<double> derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = static_cast<double>(i) * c[i];
  return out;
}

std::vector<double> trimmed(std::span<const double> c, double rel) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  std::vector<double> out(c.begin(), c.end());
  while (!out.empty() && std::abs(out.back()) <= rel * scale) out.pop_back();
  return out;
}

namespace {

using Poly = std::vector<double>;

// Threshold below which a normalized remainder counts as identically zero.
constexpr double kZeroRemainder = 1e-11;
constexpr double kTrim = 1e-13;

void normalize(Poly& p) {
  double scale = 0.0;
  for (double v : p) scale = std::max(scale, std::abs(v));
  if (scale > 0.0) {
    for (double& v : p) v /= scale;
  }
}

// Remainder of a / b (both nonempty, b with nonzero leading coefficient).
Poly remainder(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const double q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
  }
  return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  normalize(chain.back());
  Poly d = derivative(chain.back());
  d = trimmed(d, kTrim);
  if (d.empty()) return chain;
  normalize(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    double scale = 0.0;
    for (double v : r) scale = std::max(scale, std::abs(v));
    if (scale <= kZeroRemainder) break;  // chain ends at gcd(p, p')
    for (double& v : r) v = -v;
    r = trimmed(r, kTrim);
    normalize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, double x) {
  int changes = 0;
  int prev = 0;
  for (const Poly& q : chain) {
    const double v = evaluate(q, x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int count_in(const std::vector<Poly>& chain, double lo, double hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

double polish(const Poly& p, double lo, double hi, double x) {
  const Poly dp = derivative(p);
  double scale = 0.0;
  for (double v : p) scale = std::max(scale, std::abs(v));
  double fx = evaluate(p, x);
  for (int it = 0; it < 50 && std::abs(fx) > 1e-13 * scale; ++it) {
    const double slope = evaluate(dp, x);
    if (slope == 0.0) break;
    const double next = x - fx / slope;
    if (!(next >= lo && next <= hi)) break;
    const double fnext = evaluate(p, next);
    if (std::abs(fnext) >= std::abs(fx)) break;
    x = next;
    fx = fnext;
  }
  return x;
}

void isolate(const std::vector<Poly>& chain, const Poly& p, double lo, double hi, int count,
             std::vector<double>& roots) {
  if (count <= 0) return;
  const double width_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                             std::max({1.0, std::abs(lo), std::abs(hi)});
  if (count == 1) {
    // Shrink by Sturm counts; works for roots of any multiplicity.
    for (int it = 0; it < 200 && hi - lo > width_floor; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_in(chain, lo, mid) >= 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    roots.push_back(polish(p, lo, hi, 0.5 * (lo + hi)));
    return;
  }
  if (hi - lo <= width_floor) {
    // Numerically coincident cluster.
    roots.push_back(0.5 * (lo + hi));
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int left = count_in(chain, lo, mid);
  isolate(chain, p, lo, mid, left, roots);
  isolate(chain, p, mid, hi, count - left, roots);
}

}  // namespace

std::vector<double> real_roots(std::span<const double> c, double lo, double hi) {
  const Poly p = trimmed(c, 1e-14);
  if (p.size() <= 1 || !(lo < hi)) return {};
  const std::vector<Poly> chain = sturm_chain(p);
  std::vector<double> roots;
  isolate(chain, p, lo, hi, count_in(chain, lo, hi), roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> real_roots(std::span<const double> c) {
  const Poly p = trimmed(c, 1e-14);
  if (p.size() <= 1) return {};
  double bound = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    bound = std::max(bound, std::abs(p[i] / p.back()));
  }
  bound += 1.0;
  return real_roots(p, -bound, bound);
}

}  // namespace hankel::poly
