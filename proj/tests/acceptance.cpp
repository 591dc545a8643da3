// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "hankel/associated.hpp"
#include "hankel/cli.hpp"
#include "hankel/plane.hpp"
#include "hankel/spectra.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"
#include "support.hpp"

using namespace hankel;
namespace ht = hankel::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail = what;
    }
  }
};

HankelTensor counterexample() { return make_hankel(4, 2, {1.0, 0.0, -1.0 / 6.0, 0.0, 1.0}); }
HankelTensor partner() { return make_hankel(4, 2, {0.0, 0.0, 1.0, 0.0, 0.0}); }

double gen_diff(const HankelTensor& a, const HankelTensor& b) {
  double out = 0.0;
  for (int k = 0; k <= a.degree(); ++k) out = std::max(out, std::abs(a.gen(k) - b.gen(k)));
  return out;
}

Outcome counterexample_psd_not_strong() {
  Outcome o;
  ht::Rng rng(101);
  const HankelTensor a = counterexample();
  for (int i = 0; i < 1000; ++i) {
    const auto x = ht::uniform_vector(rng, 2, -3.0, 3.0);
    const double expected = std::pow(x[0], 4) - x[0] * x[0] * x[1] * x[1] + std::pow(x[1], 4);
    o.require(std::abs(eval_form(a, x) - expected) <= 1e-10 * std::max(1.0, std::abs(expected)),
              "form mismatch");
  }
  const PlaneExtremes ext = z_extremes(assoc_plane(a));
  o.require(std::abs(ext.lambda_min - 0.25) <= 1e-8, "lambda_min != 0.25");
  const StrongCertificate cert = is_strong(a);
  o.require(!cert.is_strong, "reported strong");
  const double s = -1.0 / 6.0;
  o.require(cert.matrix.dense() == std::vector{1.0, 0.0, s, 0.0, s, 0.0, s, 0.0, 1.0},
            "associated matrix mismatch");
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda_min = %.12g, strong = false", ext.lambda_min);
  if (o.passed) o.detail = buf;
  return o;
}

Outcome hadamard_counterexample() {
  Outcome o;
  const HankelTensor ab = hadamard(counterexample(), partner());
  o.require(std::vector<double>(ab.gen().begin(), ab.gen().end()) ==
                std::vector{0.0, 0.0, -1.0 / 6.0, 0.0, 0.0},
            "product generating vector mismatch");
  const PlaneExtremes ext = z_extremes(assoc_plane(ab));
  o.require(std::abs(ext.lambda_min + 0.25) <= 1e-8, "lambda_min(A o B) != -0.25");
  const std::vector<double> ev = eigenvalues(assoc_matrix(partner()));
  o.require(std::abs(ev[0] + 1.0) <= 1e-12 && std::abs(ev[1] - 1.0) <= 1e-12 &&
                std::abs(ev[2] - 1.0) <= 1e-12,
            "partner matrix spectrum != {-1, 1, 1}");
  o.require(!is_strong(partner()).is_strong, "partner reported strong");
  const cli::ExampleReport report = cli::worked_examples();
  o.require(report.discrepancies.size() == 1 &&
                report.discrepancies[0].find("paper claim not reproduced") != std::string::npos,
            "discrepancy not reported");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "lambda_min(A o B) = %.12g; partner spectrum {%.3g, %.3g, %.3g} (claim flagged)",
                ext.lambda_min, ev[0], ev[1], ev[2]);
  if (o.passed) o.detail = buf;
  return o;
}

Outcome decomposition_roundtrip() {
  Outcome o;
  ht::Rng rng(103);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int m = ht::pick(rng, 2, 4);
    const int n = ht::pick(rng, 2, 4);
    const HankelTensor a = ht::random_tensor(rng, m, n);
    const VandermondeDecomposition d = decompose(a);
    o.require(d.size() <= static_cast<std::size_t>(a.degree() + 1), "too many terms");
    worst = std::max(worst, gen_diff(compose(d, m, n), a));
  }
  o.require(worst <= 1e-8, "roundtrip error too large");
  o.detail = o.passed ? "max roundtrip error " + std::to_string(worst) : o.detail;
  return o;
}

Outcome strong_closure() {
  Outcome o;
  ht::Rng rng(104);
  for (int i = 0; i < 50; ++i) {
    const int m = ht::pick(rng, 2, 4);
    const int n = ht::pick(rng, 2, 4);
    const HankelTensor a = from_measure(ht::random_measure(rng, 6), m, n);
    const HankelTensor b = from_measure(ht::random_measure(rng, 6), m, n);
    o.require(is_strong(hadamard(a, b)).is_strong, "product not strong");
  }
  if (o.passed) o.detail = "50/50 products strong";
  return o;
}

Outcome complete_closure() {
  Outcome o;
  ht::Rng rng(105);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int m = ht::pick(rng, 2, 4);
    const int n = ht::pick(rng, 2, 4);
    const auto d1 = ht::random_positive_decomposition(rng);
    const auto d2 = ht::random_positive_decomposition(rng);
    const auto prod = hadamard_vd(d1, d2);
    o.require(is_positive(prod), "product decomposition not positive");
    worst = std::max(worst, gen_diff(compose(prod, m, n),
                                     hadamard(compose(d1, m, n), compose(d2, m, n))));
  }
  o.require(worst <= 1e-8, "composed product mismatch");
  if (o.passed) o.detail = "max mismatch " + std::to_string(worst);
  return o;
}

Outcome plane_copositivity() {
  Outcome o;
  ht::Rng rng(106);
  int decided = 0;
  for (int i = 0; i < 200; ++i) {
    const int l = ht::pick(rng, 2, 8);
    const auto p = ht::uniform_vector(rng, static_cast<std::size_t>(l) + 1, -1.0, 1.0);
    const double oracle = ht::grid_min_phi(p, 100000);
    const CopositivityReport r = copositive_check(PlaneTensor(l, p));
    if (oracle < -1e-6) {
      o.require(!r.is_copositive, "missed a negative minimum");
      ++decided;
    } else if (oracle > 1e-6) {
      o.require(r.is_copositive, "false negative verdict");
      ++decided;
    }
  }
  const CopositivityReport fixed = copositive_check(PlaneTensor(2, {1.0, -3.0, 1.0}));
  o.require(!fixed.is_copositive && fixed.witness_t &&
                std::abs(*fixed.witness_t - 0.5) <= 1e-10 &&
                std::abs(fixed.min_phi + 1.0) <= 1e-10,
            "fixed case (p = [1, -3, 1]) wrong");
  if (o.passed) o.detail = std::to_string(decided) + "/200 decided instances agree; fixed case ok";
  return o;
}

Outcome eigenvalue_sandwiches() {
  Outcome o;
  ht::Rng rng(107);
  const ZeigOptions opts{20, 5000, 7};
  int done = 0;
  while (done < 100) {
    const int m = ht::pick(rng, 2, 4);
    const int n = ht::pick(rng, 2, 4);
    if (m * (n - 1) % 2 != 0) continue;
    ++done;
    const HankelTensor a = ht::random_tensor(rng, m, n);
    const double lo = zeig_extreme(a, Extreme::Min, opts).value;
    const double hi = zeig_extreme(a, Extreme::Max, opts).value;
    for (const ZBounds& b : {bounds_prop6(a), bounds_prop7(a)}) {
      const char* name = b.source == BoundSource::Prop6 ? "diagonal" : "plane";
      o.require(b.upper_for_min.has_value() && lo <= *b.upper_for_min + 1e-6,
                std::string("lambda_min above ") + name + " bound");
      o.require(b.lower_for_max.has_value() && hi >= *b.lower_for_max - 1e-6,
                std::string("lambda_max below ") + name + " bound");
    }
    if (n == 2) {
      const PlaneExtremes exact = z_extremes(assoc_plane(a));
      o.require(std::abs(lo - exact.lambda_min) <= 1e-6 && std::abs(hi - exact.lambda_max) <= 1e-6,
                "n = 2 estimate differs from exact plane extremes");
    }
  }
  if (o.passed) o.detail = "100 tensors, both bound sources";
  return o;
}

Outcome odd_order_signs() {
  Outcome o;
  ht::Rng rng(108);
  int hpairs = 0;
  for (int i = 0; i < 50; ++i) {
    const int m = ht::pick(rng, 1, 2) * 2 + 1;
    const HankelTensor a = compose(ht::random_positive_decomposition(rng), m, 2);
    for (const EigenPair& p : heig_dim2(a)) {
      ++hpairs;
      o.require(p.value >= -1e-8, "negative H-eigenvalue");
      if (p.value > 0.0) o.require(std::abs(p.vector[0]) >= 1e-12, "x_1 = 0 with lambda > 0");
    }
  }
  const ZeigOptions opts{20, 2000, 11};
  for (int i = 0; i < 50; ++i) {
    const int m = ht::pick(rng, 1, 2) * 2 + 1;
    const int n = ht::pick(rng, 2, 4);
    const HankelTensor a = compose(ht::random_positive_decomposition(rng), m, n);
    for (Extreme mode : {Extreme::Max, Extreme::Min}) {
      o.require(odd_sign_check(zeig_extreme(a, mode, opts), SignClass::Complete, m),
                "complete-class sign pattern violated");
    }
  }
  for (int i = 0; i < 50; ++i) {
    const int m = ht::pick(rng, 1, 2) * 2 + 1;
    const int n = ht::pick(rng, 2, 4);
    const HankelTensor a = from_measure(ht::random_measure(rng, 6), m, n);
    for (Extreme mode : {Extreme::Max, Extreme::Min}) {
      o.require(odd_sign_check(zeig_extreme(a, mode, opts), SignClass::Strong, m),
                "strong-class sign pattern violated");
    }
  }
  if (o.passed) o.detail = std::to_string(hpairs) + " H-pairs checked; 200 Z-pairs pass";
  return o;
}

Outcome combinatorics() {
  Outcome o;
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const int top = (n - 1) * m;
      std::uint64_t total = 0;
      for (int k = 0; k <= top; ++k) {
        total += count_s(k, m, n);
        o.require(count_s(k, m, n) == count_s(top - k, m, n), "reflection symmetry fails");
      }
      std::uint64_t power = 1;
      for (int j = 0; j < m; ++j) power *= static_cast<std::uint64_t>(n);
      o.require(total == power, "counts do not sum to n^m");
      if (n >= 3) {
        o.require(count_s(2, m, n) == static_cast<std::uint64_t>(m * (m + 1) / 2),
                  "s(2,m,n) != m(m+1)/2");
      }
    }
  }
  if (o.passed) o.detail = "m, n <= 6 exact";
  return o;
}

Outcome plane_inheritance() {
  Outcome o;
  ht::Rng rng(110);
  for (int i = 0; i < 50; ++i) {
    const int m = 2 * ht::pick(rng, 1, 2);
    const int n = ht::pick(rng, 2, 4);
    const HankelTensor a = from_measure(ht::random_measure(rng, 6), m, n);
    o.require(z_extremes(assoc_plane(a)).lambda_min >= -1e-8, "plane of strong tensor not PSD");
  }
  int accepted = 0;
  int attempts = 0;
  const ZeigOptions opts{10, 2000, 5};
  while (accepted < 50 && attempts < 2000) {
    ++attempts;
    const int m = 2 * ht::pick(rng, 1, 2);
    const int n = ht::pick(rng, 2, 4);
    // Perturbed complete tensors: a mix of PSD and indefinite candidates.
    const HankelTensor base = compose(ht::random_positive_decomposition(rng), m, n);
    const HankelTensor noise = ht::random_tensor(rng, m, n, ht::uniform(rng, 0.0, 0.3));
    std::vector<double> gen(base.gen().begin(), base.gen().end());
    for (int k = 0; k <= base.degree(); ++k) gen[static_cast<std::size_t>(k)] += noise.gen(k);
    const HankelTensor a(m, n, gen);
    if (copositive_falsify(a).has_value()) continue;
    if (zeig_extreme(a, Extreme::Min, opts).value < 0.0) continue;
    ++accepted;
    o.require(copositive_check(assoc_plane(a)).is_copositive, "plane tensor not copositive");
  }
  o.require(accepted == 50, "could not generate 50 qualifying tensors");
  if (o.passed) {
    o.detail = "50 strong planes PSD; " + std::to_string(accepted) + " filtered tensors (" +
               std::to_string(attempts) + " drawn) have copositive planes";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> body;
  };
  const Criterion criteria[] = {
      {"AC1", "order-4 counterexample is PSD but not strong", 1.0, counterexample_psd_not_strong},
      {"AC2", "Hadamard counterexample is not PSD", 1.0, hadamard_counterexample},
      {"AC3", "Vandermonde decomposition roundtrip", 5.0, decomposition_roundtrip},
      {"AC4", "strong tensors closed under Hadamard", 5.0, strong_closure},
      {"AC5", "complete tensors closed under Hadamard", 2.0, complete_closure},
      {"AC6", "plane copositivity vs grid oracle", 10.0, plane_copositivity},
      {"AC7", "Z-eigenvalue bound sandwiches", 30.0, eigenvalue_sandwiches},
      {"AC8", "odd-order sign properties", 30.0, odd_order_signs},
      {"AC9", "index-sum counts", 1.0, combinatorics},
      {"AC10", "plane tensor inherits PSD / copositivity", 30.0, plane_inheritance},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && secs > c.limit_seconds) {
      o.passed = false;
      o.detail = "runtime over " + std::to_string(c.limit_seconds) + " s";
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %-5s %-46s %7.3f s  %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
