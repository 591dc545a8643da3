#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hankel/associated.hpp"
#include "hankel/errors.hpp"
#include "hankel/vandermonde.hpp"
#include "support.hpp"

using namespace hankel;

namespace {

std::vector<VandermondeTerm> sorted_terms(const VandermondeDecomposition& d) {
  std::vector<VandermondeTerm> out(d.terms().begin(), d.terms().end());
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.node < b.node; });
  return out;
}

double max_gen_diff(const HankelTensor& a, const HankelTensor& b) {
  double out = 0.0;
  for (int k = 0; k <= a.degree(); ++k) out = std::max(out, std::abs(a.gen(k) - b.gen(k)));
  return out;
}

}  // namespace

TEST_CASE("Bjorck-Pereyra solve against a hand-solved system") {
  // alpha_0 + alpha_1 + alpha_2 = 3, alpha_1 - alpha_2 = 0, alpha_1 + alpha_2 = 2.
  const auto alpha = solve_vandermonde(std::vector{0.0, 1.0, -1.0}, std::vector{3.0, 0.0, 2.0});
  REQUIRE(alpha.size() == 3);
  CHECK(alpha[0] == doctest::Approx(1.0));
  CHECK(alpha[1] == doctest::Approx(1.0));
  CHECK(alpha[2] == doctest::Approx(1.0));
}

TEST_CASE("decompose examples") {
  const auto d = decompose(make_hankel(2, 2, {3.0, 0.0, 2.0}), std::vector{0.0, 1.0, -1.0});
  const auto t = sorted_terms(d);
  REQUIRE(t.size() == 3);
  CHECK(t[0].node == -1.0);
  CHECK(t[1].node == 0.0);
  CHECK(t[2].node == 1.0);
  for (const auto& term : t) CHECK(term.coeff == doctest::Approx(1.0).epsilon(1e-14));

  const auto single = decompose(make_hankel(2, 2, {1.0, 2.0, 4.0}), std::vector{0.0, 1.0, 2.0});
  REQUIRE(single.size() == 1);
  CHECK(single.terms()[0].node == 2.0);
  CHECK(single.terms()[0].coeff == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(decompose(make_hankel(3, 3, std::vector<double>(7, 0.0))).empty());
}

TEST_CASE("decompose errors") {
  const HankelTensor a = make_hankel(2, 2, {3.0, 0.0, 2.0});
  CHECK_THROWS_AS(decompose(a, std::vector{0.0, 1.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(decompose(a, std::vector{0.0, 1.0}), DimensionError);
  // Nodes clustered within 1e-7 make the system hopeless.
  try {
    decompose(make_hankel(4, 4, std::vector<double>(13, 1.0)),
              std::vector{0.0, 1e-7, 2e-7, 3e-7, 4e-7, 5e-7, 6e-7, 7e-7, 8e-7, 9e-7, 1e-6,
                          1.1e-6, 1.2e-6});
    FAIL("expected a numerical error");
  } catch (const NumericalError& e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("compose examples") {
  const VandermondeDecomposition d({{0.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}});
  CHECK(compose(d, 2, 2) == make_hankel(2, 2, {3.0, 0.0, 2.0}));
  CHECK(compose(VandermondeDecomposition{}, 3, 2) == make_hankel(3, 2, {0.0, 0.0, 0.0, 0.0}));
  CHECK(compose(VandermondeDecomposition({{1.0, 1.0}}), 4, 2) ==
        make_hankel(4, 2, std::vector<double>(5, 1.0)));
}

TEST_CASE("decomposition invariants are enforced") {
  CHECK_THROWS_AS(VandermondeDecomposition({{1.0, 1.0}, {1.0, 2.0}}), ArgumentError);
  CHECK_THROWS_AS(VandermondeDecomposition({{1.0, 0.0}}), ArgumentError);
  CHECK_NOTHROW(VandermondeDecomposition({{0.0, 1.0}, {1e-20, 1.0}}));
}

TEST_CASE("is_positive examples") {
  CHECK(is_positive(VandermondeDecomposition({{0.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}})));
  CHECK_FALSE(is_positive(VandermondeDecomposition({{1.0, -0.5}})));
  CHECK(is_positive(VandermondeDecomposition{}));
}

TEST_CASE("hadamard_vd examples") {
  const auto single = hadamard_vd(VandermondeDecomposition({{2.0, 1.0}}),
                                  VandermondeDecomposition({{3.0, 1.0}}));
  REQUIRE(single.size() == 1);
  CHECK(single.terms()[0] == VandermondeTerm{6.0, 1.0});

  const VandermondeDecomposition pm({{1.0, 1.0}, {-1.0, 1.0}});
  const auto merged = sorted_terms(hadamard_vd(pm, pm));
  REQUIRE(merged.size() == 2);
  CHECK(merged[0] == VandermondeTerm{-1.0, 2.0});
  CHECK(merged[1] == VandermondeTerm{1.0, 2.0});

  CHECK(hadamard_vd(pm, VandermondeDecomposition{}).empty());
  // Cancelling coefficients are dropped.
  const auto cancel = hadamard_vd(VandermondeDecomposition({{1.0, 1.0}, {-1.0, 1.0}}),
                                  VandermondeDecomposition({{1.0, 1.0}, {-1.0, -1.0}}));
  CHECK(cancel.empty());
}

TEST_CASE("from_measure examples") {
  CHECK(from_measure(DiscreteMeasure({1.0}, {1.0}), 4, 2) ==
        make_hankel(4, 2, std::vector<double>(5, 1.0)));
  CHECK(from_measure(DiscreteMeasure({0.0, 1.0}, {1.0, 1.0}), 3, 2) ==
        make_hankel(3, 2, {2.0, 1.0, 1.0, 1.0}));
  CHECK_THROWS_AS(DiscreteMeasure({0.0}, {-1.0}), ArgumentError);
  CHECK_THROWS_AS(DiscreteMeasure({0.0, 0.0}, {1.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(DiscreteMeasure({0.0}, {1.0, 1.0}), ArgumentError);
}

TEST_CASE("chebyshev nodes of the second kind") {
  const auto u = chebyshev_nodes(5);
  REQUIRE(u.size() == 5);
  CHECK(u[0] == 1.0);
  CHECK(u[2] == doctest::Approx(0.0));
  CHECK(u[4] == -1.0);
}

TEST_CASE("property: decompose/compose roundtrip within the rank bound") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = testing::pick(rng, 2, 4);
    const int n = testing::pick(rng, 2, 4);
    const HankelTensor a = testing::random_tensor(rng, m, n);
    const auto d = decompose(a);
    CHECK(d.size() <= static_cast<std::size_t>(a.degree() + 1));
    CHECK(max_gen_diff(compose(d, m, n), a) <= 1e-8);
  }
}

TEST_CASE("property: hadamard_vd composes to the componentwise product") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = testing::pick(rng, 2, 4);
    const int n = testing::pick(rng, 2, 4);
    const auto d1 = testing::random_positive_decomposition(rng);
    const auto d2 = testing::random_positive_decomposition(rng);
    const auto prod = hadamard_vd(d1, d2);
    CHECK(is_positive(prod));
    CHECK(max_gen_diff(compose(prod, m, n), hadamard(compose(d1, m, n), compose(d2, m, n))) <=
          1e-8);
  }
}

TEST_CASE("property: positive decompositions of even order give PSD forms") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 * testing::pick(rng, 1, 2);
    const int n = testing::pick(rng, 2, 4);
    const HankelTensor a = compose(testing::random_positive_decomposition(rng), m, n);
    for (int s = 0; s < 100; ++s) {
      const auto x = testing::uniform_vector(rng, static_cast<std::size_t>(n), -1.0, 1.0);
      double nrm = 0.0;
      for (double v : x) nrm += v * v;
      CHECK(eval_form(a, x) >= -1e-10 * std::pow(std::sqrt(nrm), m));
    }
    // Even-index moments are nonnegative.
    for (int i = 0; i <= a.degree(); i += 2) CHECK(a.gen(i) >= 0.0);
  }
}

TEST_CASE("property: moment tensors of measures are strong") {
  testing::Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = testing::pick(rng, 2, 4);
    const int n = testing::pick(rng, 2, 4);
    CHECK(is_strong(from_measure(testing::random_measure(rng), m, n)).is_strong);
  }
}
