#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "residuum/errors.hpp"
#include "residuum/quadrature.hpp"

using namespace residuum;

TEST_CASE("cubature integrates smooth functions") {
  QuadratureOptions o;
  const auto one = adaptive_cubature([](const double* x) { return std::exp(x[0]); }, 1, o);
  CHECK(one.converged);
  CHECK(std::abs(one.value - (std::numbers::e - 1)) < 1e-12);
  const auto two = adaptive_cubature([](const double* x) { return x[0] * x[1] * x[1]; }, 2, o);
  CHECK(std::abs(two.value - 1.0 / 6.0) < 1e-12);
  const auto sing = adaptive_cubature([](const double* x) { return 1.0 / std::sqrt(x[0]); }, 1, o);
  CHECK(std::abs(sing.value - 2.0) < 1e-7);
  CHECK_THROWS_AS(adaptive_cubature([](const double*) { return 1.0; }, 3, o), UnsupportedError);
}

TEST_CASE("closed form: Int |s|^{2(N-1)} / (1 + |s|^{2N})^p dA = pi / ((p - 1) N)") {
  for (std::int64_t N = 1; N <= 6; ++N) {
    for (int p = 2; p <= 4; ++p) {
      const auto r = radial_integral(N - 1, {0, N}, p);
      const double exact = std::numbers::pi / ((p - 1) * static_cast<double>(N));
      CAPTURE(N);
      CAPTURE(p);
      CHECK(r.converged);
      CHECK(std::abs(r.value - exact) < 1e-9);
      CHECK(r.abs_error < 1e-9);
    }
  }
}

TEST_CASE("divergent radial integrals are rejected") {
  CHECK_THROWS_AS(radial_integral(-1, {0, 2}, 2), DomainError);
  CHECK_THROWS_AS(radial_integral(3, {0, 2}, 2), DomainError);
  CHECK_THROWS_AS(radial_integral(0, {}, 2), DomainError);
  CHECK_THROWS_AS(radial_integral(0, {0, 2}, 0), DomainError);
}

TEST_CASE("two-point facets give C = 1") {
  for (std::int64_t N : {1, 2, 3, 5}) {
    const MonomialSeq a(2, {{N, 0}, {0, N}});
    const auto current = residue_current(a, Weight::ones(2));
    const auto chart = chart_exponents(current, 0);
    CHECK(chart.rows == std::vector<IntVec>{{0, N}});
    const auto c = coefficient_integral(chart, current.entries[0].index);
    CAPTURE(N);
    CHECK(std::abs(c.estimate - 1.0) < 1e-6);
  }
  const MonomialSeq b(2, {{6, 0}, {0, 4}});
  const auto v = validate_coffe_numeric(residue_current(b, Weight({2, 3})));
  REQUIRE(v.facets.size() == 1);
  CHECK(std::abs(v.facets[0].coefficients[0].estimate - 1.0) < 1e-6);
}

TEST_CASE("chart exponents of the three-point facet") {
  const MonomialSeq a(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto current = residue_current(a, Weight::ones(3));
  const auto chart = chart_exponents(current, 0);
  REQUIRE(chart.rows.size() == 1);
  auto row = chart.rows[0];
  std::sort(row.begin(), row.end());
  CHECK(row == IntVec{0, 1, 2});
  CHECK(chart.rows[0][chart.origin_index] == 0);
  CHECK_THROWS_AS(chart_exponents(current, 5), DomainError);
}

TEST_CASE("three points on one facet satisfy the facet relation numerically") {
  const MonomialSeq a(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto v = validate_coffe_numeric(residue_current(a, Weight::ones(3)));
  REQUIRE(v.facets.size() == 1);
  const auto& f = v.facets[0];
  REQUIRE(f.evaluated);
  REQUIRE(f.coefficients.size() == 3);
  const double c12 = f.coefficients[0].estimate, c13 = f.coefficients[1].estimate, c23 = f.coefficients[2].estimate;
  CHECK(std::abs(2 * c12 + 4 * c13 + 2 * c23 - 4) < 1e-6);
  CHECK(std::abs(c12 - c23) < 1e-6);
  for (double c : {c12, c13, c23}) {
    CHECK(c > 0);
    CHECK(c < 1);
  }
  CHECK(v.max_residual < 1e-6);
  const auto m = multiplicity_ep(refine_numeric(residue_current(a, Weight::ones(3))));
  REQUIRE(m.exact.has_value());
  CHECK(*m.exact == 4);
}

TEST_CASE("property: numeric relations hold, estimates are positive and stable under a larger budget") {
  std::mt19937_64 rng(5);
  int evaluated = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const MonomialSeq a(2, oracle::random_cofinite(rng, 2, 6, 3));
    const auto current = residue_current(a, oracle::random_weight(rng, a.size(), 3));
    const auto v = validate_coffe_numeric(current, false, QuadratureOptions{1e-9, 4000});
    const auto big = validate_coffe_numeric(current, false, QuadratureOptions{1e-9, 16000});
    REQUIRE(v.facets.size() == big.facets.size());
    for (std::size_t f = 0; f < v.facets.size(); ++f) {
      const auto& fr = v.facets[f];
      REQUIRE(fr.evaluated);
      ++evaluated;
      CHECK(fr.residual <= std::max(1e-6, 10 * fr.residual_bound));
      for (std::size_t k = 0; k < fr.coefficients.size(); ++k) {
        const auto& c = fr.coefficients[k];
        const auto& cb = big.facets[f].coefficients[k];
        CHECK(c.estimate > 10 * c.abs_error);
        CHECK(std::abs(c.estimate - cb.estimate) <= std::max(1e-8, 2 * (c.abs_error + cb.abs_error)));
      }
    }
  }
  CHECK(evaluated > 40);
}

TEST_CASE("refine_numeric leaves known coefficients and fills constrained ones") {
  const MonomialSeq ex41(2, {{5, 0}, {4, 1}, {2, 2}, {0, 3}});
  const auto refined = refine_numeric(residue_current(ex41, Weight({3, 3, 4, 5})));
  for (const auto* e : refined.nonvanishing()) CHECK(std::holds_alternative<CoefficientNumeric>(e->coeff));
  const auto m = multiplicity_ep(refined);
  CHECK_FALSE(m.determined());
  REQUIRE(m.estimate.has_value());
  CHECK(*m.estimate > 0);
  const auto known = refine_numeric(residue_current(ex41, Weight({2, 2, 1, 3})));
  for (const auto* e : known.nonvanishing()) CHECK(std::holds_alternative<CoefficientKnown>(e->coeff));
}

TEST_CASE("one variable: equal split across the minimum") {
  const MonomialSeq a(1, {{1}, {2}});
  const auto v = validate_coffe_numeric(residue_current(a, Weight({2, 1})));
  REQUIRE(v.facets.size() == 1);
  for (const auto& c : v.facets[0].coefficients) CHECK(c.estimate == doctest::Approx(0.5));
}

TEST_CASE("three variables are experimental") {
  const MonomialSeq simplex(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto current = residue_current(simplex, Weight::ones(3));
  CHECK_THROWS_AS(validate_coffe_numeric(current), UnsupportedError);
  CHECK_THROWS_AS(chart_exponents(current, 0), UnsupportedError);
  const auto v = validate_coffe_numeric(current, true);
  REQUIRE(v.facets.size() == 1);
  REQUIRE(v.facets[0].evaluated);
  CHECK(std::abs(v.facets[0].coefficients[0].estimate - 1.0) < 1e-6);

  const MonomialSeq doubled(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const auto w = validate_coffe_numeric(residue_current(doubled, Weight({1, 2, 1})), true);
  REQUIRE(w.facets.size() == 1);
  REQUIRE(w.facets[0].evaluated);
  CHECK(w.max_residual < 1e-6);

  const MonomialSeq four(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(validate_coffe_numeric(residue_current(four, Weight::ones(4)), true), UnsupportedError);
}
