#pragma once

// Numeric values of the current coefficients C_I.
//
// On a compact facet tau of NP(pA) holding scaled points b_1..b_l, a chart
// of the toric resolution writes the facet monomials as t^{c_k} times a
// common factor. Then
//
//   C_I = (n-1)! |D_I| / pi^{n-1} * Int_{C^{n-1}} prod_j |t_j|^{2(sigma_j - 1)}
//                                   / (sum_k prod_j |t_j|^{2 c_jk})^n  dA,
//
// sigma_j = sum_{k in I} c_jk and D_I = det [c_{.k}; 1]_{k in I}. For n = 2
// the integrand is radial; with u = |t|^2 it becomes a 1-D integral on
// (0, inf), split at u = 1 with u -> 1/u on the tail. Floating point is
// confined to this module.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "residuum/residue.hpp"

namespace residuum {

/// Power of the denominator sum; equals n.
constexpr int denominator_exponent(std::size_t n) { return static_cast<int>(n); }

struct ChartExponents {
  std::size_t facet = 0;
  std::vector<std::size_t> points;  // sequence positions on the facet
  /// rows[j][k]: exponent of t_j at points[k]; n-1 rows, min of each row 0.
  std::vector<IntVec> rows;
  std::size_t origin_index = 0;  // position in `points` where every row is 0
};

/// n = 2: c_k = eta . b_k - min, eta = unimodular_complement(normal).
/// n = 3 with `experimental`: facets of exactly three points with a
/// unimodular corner, giving a diagonal chart. Anything else is refused.
ChartExponents chart_exponents(const ResidueCurrent& current, std::size_t facet, bool experimental = false);

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t cells = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double tol = 1e-9;        // absolute error target
  std::size_t max_cells = 4000;
};

/// Globally adaptive tensor Gauss-Kronrod (7/15) on [0,1]^d, d in {1, 2}.
/// The worst cell is bisected in every direction; contributions are summed
/// in a fixed order, so the result does not depend on evaluation order.
QuadratureResult adaptive_cubature(const std::function<double(const double*)>& f, std::size_t d,
                                   const QuadratureOptions& options);

/// Int_{R^2} r^{2a} / (sum_k r^{2 c_k})^q dA. Throws DomainError when divergent.
QuadratureResult radial_integral(std::int64_t a, const IntVec& c, int q, const QuadratureOptions& options = {});

struct NumericCoefficient {
  MultiIndex index;
  double estimate = 0.0;
  double abs_error = 0.0;
  std::size_t cells = 0;
};

/// C_I for an index I whose points all lie in the chart.
NumericCoefficient coefficient_integral(const ChartExponents& chart, const MultiIndex& index,
                                        const QuadratureOptions& options = {});

struct FacetResidual {
  std::size_t facet = 0;
  IntVec normal;
  bool evaluated = false;
  std::string note;  // reason when not evaluated
  std::vector<NumericCoefficient> coefficients;
  double lhs = 0.0;  // sum of |det (pA)_I| C_I
  double rhs = 0.0;  // det(tau)
  double residual = 0.0;
  double residual_bound = 0.0;  // propagated quadrature error
};

struct CoffeValidation {
  std::vector<FacetResidual> facets;
  double max_residual = 0.0;
};

/// Evaluates every C_I numerically and reports the residual of each facet
/// relation. n = 3 requires `experimental`; n = 3 facets without a diagonal
/// chart are listed but not evaluated.
CoffeValidation validate_coffe_numeric(const ResidueCurrent& current, bool experimental = false,
                                       const QuadratureOptions& options = {});

/// Replaces Constrained coefficients by Numeric estimates (n = 1 and n = 2,
/// and n = 3 with `experimental` where a chart exists).
ResidueCurrent refine_numeric(ResidueCurrent current, bool experimental = false,
                              const QuadratureOptions& options = {});

}  // namespace residuum
