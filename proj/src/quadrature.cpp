#include "residuum/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "residuum/errors.hpp"

namespace residuum {

namespace {

// The 15 Kronrod nodes on [-1, 1] with Kronrod weights and the weights of the
// embedded 7-point Gauss rule (zero at Kronrod-only nodes).
struct Rule {
  std::array<double, 15> x{}, wk{}, wg{};
};

const Rule& rule() {
  static const Rule r = [] {
    using K = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    Rule out;
    std::size_t at = 0;
    for (std::size_t i = 0; i < K::abscissa().size(); ++i) {
      const double gw = i % 2 == 0 ? G::weights()[i / 2] : 0.0;
      out.x[at] = K::abscissa()[i];
      out.wk[at] = K::weights()[i];
      out.wg[at] = gw;
      ++at;
      if (i == 0) continue;
      out.x[at] = -K::abscissa()[i];
      out.wk[at] = K::weights()[i];
      out.wg[at] = gw;
      ++at;
    }
    return out;
  }();
  return r;
}

struct Cell {
  std::array<double, 2> lo{};
  double width = 1.0;
  double kronrod = 0.0;
  double error = 0.0;
};

void evaluate(Cell& cell, const std::function<double(const double*)>& f, std::size_t d) {
  const Rule& r = rule();
  const double h = cell.width / 2;
  double k = 0.0, g = 0.0;
  std::array<double, 2> pt{};
  if (d == 1) {
    for (std::size_t i = 0; i < 15; ++i) {
      pt[0] = cell.lo[0] + h * (1 + r.x[i]);
      const double v = f(pt.data());
      k += r.wk[i] * v;
      g += r.wg[i] * v;
    }
    k *= h;
    g *= h;
  } else {
    for (std::size_t i = 0; i < 15; ++i) {
      pt[0] = cell.lo[0] + h * (1 + r.x[i]);
      for (std::size_t j = 0; j < 15; ++j) {
        pt[1] = cell.lo[1] + h * (1 + r.x[j]);
        const double v = f(pt.data());
        k += r.wk[i] * r.wk[j] * v;
        g += r.wg[i] * r.wg[j] * v;
      }
    }
    k *= h * h;
    g *= h * h;
  }
  cell.kronrod = k;
  cell.error = std::abs(k - g);
}

}  // namespace

QuadratureResult adaptive_cubature(const std::function<double(const double*)>& f, std::size_t d,
                                   const QuadratureOptions& options) {
  if (d != 1 && d != 2) throw UnsupportedError("cubature is implemented for dimension 1 and 2 only");
  const std::size_t children = d == 1 ? 2 : 4;

  std::vector<Cell> cells(1);
  evaluate(cells[0], f, d);
  auto total_error = [&] {
    double e = 0.0;
    for (const auto& c : cells) e += c.error;
    return e;
  };

  while (total_error() > options.tol && cells.size() + children - 1 <= options.max_cells) {
    auto worst = std::max_element(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
      if (a.error != b.error) return a.error < b.error;
      return a.lo > b.lo;  // equal errors: the lexicographically smallest corner wins
    });
    const Cell parent = *worst;
    cells.erase(worst);
    const double w = parent.width / 2;
    for (std::size_t c = 0; c < children; ++c) {
      Cell child;
      child.width = w;
      child.lo[0] = parent.lo[0] + ((c & 1) ? w : 0.0);
      child.lo[1] = parent.lo[1] + ((c & 2) ? w : 0.0);
      evaluate(child, f, d);
      cells.push_back(child);
    }
  }

  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
  QuadratureResult result;
  for (const auto& c : cells) {
    result.value += c.kronrod;
    result.abs_error += c.error;
  }
  result.cells = cells.size();
  result.converged = result.abs_error <= options.tol;
  return result;
}

namespace {

// Int over (0, inf)^d of prod_j u_j^{e_j} / (sum_k prod_j u_j^{c_jk})^q du,
// d = rows.size(). Each axis is split at 1 and mapped to [0, 1], with
// u = 1/s on the outer half. Evaluated in logarithms so large exponents
// neither overflow nor underflow.
QuadratureResult orthant_integral(const std::vector<std::int64_t>& e, const std::vector<IntVec>& rows, int q,
                                  const QuadratureOptions& options) {
  const std::size_t d = rows.size();
  const std::size_t points = rows.front().size();
  QuadratureResult total;
  total.converged = true;
  const std::size_t quadrants = std::size_t{1} << d;
  QuadratureOptions sub = options;
  sub.tol = options.tol / static_cast<double>(quadrants);

  for (std::size_t mask = 0; mask < quadrants; ++mask) {
    auto integrand = [&](const double* x) {
      std::array<double, 2> logu{};
      double log_jacobian = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const double lx = std::log(x[j]);
        if (mask & (std::size_t{1} << j)) {
          logu[j] = -lx;
          log_jacobian -= 2 * lx;
        } else {
          logu[j] = lx;
        }
      }
      double top = -std::numeric_limits<double>::infinity();
      std::array<double, 64> terms{};
      std::vector<double> spill;
      double* t = points <= terms.size() ? terms.data() : (spill.resize(points), spill.data());
      for (std::size_t k = 0; k < points; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += static_cast<double>(rows[j][k]) * logu[j];
        t[k] = s;
        top = std::max(top, s);
      }
      double acc = 0.0;
      for (std::size_t k = 0; k < points; ++k) acc += std::exp(t[k] - top);
      double log_num = log_jacobian;
      for (std::size_t j = 0; j < d; ++j) log_num += static_cast<double>(e[j]) * logu[j];
      return std::exp(log_num - q * (top + std::log(acc)));
    };
    const auto part = adaptive_cubature(integrand, d, sub);
    total.value += part.value;
    total.abs_error += part.abs_error;
    total.cells += part.cells;
    total.converged = total.converged && part.converged;
  }
  return total;
}

}  // namespace

QuadratureResult radial_integral(std::int64_t a, const IntVec& c, int q, const QuadratureOptions& options) {
  if (c.empty()) throw DomainError("empty exponent list");
  if (q < 1) throw DomainError("denominator power must be positive");
  const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
  // Near 0 the integrand is u^{a - q cmin}, near infinity u^{a - q cmax}.
  if (a - q * *lo <= -1 || a - q * *hi >= -1)
    throw DomainError("radial integral diverges for a = " + std::to_string(a) + ", q = " + std::to_string(q) +
                      ", exponents " + to_string(c));
  // dA = pi du with u = r^2.
  auto r = orthant_integral({a}, {c}, q, QuadratureOptions{options.tol / std::numbers::pi, options.max_cells});
  r.value *= std::numbers::pi;
  r.abs_error *= std::numbers::pi;
  return r;
}

ChartExponents chart_exponents(const ResidueCurrent& current, std::size_t facet, bool experimental) {
  const std::size_t n = current.seq.dim();
  if (facet >= current.scaled_np.facets().size()) throw DomainError("facet index out of range");
  const Facet& f = current.scaled_np.facets()[facet];
  ChartExponents chart;
  chart.facet = facet;
  chart.points = f.on_facet;

  if (n == 2) {
    const IntVec eta = unimodular_complement(f.normal);
    IntVec c;
    for (auto k : f.on_facet) c.push_back(dot(eta, current.scaled[k].span()));
    const auto lo = std::min_element(c.begin(), c.end());
    chart.origin_index = static_cast<std::size_t>(lo - c.begin());
    const std::int64_t base = *lo;
    for (auto& x : c) x -= base;
    chart.rows.push_back(std::move(c));
    return chart;
  }
  if (n == 3) {
    if (!experimental) throw UnsupportedError("charts for n = 3 are experimental; pass --experimental");
    const auto corner = unimodular_corner(f, current.scaled);
    if (!corner)
      throw UnsupportedError("facet " + f.valuation() +
                             " has no diagonal chart (needs exactly 3 points and a unimodular corner)");
    chart.origin_index = *corner;
    std::size_t row = 0;
    chart.rows.assign(2, IntVec(3, 0));
    const auto& b0 = current.scaled[f.on_facet[*corner]];
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == *corner) continue;
      IntVec edge(3);
      for (std::size_t i = 0; i < 3; ++i) edge[i] = current.scaled[f.on_facet[k]][i] - b0[i];
      chart.rows[row++][k] = to_int64(gcd_of(edge));
    }
    return chart;
  }
  throw UnsupportedError("chart exponents are available for n = 2 (and n = 3 experimentally)");
}

NumericCoefficient coefficient_integral(const ChartExponents& chart, const MultiIndex& index,
                                        const QuadratureOptions& options) {
  const std::size_t d = chart.rows.size();
  const std::size_t n = d + 1;
  if (index.size() != n) throw DimensionError("multi-index size does not match the chart");
  std::vector<std::size_t> cols;
  for (auto j : index.positions()) {
    const auto it = std::find(chart.points.begin(), chart.points.end(), j);
    if (it == chart.points.end())
      throw DomainError("index " + std::to_string(j + 1) + " is not on the charted facet");
    cols.push_back(static_cast<std::size_t>(it - chart.points.begin()));
  }

  std::vector<IntVec> dmat(n, IntVec(n, 1));
  std::vector<std::int64_t> e(d, -1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      dmat[j][k] = chart.rows[j][cols[k]];
      e[j] += chart.rows[j][cols[k]];
    }
  }
  const double D = abs(det(IntMatrix(std::move(dmat)))).convert_to<double>();
  NumericCoefficient out{index, 0.0, 0.0, 0};
  if (D == 0.0) return out;

  // (n-1)! |D| / pi^{n-1} times an integral over C^{n-1}; each dA is pi du.
  double factor = D;
  for (std::size_t k = 2; k < n; ++k) factor *= static_cast<double>(k);
  const auto r = orthant_integral(e, chart.rows, denominator_exponent(n),
                                  QuadratureOptions{options.tol / factor, options.max_cells});
  out.estimate = factor * r.value;
  out.abs_error = std::max(factor * r.abs_error, std::numeric_limits<double>::epsilon());
  out.cells = r.cells;
  return out;
}

namespace {

// Numeric coefficients of every essential index on one facet, or the reason
// none are available.
std::vector<NumericCoefficient> facet_coefficients(const ResidueCurrent& current, std::size_t facet,
                                                   bool experimental, const QuadratureOptions& options) {
  std::vector<const CurrentEntry*> on;
  for (const auto& e : current.entries)
    if (!e.vanishes() && std::find(e.witnesses.begin(), e.witnesses.end(), facet) != e.witnesses.end())
      on.push_back(&e);

  std::vector<NumericCoefficient> out;
  if (current.seq.dim() == 1) {
    // Every point at the minimum has the same modulus.
    for (const auto* e : on)
      out.push_back({e->index, 1.0 / static_cast<double>(on.size()), std::numeric_limits<double>::epsilon(), 0});
    return out;
  }
  const auto chart = chart_exponents(current, facet, experimental);
  for (const auto* e : on) out.push_back(coefficient_integral(chart, e->index, options));
  return out;
}

}  // namespace

CoffeValidation validate_coffe_numeric(const ResidueCurrent& current, bool experimental,
                                       const QuadratureOptions& options) {
  const std::size_t n = current.seq.dim();
  if (n > 3) throw UnsupportedError("numeric validation is available for n <= 3");
  if (n == 3 && !experimental) throw UnsupportedError("n = 3 validation is experimental; pass --experimental");

  CoffeValidation out;
  for (const auto& rel : coffe_constraints(current)) {
    FacetResidual fr;
    fr.facet = rel.facet;
    fr.normal = rel.normal;
    fr.rhs = rel.rhs.convert_to<double>();
    try {
      fr.coefficients = facet_coefficients(current, rel.facet, experimental, options);
    } catch (const UnsupportedError& err) {
      fr.note = err.what();
      out.facets.push_back(std::move(fr));
      continue;
    }
    fr.evaluated = true;
    for (const auto& term : rel.terms) {
      const auto it = std::find_if(fr.coefficients.begin(), fr.coefficients.end(),
                                   [&](const NumericCoefficient& c) { return c.index == term.index; });
      const double w = term.scaled_det.convert_to<double>();
      fr.lhs += w * it->estimate;
      fr.residual_bound += w * it->abs_error;
    }
    fr.residual = std::abs(fr.lhs - fr.rhs);
    out.max_residual = std::max(out.max_residual, fr.residual);
    out.facets.push_back(std::move(fr));
  }
  return out;
}

ResidueCurrent refine_numeric(ResidueCurrent current, bool experimental, const QuadratureOptions& options) {
  const std::size_t n = current.seq.dim();
  if (n > 3 || (n == 3 && !experimental)) return current;
  for (std::size_t f = 0; f < current.scaled_np.facets().size(); ++f) {
    const bool needed = std::any_of(current.entries.begin(), current.entries.end(), [&](const CurrentEntry& e) {
      const auto* c = std::get_if<CoefficientConstrained>(&e.coeff);
      return !e.vanishes() && c && c->relation == f;
    });
    if (!needed) continue;
    std::vector<NumericCoefficient> values;
    try {
      values = facet_coefficients(current, f, experimental, options);
    } catch (const UnsupportedError&) {
      continue;
    }
    for (auto& e : current.entries) {
      if (e.vanishes() || !std::holds_alternative<CoefficientConstrained>(e.coeff)) continue;
      for (const auto& v : values)
        if (v.index == e.index) e.coeff = CoefficientNumeric{f, v.estimate, v.abs_error, v.cells};
    }
  }
  return current;
}

}  // namespace residuum
