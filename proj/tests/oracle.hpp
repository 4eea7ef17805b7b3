#pragma once

// Independent reference implementations used only by the tests: brute-force
// membership over boxes, Newton polyhedron membership by rational linear
// feasibility (Fourier-Motzkin), and seeded random instance generators.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "residuum/exact.hpp"
#include "residuum/monomial_ideal.hpp"
#include "residuum/residue.hpp"

namespace oracle {

using residuum::ExpVec;
using residuum::MonomialIdeal;
using residuum::Rational;

/// z^x is divisible by some z^g with g in gens.
inline bool divisible_by_any(const ExpVec& x, const std::vector<ExpVec>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExpVec& g) {
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (g[i] > x[i]) return false;
    return true;
  });
}

/// Every lattice point of [0, bound]^n.
inline std::vector<ExpVec> box(std::size_t n, std::int64_t bound) {
  std::vector<ExpVec> out;
  std::vector<std::int64_t> x(n, 0);
  while (true) {
    out.emplace_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

/// Componentwise sum of all generator coordinates plus one, as a single bound.
inline std::int64_t box_bound(const std::vector<ExpVec>& gens) {
  std::int64_t b = 0;
  for (const auto& g : gens)
    for (auto c : g.coords()) b += c;
  return b + 1;
}

/// Decides whether { lambda >= 0 : rows * lambda <= rhs } is nonempty by
/// eliminating one variable at a time.
inline bool feasible(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  const std::size_t vars = rows.empty() ? 0 : rows.front().size();
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Rational> neg(vars, 0);
    neg[v] = -1;
    rows.push_back(neg);
    rhs.push_back(0);
  }
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<std::size_t> pos, negs, zero;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][v] > 0)
        pos.push_back(r);
      else if (rows[r][v] < 0)
        negs.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<std::vector<Rational>> next_rows;
    std::vector<Rational> next_rhs;
    for (auto r : zero) {
      next_rows.push_back(rows[r]);
      next_rhs.push_back(rhs[r]);
    }
    for (auto p : pos) {
      for (auto q : negs) {
        const Rational a = rows[p][v], b = -rows[q][v];
        std::vector<Rational> row(vars);
        for (std::size_t k = 0; k < vars; ++k) row[k] = rows[p][k] * b + rows[q][k] * a;
        row[v] = 0;
        next_rows.push_back(std::move(row));
        next_rhs.push_back(rhs[p] * b + rhs[q] * a);
      }
    }
    rows = std::move(next_rows);
    rhs = std::move(next_rhs);
  }
  return std::all_of(rhs.begin(), rhs.end(), [](const Rational& b) { return b >= 0; });
}

// Convex combination of the points `s` that is componentwise <= x.
inline bool dominated_by_hull(const ExpVec& x, const std::vector<ExpVec>& s) {
  const std::size_t m = s.size(), n = x.dim();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = s[j][i];
    rows.push_back(row);
    rhs.push_back(x[i]);
  }
  rows.emplace_back(m, Rational(1));
  rhs.push_back(1);
  rows.emplace_back(m, Rational(-1));
  rhs.push_back(-1);
  return feasible(rows, rhs);
}

/// x in conv(S) + R^n_+. By Caratheodory at most n + 1 points of S are
/// needed, so small subsets keep the elimination tiny.
inline bool in_newton_polyhedron(const ExpVec& x, const std::vector<ExpVec>& s) {
  const std::size_t m = s.size(), k_max = std::min(m, x.dim() + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<ExpVec> sub;
      for (std::size_t j = 0; j < m; ++j)
        if (mask[j]) sub.push_back(s[j]);
      if (dominated_by_hull(x, sub)) return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return false;
}

/// x in conv(S) + R^2_+ for planar S. Every point of the lower boundary lies
/// on a segment between two points of S, so single points and pairs suffice.
inline bool in_newton_polygon(const ExpVec& x, const std::vector<ExpVec>& s) {
  for (const auto& a : s)
    if (a[0] <= x[0] && a[1] <= x[1]) return true;
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = u + 1; v < s.size(); ++v) {
      // lambda s_u + (1 - lambda) s_v <= x, lambda in [0, 1]
      Rational lo = 0, hi = 1;
      bool ok = true;
      for (std::size_t i = 0; i < 2 && ok; ++i) {
        const std::int64_t d = s[u][i] - s[v][i], r = x[i] - s[v][i];
        if (d == 0)
          ok = r >= 0;
        else if (d > 0)
          hi = std::min(hi, Rational(Rational(r) / d));
        else
          lo = std::max(lo, Rational(Rational(r) / d));
      }
      if (ok && lo <= hi) return true;
    }
  }
  return false;
}

/// The points k * s for s in S; NP(kS) = k NP(S).
inline std::vector<ExpVec> dilate(const std::vector<ExpVec>& s, std::int64_t k) {
  std::vector<ExpVec> out;
  for (const auto& a : s) out.push_back(a.scaled(k));
  return out;
}

/// Random cofinite exponent set: one pure power per axis plus `extra` points.
inline std::vector<ExpVec> random_cofinite(std::mt19937_64& rng, std::size_t n, std::int64_t max_coord,
                                           std::size_t extra) {
  std::uniform_int_distribution<std::int64_t> pow(1, max_coord), coord(0, max_coord);
  std::vector<ExpVec> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(ExpVec::unit(n, j, pow(rng)));
  while (extra > 0) {
    std::vector<std::int64_t> v(n);
    for (auto& c : v) c = coord(rng);
    ExpVec e(v);
    if (e.is_zero()) continue;
    out.push_back(e);
    --extra;
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline residuum::Weight random_weight(std::mt19937_64& rng, std::size_t m, std::int64_t pmax) {
  std::uniform_int_distribution<std::int64_t> d(1, pmax);
  std::vector<std::int64_t> w(m);
  for (auto& x : w) x = d(rng);
  return residuum::Weight(w);
}

}  // namespace oracle
