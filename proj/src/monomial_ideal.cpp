#include "residuum/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/newton.hpp"

namespace residuum {

namespace {

std::vector<ExpVec> minimalize(std::vector<ExpVec> raw) {
  std::sort(raw.begin(), raw.end(), [](const ExpVec& a, const ExpVec& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<ExpVec> keep;
  for (auto& g : raw) {
    const bool redundant =
        std::any_of(keep.begin(), keep.end(), [&](const ExpVec& k) { return k.divides(g); });
    if (!redundant) keep.push_back(std::move(g));
  }
  std::sort(keep.begin(), keep.end(), std::greater<>());
  return keep;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_gens(std::vector<ExpVec> raw) {
  if (raw.empty()) throw DomainError("the zero ideal has no generators and is not represented");
  const std::size_t dim = raw.front().dim();
  for (const auto& g : raw)
    if (g.dim() != dim) throw DimensionError("generators of different dimension");
  return MonomialIdeal(dim, minimalize(std::move(raw)));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {ExpVec::zero(dim)}); }

MonomialIdeal MonomialIdeal::pure_powers(const ExpVec& exponents) {
  std::vector<ExpVec> g;
  for (std::size_t j = 0; j < exponents.dim(); ++j) g.push_back(ExpVec::unit(exponents.dim(), j, exponents[j]));
  return from_gens(std::move(g));
}

bool MonomialIdeal::contains(const ExpVec& x) const {
  if (x.dim() != dim_) throw DimensionError("monomial dimension does not match the ideal");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExpVec& g) { return g.divides(x); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExpVec& g) { return contains(g); });
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

bool MonomialIdeal::is_cofinite() const {
  if (is_unit()) return true;
  for (std::size_t j = 0; j < dim_; ++j) {
    const bool hit = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const ExpVec& g) { return g.pure_axis() == static_cast<int>(j); });
    if (!hit) return false;
  }
  return true;
}

bool MonomialIdeal::is_complete_intersection() const { return is_cofinite() && gens_.size() == dim_; }

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ',';
    os << gens_[i].to_string();
  }
  os << ']';
  return os.str();
}

bool member(const ExpVec& x, const MonomialIdeal& ideal) { return ideal.contains(x); }

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionError("intersecting ideals of different dimension");
  std::vector<ExpVec> lcms;
  lcms.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) lcms.push_back(g.join(h));
  return MonomialIdeal::from_gens(std::move(lcms));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExpVec& m) {
  if (m.dim() != ideal.dim()) throw DimensionError("colon by a monomial of different dimension");
  std::vector<ExpVec> q;
  q.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) q.push_back(g.saturating_minus(m));
  return MonomialIdeal::from_gens(std::move(q));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k) {
  if (k < 1) throw DomainError("ideal power must be >= 1");
  MonomialIdeal acc = ideal;
  for (std::int64_t i = 1; i < k; ++i) {
    std::vector<ExpVec> prods;
    prods.reserve(acc.gens().size() * ideal.gens().size());
    for (const auto& g : acc.gens())
      for (const auto& h : ideal.gens()) prods.push_back(g + h);
    acc = MonomialIdeal::from_gens(std::move(prods));
  }
  return acc;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  if (!ideal.is_cofinite()) throw UnsupportedError("integral closure is only implemented for cofinite ideals");
  const auto np = newton_polyhedron(ideal.gens(), ideal.dim());

  // Minimal lattice points of NP: in NP, and no unit step down stays in NP.
  // Minimal points lie in the box spanned by the largest vertex coordinate.
  std::vector<ExpVec> minimal;
  for (const auto& x : lattice_points_in(np, np.max_vertex_coordinate())) {
    bool is_minimal = true;
    for (std::size_t j = 0; j < x.dim() && is_minimal; ++j) {
      if (x[j] == 0) continue;
      auto c = x.coords();
      --c[j];
      if (np.contains(ExpVec(std::move(c)))) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(x);
  }
  return MonomialIdeal::from_gens(std::move(minimal));
}

bool is_cofinite(const MonomialIdeal& ideal) { return ideal.is_cofinite(); }

}  // namespace residuum
