#include "residuum/residue.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "residuum/errors.hpp"

namespace residuum {

MonomialSeq::MonomialSeq(std::size_t dim, std::vector<ExpVec> exps) : dim_(dim), exps_(std::move(exps)) {
  if (dim_ == 0) throw DimensionError("dimension must be >= 1");
  require_cofinite(exps_, dim_);
}

Weight::Weight(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("weight is empty");
  for (auto v : values_)
    if (v < 1) throw DomainError("weight entries must be positive, got " + std::to_string(v));
}

bool Weight::is_ones() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 1; });
}

std::string Weight::to_string() const { return residuum::to_string(values_); }

MultiIndex::MultiIndex(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
  if (idx_.empty()) throw DomainError("empty multi-index");
  for (std::size_t k = 1; k < idx_.size(); ++k)
    if (idx_[k - 1] >= idx_[k]) throw DomainError("multi-index must be strictly increasing");
}

MultiIndex MultiIndex::one_based(std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v;
  for (auto i : idx) {
    if (i == 0) throw DomainError("one-based multi-index entry 0");
    v.push_back(i - 1);
  }
  return MultiIndex(std::move(v));
}

bool MultiIndex::contains(std::size_t j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < idx_.size(); ++k) os << (k ? "," : "") << idx_[k] + 1;
  os << '}';
  return os.str();
}

std::vector<MultiIndex> all_multi_indices(std::size_t m, std::size_t n) {
  std::vector<MultiIndex> out;
  if (n == 0 || n > m) return out;
  std::vector<std::size_t> c(n);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.emplace_back(c);
    std::size_t k = n;
    while (k > 0 && c[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) break;
    ++c[k - 1];
    for (std::size_t i = k; i < n; ++i) c[i] = c[i - 1] + 1;
  }
  return out;
}

namespace {

void check_index(const MonomialSeq& seq, const MultiIndex& index) {
  if (index.size() != seq.dim()) throw DimensionError("multi-index " + index.to_string() + " does not have size n");
  if (index[index.size() - 1] >= seq.size())
    throw DomainError("multi-index " + index.to_string() + " is out of range");
}

void check_weight(const MonomialSeq& seq, const Weight& p) {
  if (p.size() != seq.size())
    throw DimensionError("weight has " + std::to_string(p.size()) + " entries, sequence has " +
                         std::to_string(seq.size()));
}

}  // namespace

IntMatrix submatrix(const MonomialSeq& seq, const MultiIndex& index) {
  check_index(seq, index);
  std::vector<IntVec> rows;
  for (auto j : index.positions()) rows.push_back(seq[j].coords());
  return IntMatrix(std::move(rows));
}

std::int64_t weight_product(const Weight& p, const MultiIndex& index) {
  std::int64_t prod = 1;
  for (auto j : index.positions()) prod = checked_mul(prod, p[j]);
  return prod;
}

ExpVec alpha(const MonomialSeq& seq, const MultiIndex& index) {
  check_index(seq, index);
  ExpVec acc = ExpVec::zero(seq.dim());
  for (auto j : index.positions()) acc = acc + seq[j];
  return acc;
}

std::vector<ExpVec> scaled_points(const MonomialSeq& seq, const Weight& p) {
  check_weight(seq, p);
  std::vector<ExpVec> out;
  out.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) out.push_back(seq[j].scaled(p[j]));
  return out;
}

namespace {

std::vector<EssentialIndex> essential_from(const MonomialSeq& seq, const NewtonPolyhedron& np) {
  std::vector<EssentialIndex> out;
  for (auto& index : all_multi_indices(seq.size(), seq.dim())) {
    if (det(submatrix(seq, index)) == 0) continue;
    EssentialIndex e{index, {}};
    for (std::size_t f = 0; f < np.facets().size(); ++f) {
      const auto& on = np.facets()[f].on_facet;
      if (std::all_of(index.positions().begin(), index.positions().end(),
                      [&](std::size_t j) { return std::binary_search(on.begin(), on.end(), j); }))
        e.facets.push_back(f);
    }
    if (!e.facets.empty()) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<EssentialIndex> p_essential_indices(const MonomialSeq& seq, const Weight& p) {
  const auto scaled = scaled_points(seq, p);
  return essential_from(seq, newton_polyhedron(scaled, seq.dim()));
}

std::string to_string(Vanishing v) {
  switch (v) {
    case Vanishing::none: return "none";
    case Vanishing::zero_determinant: return "zero determinant";
    case Vanishing::off_facet: return "not on a common facet";
  }
  return "?";
}

std::vector<const CurrentEntry*> ResidueCurrent::nonvanishing() const {
  std::vector<const CurrentEntry*> out;
  for (const auto& e : entries)
    if (!e.vanishes()) out.push_back(&e);
  return out;
}

ResidueCurrent residue_current(const MonomialSeq& seq, const Weight& p) {
  auto scaled = scaled_points(seq, p);
  auto np = newton_polyhedron(scaled, seq.dim());
  const auto essential = essential_from(seq, np);
  const std::size_t n = seq.dim();

  // Essential indices per facet; each essential index has exactly one
  // witness, since n linearly independent points span a single hyperplane.
  std::vector<std::size_t> per_facet(np.facets().size(), 0);
  for (const auto& e : essential)
    for (auto f : e.facets) ++per_facet[f];

  auto known = [&](const EssentialIndex& e) {
    return std::all_of(e.facets.begin(), e.facets.end(), [&](std::size_t f) {
      const auto& facet = np.facets()[f];
      if (per_facet[f] != 1 || facet.on_facet.size() != n) return false;
      return n <= 2 || unimodular_corner(facet, scaled).has_value();
    });
  };

  std::vector<CurrentEntry> entries;
  std::size_t next = 0;
  for (auto& index : all_multi_indices(seq.size(), n)) {
    CurrentEntry entry{index, Vanishing::none, det(submatrix(seq, index)), 0, alpha(seq, index),
                       CoefficientConstrained{}, {}};
    if (next < essential.size() && essential[next].index == index) {
      const auto& e = essential[next++];
      entry.sign = sign(entry.det);
      entry.witnesses = e.facets;
      if (known(e))
        entry.coeff = CoefficientKnown{};
      else
        entry.coeff = CoefficientConstrained{e.facets.front()};
    } else {
      entry.vanishing = entry.det == 0 ? Vanishing::zero_determinant : Vanishing::off_facet;
    }
    entries.push_back(std::move(entry));
  }
  return ResidueCurrent{seq, p, std::move(scaled), std::move(np), std::move(entries)};
}

MonomialIdeal annihilator(const MonomialSeq& seq, const Weight& p) {
  const auto essential = p_essential_indices(seq, p);
  if (essential.empty()) throw DomainError("no p-essential multi-index");
  auto acc = MonomialIdeal::pure_powers(alpha(seq, essential.front().index));
  for (std::size_t k = 1; k < essential.size(); ++k)
    acc = intersect(acc, MonomialIdeal::pure_powers(alpha(seq, essential[k].index)));
  return acc;
}

Integer CoffeRelation::divisor() const {
  Integer g = rhs;
  for (const auto& t : terms) g = gcd(g, t.scaled_det);
  return g == 0 ? Integer(1) : g;
}

bool CoffeRelation::readings_differ() const {
  return std::any_of(terms.begin(), terms.end(), [](const CoffeTerm& t) { return t.weight_product != 1; });
}

namespace {

std::string render_relation(const std::vector<CoffeTerm>& terms, bool use_scaled, const Integer& rhs,
                            const Integer& div) {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Integer c = (use_scaled ? terms[k].scaled_det : terms[k].unscaled_det) / div;
    if (k) os << " + ";
    if (c != 1) os << c << ' ';
    os << 'C' << terms[k].index.to_string();
  }
  os << " = " << rhs / div;
  return os.str();
}

}  // namespace

std::string CoffeRelation::to_string(bool reduced) const {
  return render_relation(terms, true, rhs, reduced ? divisor() : Integer(1));
}

std::string CoffeRelation::unscaled_string() const { return render_relation(terms, false, rhs, Integer(1)); }

std::vector<CoffeRelation> coffe_constraints(const ResidueCurrent& current) {
  std::vector<CoffeRelation> out;
  const auto& facets = current.scaled_np.facets();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    CoffeRelation rel;
    rel.facet = f;
    rel.normal = facets[f].normal;
    rel.rhs = facet_det(facets[f], current.scaled);
    for (const auto& e : current.entries) {
      if (e.vanishes() || std::find(e.witnesses.begin(), e.witnesses.end(), f) == e.witnesses.end()) continue;
      const std::int64_t prod = weight_product(current.weight, e.index);
      rel.terms.push_back(CoffeTerm{e.index, abs(e.det) * prod, abs(e.det), prod});
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<CoffeRelation> coffe_constraints(const MonomialSeq& seq, const Weight& p) {
  return coffe_constraints(residue_current(seq, p));
}

Multiplicity multiplicity_ep(const ResidueCurrent& current) {
  Multiplicity result;
  const std::size_t n = current.seq.dim();
  const auto relations = coffe_constraints(current);
  const auto live = current.nonvanishing();

  // Floating estimate from Known and Numeric coefficients, when all are available.
  double estimate = 0.0, error = 0.0;
  bool all_valued = true;
  for (const auto* e : live) {
    const double d = abs(e->det).convert_to<double>();
    if (std::holds_alternative<CoefficientKnown>(e->coeff)) {
      estimate += d;
    } else if (const auto* num = std::get_if<CoefficientNumeric>(&e->coeff)) {
      estimate += num->estimate * d;
      error += num->abs_error * d;
    } else {
      all_valued = false;
    }
  }

  if (n == 1) {
    // All points at the minimum have the same modulus, so each of the l
    // essential entries carries C = 1/l.
    Rational total = 0;
    for (const auto* e : live) total += Rational(abs(e->det), static_cast<long>(live.size()));
    result.exact = total;
  } else if (current.weight.is_ones() && n > 2) {
    // At weight one e^p is the Hilbert-Samuel multiplicity, the complement volume.
    Integer total = 0;
    for (const auto& r : relations) total += r.rhs;
    result.exact = Rational(total);
  } else {
    Rational total = 0;
    for (const auto& r : relations) {
      const bool single_known =
          r.terms.size() == 1 && std::any_of(live.begin(), live.end(), [&](const CurrentEntry* e) {
            return e->index == r.terms.front().index && std::holds_alternative<CoefficientKnown>(e->coeff);
          });
      if (single_known) {
        total += Rational(r.terms.front().unscaled_det);
        continue;
      }
      // For n = 2 the balance relation holds: with a common weight product P
      // it reads P * sum C_I |det A_I| = det(tau).
      const bool uniform =
          !r.terms.empty() && std::all_of(r.terms.begin(), r.terms.end(), [&](const CoffeTerm& t) {
            return t.weight_product == r.terms.front().weight_product;
          });
      if (n == 2 && uniform) {
        total += Rational(r.rhs, r.terms.front().weight_product);
      } else {
        result.constraints.push_back(r);
      }
    }
    if (result.constraints.empty()) result.exact = total;
  }

  if (all_valued) {
    result.estimate = estimate;
    result.abs_error = error;
  } else if (result.exact) {
    result.estimate = result.exact->convert_to<double>();
    result.abs_error = 0.0;
  }
  return result;
}

Multiplicity multiplicity_ep(const MonomialSeq& seq, const Weight& p) {
  return multiplicity_ep(residue_current(seq, p));
}

TheoremAReport theorem_a_report(const MonomialSeq& seq, const Weight& p) {
  TheoremAReport r{integral_closure(power(MonomialIdeal::from_gens(scaled_points(seq, p)),
                                          static_cast<std::int64_t>(seq.dim()))),
                   {},
                   MonomialIdeal::unit(seq.dim()),
                   annihilator(seq, p),
                   seq.ideal()};
  std::optional<MonomialIdeal> left;
  for (const auto& e : p_essential_indices(seq, p)) {
    ExpVec shift = ExpVec::zero(seq.dim());
    for (auto j : e.index.positions()) shift = shift + seq[j].scaled(p[j] - 1);
    r.shifts.emplace_back(e.index, shift);
    auto part = colon_monomial(r.closure_power, shift);
    left = left ? intersect(*left, part) : part;
  }
  r.left = *left;
  r.left_included = r.ann.contains(r.left);
  r.right_included = r.right.contains(r.ann);
  r.left_strict = r.left_included && r.left != r.ann;
  r.right_equal = r.ann == r.right;
  r.right_is_complete_intersection = r.right.is_complete_intersection();
  r.right_equality_implies_ci = !r.right_equal || r.right_is_complete_intersection;
  return r;
}

bool is_regular_sequence(const MonomialSeq& seq) {
  if (seq.size() != seq.dim()) return false;
  std::set<int> axes;
  for (const auto& a : seq.exps()) {
    const int axis = a.pure_axis();
    if (axis < 0 || !axes.insert(axis).second) return false;
  }
  return true;
}

bool current_independent_of_p(const MonomialSeq& seq) { return is_regular_sequence(seq); }

bool ann_independent_of_p(const MonomialSeq& seq) {
  const auto whole = seq.ideal();
  for (const auto& index : all_multi_indices(seq.size(), seq.dim())) {
    if (det(submatrix(seq, index)) == 0) continue;
    std::vector<ExpVec> sub;
    for (auto j : index.positions()) sub.push_back(seq[j]);
    if (MonomialIdeal::from_gens(std::move(sub)) != whole) return false;
  }
  return true;
}

Weight proof_weights(const MonomialSeq& seq, std::size_t j) {
  if (j >= seq.size())
    throw DomainError("index " + std::to_string(j + 1) + " is outside 1.." + std::to_string(seq.size()));
  Integer l = 1;
  for (const auto& a : seq.exps()) l = lcm(l, Integer(a.degree()));
  std::vector<std::int64_t> q;
  for (const auto& a : seq.exps()) q.push_back(to_int64(l / a.degree()));
  return Weight(std::move(q));
}

namespace {

// Weight 1 on the positions of `index` and `big` elsewhere.
Weight weight_on(const MonomialSeq& seq, const MultiIndex& index, std::int64_t big) {
  std::vector<std::int64_t> w(seq.size(), big);
  for (auto j : index.positions()) w[j] = 1;
  return Weight(std::move(w));
}

std::int64_t max_coordinate(const MonomialSeq& seq) {
  std::int64_t b = 0;
  for (const auto& a : seq.exps())
    for (auto c : a.coords()) b = std::max(b, c);
  return b;
}

// n-subsets made of pure powers on distinct axes.
std::vector<MultiIndex> pure_power_indices(const MonomialSeq& seq) {
  std::vector<MultiIndex> out;
  for (auto& index : all_multi_indices(seq.size(), seq.dim())) {
    std::set<int> axes;
    bool ok = true;
    for (auto j : index.positions()) {
      const int axis = seq[j].pure_axis();
      if (axis < 0 || !axes.insert(axis).second) ok = false;
    }
    if (ok) out.push_back(std::move(index));
  }
  return out;
}

}  // namespace

std::pair<Weight, MultiIndex> isolating_weight(const MonomialSeq& seq) {
  std::vector<std::size_t> chosen;
  for (std::size_t axis = 0; axis < seq.dim(); ++axis) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (seq[j].pure_axis() != static_cast<int>(axis)) continue;
      if (!best || seq[j][axis] < seq[*best][axis]) best = j;
    }
    chosen.push_back(*best);
  }
  std::sort(chosen.begin(), chosen.end());
  MultiIndex index(std::move(chosen));
  return {weight_on(seq, index, max_coordinate(seq) + 1), index};
}

IndependenceReport independence_report(const MonomialSeq& seq) {
  IndependenceReport r;
  r.regular = is_regular_sequence(seq);
  r.current_independent = current_independent_of_p(seq);
  r.ann_independent = ann_independent_of_p(seq);

  std::vector<Weight> candidates{Weight::ones(seq.size())};
  for (std::size_t j = 0; j < seq.size(); ++j) {
    auto q = proof_weights(seq, j);
    if (std::find(candidates.begin(), candidates.end(), q) == candidates.end()) candidates.push_back(q);
  }
  for (const auto& index : pure_power_indices(seq)) {
    auto w = weight_on(seq, index, max_coordinate(seq) + 1);
    if (std::find(candidates.begin(), candidates.end(), w) == candidates.end()) candidates.push_back(w);
  }

  std::vector<std::vector<MultiIndex>> patterns;
  std::vector<MonomialIdeal> anns;
  for (const auto& w : candidates) {
    std::vector<MultiIndex> pattern;
    for (auto& e : p_essential_indices(seq, w)) pattern.push_back(std::move(e.index));
    patterns.push_back(std::move(pattern));
    anns.push_back(annihilator(seq, w));
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      if (!r.current_witness && patterns[a] != patterns[b])
        r.current_witness = WeightWitness{candidates[a], candidates[b]};
      if (!r.ann_witness && anns[a] != anns[b]) r.ann_witness = WeightWitness{candidates[a], candidates[b]};
    }
  }
  return r;
}

}  // namespace residuum
