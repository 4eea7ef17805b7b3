#pragma once

// Weighted Bochner-Martinelli residue currents of monomial sequences.
//
// For a sequence z^A = (z^{a^1}, ..., z^{a^m}) with V(z^A) = {0} and a weight
// p in N^m, the entry of R^p(z^A) at an n-subset I is
//
//     sgn(det A_I) * C_I * dbar[1/z1^{alpha_1}] ^ ... ^ dbar[1/zn^{alpha_n}],
//     alpha = sum_{j in I} a^j,
//
// with C_I > 0 exactly when I is p-essential: det A_I != 0 and the scaled
// points {p_j a^j : j in I} lie on one compact facet of NP(pA). Everything
// here is exact; numeric values of C_I come from the quadrature module.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "residuum/exact.hpp"
#include "residuum/monomial_ideal.hpp"
#include "residuum/newton.hpp"

namespace residuum {

/// The ordered exponent sequence A = (a^1, ..., a^m) in dimension n.
class MonomialSeq {
 public:
  MonomialSeq(std::size_t dim, std::vector<ExpVec> exps);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return exps_.size(); }
  const ExpVec& operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<ExpVec>& exps() const { return exps_; }

  /// a(z^A)
  MonomialIdeal ideal() const { return MonomialIdeal::from_gens(exps_); }

 private:
  std::size_t dim_;
  std::vector<ExpVec> exps_;
};

class Weight {
 public:
  explicit Weight(std::vector<std::int64_t> values);
  static Weight ones(std::size_t m) { return Weight(std::vector<std::int64_t>(m, 1)); }

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t j) const { return values_[j]; }
  const std::vector<std::int64_t>& values() const { return values_; }
  bool is_ones() const;

  auto operator<=>(const Weight&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::int64_t> values_;
};

/// Strictly increasing positions into the sequence, stored 0-based and
/// printed 1-based ("{1,4}").
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::size_t> idx);
  static MultiIndex one_based(std::initializer_list<std::size_t> idx);

  std::size_t size() const { return idx_.size(); }
  std::size_t operator[](std::size_t k) const { return idx_[k]; }
  const std::vector<std::size_t>& positions() const { return idx_; }
  bool contains(std::size_t j) const;

  auto operator<=>(const MultiIndex&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::size_t> idx_;
};

/// All n-subsets of {0..m-1} in lexicographic order.
std::vector<MultiIndex> all_multi_indices(std::size_t m, std::size_t n);

/// A_I as a matrix with rows a^{i_1}, ..., a^{i_n}.
IntMatrix submatrix(const MonomialSeq& seq, const MultiIndex& index);
std::int64_t weight_product(const Weight& p, const MultiIndex& index);
ExpVec alpha(const MonomialSeq& seq, const MultiIndex& index);

/// {p_1 a^1, ..., p_m a^m} in sequence order.
std::vector<ExpVec> scaled_points(const MonomialSeq& seq, const Weight& p);

struct EssentialIndex {
  MultiIndex index;
  std::vector<std::size_t> facets;  // witnessing facets of NP(pA)
};

std::vector<EssentialIndex> p_essential_indices(const MonomialSeq& seq, const Weight& p);

enum class Vanishing { none, zero_determinant, off_facet };
std::string to_string(Vanishing v);

/// C_I = 1 exactly.
struct CoefficientKnown {
  bool operator==(const CoefficientKnown&) const = default;
};
/// C_I is tied to others by the balance relation of facet `relation`.
struct CoefficientConstrained {
  std::size_t relation = 0;
  bool operator==(const CoefficientConstrained&) const = default;
};
/// Quadrature estimate of C_I with its error bound.
struct CoefficientNumeric {
  std::size_t relation = 0;
  double estimate = 0.0;
  double abs_error = 0.0;
  std::size_t cells = 0;
  bool operator==(const CoefficientNumeric&) const = default;
};
using Coefficient = std::variant<CoefficientKnown, CoefficientConstrained, CoefficientNumeric>;

struct CurrentEntry {
  MultiIndex index;
  Vanishing vanishing = Vanishing::none;
  Integer det;  // det A_I (unscaled)
  int sign = 0;
  ExpVec alpha;
  Coefficient coeff;
  std::vector<std::size_t> witnesses;

  bool vanishes() const { return vanishing != Vanishing::none; }
};

struct ResidueCurrent {
  MonomialSeq seq;
  Weight weight;
  std::vector<ExpVec> scaled;
  NewtonPolyhedron scaled_np;
  std::vector<CurrentEntry> entries;  // all C(m, n) multi-indices, lexicographic

  std::vector<const CurrentEntry*> nonvanishing() const;
};

ResidueCurrent residue_current(const MonomialSeq& seq, const Weight& p);

/// ann R^p(z^A) = intersection over p-essential I of (z1^{alpha_1}, ..., zn^{alpha_n}).
MonomialIdeal annihilator(const MonomialSeq& seq, const Weight& p);

struct CoffeTerm {
  MultiIndex index;
  Integer scaled_det;    // |det (pA)_I|
  Integer unscaled_det;  // |det A_I|
  std::int64_t weight_product = 1;
};

/// Balance relation of one compact facet tau of NP(pA):
///   sum over I essential w.r.t. tau of |det (pA)_I| C_I = det(tau).
struct CoffeRelation {
  std::size_t facet = 0;
  IntVec normal;
  std::vector<CoffeTerm> terms;
  Integer rhs;

  /// gcd of all coefficients and the right-hand side.
  Integer divisor() const;
  /// Whether the relation written with |det A_I| has different coefficients.
  bool readings_differ() const;
  /// "45 C{1,2} + 225 C{1,4} + 180 C{2,4} = 225"; reduced divides by divisor().
  std::string to_string(bool reduced = false) const;
  /// Same relation with |det A_I| coefficients.
  std::string unscaled_string() const;
};

std::vector<CoffeRelation> coffe_constraints(const MonomialSeq& seq, const Weight& p);
std::vector<CoffeRelation> coffe_constraints(const ResidueCurrent& current);

/// e^p(z^A) = sum over p-essential I of C_I |det A_I|.
struct Multiplicity {
  std::optional<Rational> exact;
  /// Relations left undetermined (empty when exact is set).
  std::vector<CoffeRelation> constraints;
  /// Available once every coefficient is known or numerically estimated.
  std::optional<double> estimate;
  std::optional<double> abs_error;

  bool determined() const { return exact.has_value(); }
};

Multiplicity multiplicity_ep(const MonomialSeq& seq, const Weight& p);
/// Uses numeric coefficients already stored in the current for the estimate.
Multiplicity multiplicity_ep(const ResidueCurrent& current);

struct TheoremAReport {
  MonomialIdeal closure_power;  // integral closure of a(z^{pA})^n
  std::vector<std::pair<MultiIndex, ExpVec>> shifts;  // sum_{j in I} (p_j - 1) a^j
  MonomialIdeal left;
  MonomialIdeal ann;
  MonomialIdeal right;  // a(z^A)
  bool left_included = false;
  bool right_included = false;
  bool left_strict = false;
  bool right_equal = false;
  bool right_is_complete_intersection = false;
  /// ann == a(z^A) implies a(z^A) is a complete intersection.
  bool right_equality_implies_ci = false;
};

TheoremAReport theorem_a_report(const MonomialSeq& seq, const Weight& p);

/// m = n and the a^j are pure powers on distinct axes.
bool is_regular_sequence(const MonomialSeq& seq);
/// The current R^p(z^A) does not depend on p.
bool current_independent_of_p(const MonomialSeq& seq);
/// ann R^p(z^A) does not depend on p: every I has det A_I = 0 or z^{A_I} generates a(z^A).
bool ann_independent_of_p(const MonomialSeq& seq);

/// A weight putting every scaled point on the compact facet
/// sum x = lcm(|a^1|, ..., |a^m|); in particular a^j lands on a compact
/// facet. Throws DomainError when j is out of range.
Weight proof_weights(const MonomialSeq& seq, std::size_t j);

/// Weight 1 on the smallest pure power of each axis and a large value
/// elsewhere, making that multi-index the only p-essential one.
std::pair<Weight, MultiIndex> isolating_weight(const MonomialSeq& seq);

struct WeightWitness {
  Weight first;
  Weight second;
};

struct IndependenceReport {
  bool regular = false;
  bool current_independent = false;
  bool ann_independent = false;
  /// Two weights whose sets of nonvanishing entries differ.
  std::optional<WeightWitness> current_witness;
  /// Two weights whose annihilators differ.
  std::optional<WeightWitness> ann_witness;
};

IndependenceReport independence_report(const MonomialSeq& seq);

}  // namespace residuum
