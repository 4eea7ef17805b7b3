#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum {

/// A nonzero monomial ideal in n variables, kept as its minimal generators
/// sorted in decreasing lexicographic order (z1^a first), so equality of
/// ideals is equality of generator lists. The unit ideal is {0}.
class MonomialIdeal {
 public:
  static MonomialIdeal from_gens(std::vector<ExpVec> raw);
  static MonomialIdeal unit(std::size_t dim);
  /// (z1^a1, ..., zn^an)
  static MonomialIdeal pure_powers(const ExpVec& exponents);

  std::size_t dim() const { return dim_; }
  const std::vector<ExpVec>& gens() const { return gens_; }

  bool contains(const ExpVec& x) const;
  bool contains(const MonomialIdeal& other) const;
  bool is_unit() const;
  /// Every variable has a pure power among the generators.
  bool is_cofinite() const;
  /// Cofinite and minimally generated by n elements.
  bool is_complete_intersection() const;

  bool operator==(const MonomialIdeal&) const = default;

  /// "[(7,0),(2,2),(0,5)]"
  std::string to_string() const;

 private:
  MonomialIdeal(std::size_t dim, std::vector<ExpVec> gens) : dim_(dim), gens_(std::move(gens)) {}

  std::size_t dim_ = 0;
  std::vector<ExpVec> gens_;
};

bool member(const ExpVec& x, const MonomialIdeal& ideal);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// J : (z^m)
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExpVec& m);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k);
/// Monomials with exponents in the Newton polyhedron of the generators.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);
bool is_cofinite(const MonomialIdeal& ideal);

}  // namespace residuum
