#pragma once

// Newton polyhedron NP(S) = conv(S + R^n_+) of a finite cofinite exponent set:
// compact facets with primitive inward normals (the Rees valuations of the
// monomial ideal generated by z^S), normalized facet volumes, membership.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum {

struct Facet {
  IntVec normal;                       // primitive, all entries >= 1
  std::int64_t level = 0;              // min over S of normal . s
  std::vector<std::size_t> on_facet;   // indices into S with normal . s == level
  std::vector<std::size_t> vertices;   // on_facet entries that are vertices of NP(S)

  /// The monomial valuation z^b -> normal . b, e.g. "3b1+5b2".
  std::string valuation() const;
  bool operator==(const Facet&) const = default;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dim, std::vector<ExpVec> points, std::vector<Facet> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<ExpVec>& points() const { return points_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// Lattice point x lies in NP(S).
  bool contains(const ExpVec& x) const;
  /// Largest coordinate of any vertex.
  std::int64_t max_vertex_coordinate() const;

 private:
  std::size_t dim_;
  std::vector<ExpVec> points_;
  std::vector<Facet> facets_;
};

/// Throws NotCofiniteError unless every axis carries a pure power in S.
void require_cofinite(std::span<const ExpVec> points, std::size_t dim);

/// Compact facets of NP(S). Dispatches to the staircase hull for n = 2 and
/// to the padded general hull for n >= 3; n = 1 has the minimum as its only facet.
NewtonPolyhedron newton_polyhedron(std::span<const ExpVec> points, std::size_t dim);

/// Lower-left staircase hull, n = 2 only.
NewtonPolyhedron newton_polyhedron_staircase(std::span<const ExpVec> points);

/// Exact hull of S plus far points s + B e_j, B = 1 + n * max coordinate,
/// keeping facets with strictly positive normals. Any n >= 2.
NewtonPolyhedron newton_polyhedron_general(std::span<const ExpVec> points, std::size_t dim);

/// n! times the volume of conv(facet, 0).
Integer facet_det(const Facet& facet, std::span<const ExpVec> points);

/// Normalized volume of R^n_+ minus NP(S), the sum of facet_det.
Integer complement_volume(const NewtonPolyhedron& np);

/// For a facet holding exactly n points: a point whose edges to the others,
/// reduced to primitive directions, form a basis of the facet's lattice
/// (normal^perp in Z^n). In such a chart the coefficient exponent matrix is
/// diagonal. Returns the index into on_facet of the first such corner.
std::optional<std::size_t> unimodular_corner(const Facet& facet, std::span<const ExpVec> points);

/// All x in [0, bound]^n inside NP. bound must reach every vertex coordinate.
std::vector<ExpVec> lattice_points_in(const NewtonPolyhedron& np, std::int64_t bound);

}  // namespace residuum
