#pragma once

// Exact combinatorics of small lattice point configurations: affine rank,
// facets, vertices and a pulling triangulation. Everything is brute force over
// subsets, which is adequate for the few dozen points a Newton polyhedron of a
// hand-sized monomial sequence produces.

#include <cstddef>
#include <span>
#include <vector>

#include "residuum/exact.hpp"

namespace residuum::polytope {

using Points = std::span<const IntVec>;
using IndexSet = std::vector<std::size_t>;

/// Dimension of the affine hull of a nonempty point set.
std::size_t affine_dimension(Points pts);

/// A facet of conv(pts) relative to the affine hull of pts.
struct RelativeFacet {
  IndexSet members;  // points on the facet, ascending
  IntVec normal;     // primitive; normal . x >= offset on all pts
  std::int64_t offset = 0;
};

/// Facets of conv(pts). When pts is full dimensional the normals are the
/// usual inward facet normals; otherwise they are functionals that are
/// constant on the facet and nonconstant on the affine hull.
/// Points must be pairwise distinct.
std::vector<RelativeFacet> facets(Points pts);

/// Vertices of conv(pts) as ascending indices. Points must be pairwise distinct.
IndexSet vertices(Points pts);

/// Pulling triangulation of conv(pts) into simplices of dimension
/// affine_dimension(pts); each simplex is a set of point indices.
std::vector<IndexSet> triangulate(Points pts);

}  // namespace residuum::polytope
