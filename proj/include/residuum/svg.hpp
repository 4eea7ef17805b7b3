#pragma once

// Deterministic SVG drawings for n = 2: the Newton polygon of pA with its
// facets labelled by primitive normals, and monomial staircases.

#include <string>
#include <utility>
#include <vector>

#include "residuum/monomial_ideal.hpp"
#include "residuum/residue.hpp"

namespace residuum {

/// Axes, the points p_j a^j, the region NP(pA) and one label per compact facet.
std::string render_newton_svg(const MonomialSeq& seq, const Weight& p, const std::string& title);

/// Staircase outlines of cofinite ideals, drawn in the given order (the first
/// one darkest), each with a legend entry.
std::string render_staircase_svg(const std::vector<std::pair<std::string, MonomialIdeal>>& ideals,
                                 const std::string& title);

}  // namespace residuum
