#pragma once

// Bundled problem files and the published reference values they carry.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "residuum/problem.hpp"

namespace residuum::fixtures {

std::vector<std::string> names();
std::optional<std::string_view> text(std::string_view name);
Problem load(std::string_view name);

/// Name of the bundled fixture with the same dimension and generator
/// sequence, if any.
std::optional<std::string> match(const Problem& problem);

/// Left ideal of the inclusion chain for ex41 with weight q as printed in
/// the literature: z1^15, z1^11 z2, z1^7 z2^2, z1^3 z2^3, z1^2 z2^5, z1 z2^9, z2^12.
MonomialIdeal printed_left_ideal_ex41_q();

}  // namespace residuum::fixtures
