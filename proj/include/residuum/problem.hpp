#pragma once

// Line-oriented problem files:
//
//   # comment
//   name ex41
//   dim 2
//   gen 5 0
//   gen 4 1
//   weight q 2 2 1 3
//   option pmax 6
//   option tol 1e-9
//
// Tokens are separated by blanks; `#` starts a comment anywhere on a line.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "residuum/residue.hpp"

namespace residuum {

struct ProblemOptions {
  std::optional<std::int64_t> pmax;
  std::optional<double> tol;
  std::optional<unsigned> threads;
  bool numeric = false;
  bool experimental = false;
};

struct Problem {
  std::string name;  // empty unless given by a `name` line
  std::size_t dim = 0;
  std::vector<ExpVec> gens;
  std::vector<std::pair<std::string, Weight>> weights;
  ProblemOptions options;

  MonomialSeq seq() const { return MonomialSeq(dim, gens); }
  /// Throws DomainError listing the known names when `name` is absent.
  const Weight& weight(const std::string& name) const;
};

/// Throws ParseError for syntax and shape problems and NotCofiniteError
/// when V(z^A) != {0}.
Problem parse_problem(std::string_view text);

/// Reads `source` as a file path, or as a bundled fixture name when no such
/// file exists.
Problem load_problem(const std::string& source);

}  // namespace residuum
