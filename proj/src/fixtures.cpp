#include "residuum/fixtures.hpp"

#include <array>
#include <utility>

#include "residuum/errors.hpp"

namespace residuum::fixtures {

namespace {

constexpr std::string_view ex41 = R"(# Four monomials in two variables, four weights.
name ex41
dim 2
gen 5 0
gen 4 1
gen 2 2
gen 0 3
weight p 1 1 1 1
weight q 2 2 1 3
weight r 3 3 4 5
weight s 2 1 1 2
option pmax 6
)";

constexpr std::string_view ex42 = R"(# z and z^2 in one variable.
name ex42
dim 1
gen 1
gen 2
weight p1 1 1
weight p2 2 1
weight p3 3 1
)";

constexpr std::string_view ex54 = R"(# The square of the maximal ideal in two variables, three generators.
name ex54
dim 2
gen 2 0
gen 1 1
gen 0 2
weight p 1 1 1
weight q 1 2 1
weight r 2 1 1
option pmax 3
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> table{{
    {"ex41", ex41},
    {"ex42", ex42},
    {"ex54", ex54},
}};

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : table) out.emplace_back(name);
  return out;
}

std::optional<std::string_view> text(std::string_view name) {
  for (const auto& [n, body] : table)
    if (n == name) return body;
  return std::nullopt;
}

Problem load(std::string_view name) {
  const auto body = text(name);
  if (!body) throw DomainError("no bundled fixture named '" + std::string(name) + "'");
  return parse_problem(*body);
}

std::optional<std::string> match(const Problem& problem) {
  for (const auto& [name, body] : table) {
    const auto f = parse_problem(body);
    if (f.dim == problem.dim && f.gens == problem.gens) return std::string(name);
  }
  return std::nullopt;
}

MonomialIdeal printed_left_ideal_ex41_q() {
  return MonomialIdeal::from_gens({{15, 0}, {11, 1}, {7, 2}, {3, 3}, {2, 5}, {1, 9}, {0, 12}});
}

}  // namespace residuum::fixtures
