#pragma once

// Command dispatch and the versioned JSON report shared by the CLI and tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "residuum/problem.hpp"

namespace residuum {

constexpr int report_schema = 1;

struct Report {
  int schema = report_schema;
  std::string command;
  std::string source;
  std::optional<std::string> fixture;  // bundled fixture with the same generators
  std::optional<std::string> weight_name;
  std::size_t dim = 0;
  std::vector<IntVec> gens;
  std::optional<IntVec> weight;
  nlohmann::json results;

  bool operator==(const Report&) const = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

struct RunRequest {
  std::string command;
  std::string source;  // echoed into the report
  std::optional<std::string> weight_name;
  std::optional<std::int64_t> pmax;
  std::optional<double> tol;
  std::optional<unsigned> threads;
  std::optional<std::string> svg_path;
  bool numeric = false;
  bool force = false;
  bool experimental = false;
  bool staircase = false;
};

const std::vector<std::string>& commands();

/// Runs one command on a parsed problem. Command-line values override the
/// problem's `option` lines. Throws DomainError for an unknown command or
/// weight and ScaleRefusedError for an oversized sweep.
Report run(const Problem& problem, const RunRequest& request);

/// Human-readable rendering of a report.
std::string render_text(const Report& report);

}  // namespace residuum
