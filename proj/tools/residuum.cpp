// residuum <command> <problem-file|fixture> [weight] [options]
//
// Exit codes: 0 success, 2 invalid input, 3 sweep refused for size, 1 other failures.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "residuum/errors.hpp"
#include "residuum/report.hpp"

int main(int argc, char** argv) {
  using namespace residuum;

  CLI::App app{"Residue currents, annihilators and multiplicities of monomial sequences"};
  app.set_version_flag("--version", "residuum 1.0");

  std::string command, source, weight;
  RunRequest req;
  bool as_json = false;
  std::int64_t pmax = 0;
  double tol = 0;
  unsigned threads = 0;
  std::string svg;

  std::string command_list;
  for (const auto& c : commands()) command_list += (command_list.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + command_list)->required();
  app.add_option("problem", source, "Problem file or bundled fixture (ex41, ex42, ex54)")->required();
  app.add_option("weight", weight, "Weight name from the problem file; all ones when omitted");
  auto* pmax_opt = app.add_option("--pmax", pmax, "Largest weight entry in a sweep")->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
  auto* threads_opt = app.add_option("--threads", threads, "Sweep worker threads")->check(CLI::PositiveNumber);
  auto* svg_opt = app.add_option("--svg", svg, "Write an SVG drawing to this path");
  app.add_flag("--numeric", req.numeric, "Estimate constrained coefficients by quadrature");
  app.add_flag("--json", as_json, "Print the machine-readable report");
  app.add_flag("--force", req.force, "Run sweeps beyond the size guard");
  app.add_flag("--experimental", req.experimental, "Enable the n = 3 quadrature path");
  app.add_flag("--staircase", req.staircase, "render: draw the ideal staircases instead of the Newton polygon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  req.command = command;
  req.source = source;
  if (!weight.empty()) req.weight_name = weight;
  if (*pmax_opt) req.pmax = pmax;
  if (*tol_opt) req.tol = tol;
  if (*threads_opt) req.threads = threads;
  if (*svg_opt) req.svg_path = svg;

  try {
    const Report report = run(load_problem(source), req);
    if (as_json)
      std::cout << nlohmann::json(report).dump(2) << '\n';
    else
      std::cout << render_text(report);
    return 0;
  } catch (const ScaleRefusedError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << source << ": " << e.what() << '\n';
    return 2;
  } catch (const NotCofiniteError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
