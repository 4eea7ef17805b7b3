#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/fixtures.hpp"
#include "residuum/problem.hpp"
#include "residuum/report.hpp"
#include "residuum/svg.hpp"

using namespace residuum;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("parsing a complete problem") {
  const auto p = parse_problem(
      "# comment\n"
      "name demo   # trailing comment\n"
      "dim 2\n"
      "gen 3 0\n"
      "gen 1 1\n"
      "gen 0 2\n"
      "\n"
      "weight w 1 2 1\n"
      "option pmax 4\n"
      "option tol 1e-8\n"
      "option threads 2\n"
      "option numeric true\n");
  CHECK(p.name == "demo");
  CHECK(p.dim == 2);
  CHECK(p.gens.size() == 3);
  CHECK(p.weight("w") == Weight({1, 2, 1}));
  CHECK(*p.options.pmax == 4);
  CHECK(*p.options.tol == doctest::Approx(1e-8));
  CHECK(*p.options.threads == 2);
  CHECK(p.options.numeric);
  CHECK_FALSE(p.options.experimental);
}

TEST_CASE("parse errors carry positions") {
  auto fails_at = [](const std::string& text, std::size_t line) {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(fails_at("dim 2\ngen 1\n", 2));
  CHECK(fails_at("dim 2\ngen 1 x\n", 2));
  CHECK(fails_at("dim 2\ngen 1 -1\n", 2));
  CHECK(fails_at("gen 1 0\n", 1));
  CHECK(fails_at("dim 0\n", 1));
  CHECK(fails_at("dim 2\ndim 2\n", 2));
  CHECK(fails_at("dim 2\nbogus 1\n", 2));
  CHECK(fails_at("dim 2\ngen 1 0\ngen 0 1\nweight w 0 1\n", 4));
  CHECK(fails_at("dim 2\ngen 1 0\ngen 0 1\noption pmax\n", 4));
  CHECK(fails_at("dim 2\ngen 1 0\ngen 0 1\noption colour 3\n", 4));
  CHECK(fails_at("dim 2\ngen 1 0\ngen 0 1\nweight w 1 1\nweight w 1 1\n", 5));
  CHECK_THROWS_AS(parse_problem(""), ParseError);
}

TEST_CASE("a weight of the wrong length is reported at its line and by name") {
  try {
    parse_problem("dim 2\ngen 2 0\ngen 0 2\ngen 1 1\nweight short 1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("short") != std::string::npos);
  }
}

TEST_CASE("non-cofinite generators are rejected") {
  CHECK_THROWS_AS(parse_problem("dim 2\ngen 2 0\ngen 1 1\n"), NotCofiniteError);
  try {
    parse_problem("dim 2\ngen 2 0\ngen 1 1\n");
  } catch (const NotCofiniteError& e) {
    CHECK(std::string(e.what()).find("V(z^A) != {0}") != std::string::npos);
  }
}

TEST_CASE("unknown weights list the known names") {
  const auto p = fixtures::load("ex41");
  try {
    (void)p.weight("zz");
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("zz") != std::string::npos);
    CHECK(msg.find("q") != std::string::npos);
  }
}

TEST_CASE("fixtures") {
  CHECK(fixtures::names() == std::vector<std::string>{"ex41", "ex42", "ex54"});
  for (const auto& n : fixtures::names()) {
    const auto p = fixtures::load(n);
    CHECK(fixtures::match(p) == n);
    CHECK(load_problem(n).gens == p.gens);
  }
  CHECK_FALSE(fixtures::text("nope").has_value());
  CHECK_THROWS_AS(fixtures::load("nope"), DomainError);
  CHECK_THROWS_AS(load_problem("definitely/not/a/file.txt"), DomainError);
  CHECK(fixtures::load("ex41").weight("s") == Weight({2, 1, 1, 2}));
  CHECK(*fixtures::load("ex41").options.pmax == 6);
  CHECK_FALSE(fixtures::match(parse_problem("dim 2\ngen 5 0\ngen 0 3\n")).has_value());
}

TEST_CASE("problem files on disk take precedence over fixture names") {
  const auto path = temp_path("residuum_problem_test.txt");
  {
    std::ofstream out(path);
    out << "dim 2\ngen 5 0\ngen 0 3\nweight w 2 2\n";
  }
  const auto p = load_problem(path.string());
  CHECK(p.gens.size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("reports round-trip through JSON for every command") {
  const auto problem = fixtures::load("ex41");
  for (const auto& cmd : commands()) {
    if (cmd == "render") continue;
    RunRequest req;
    req.command = cmd;
    req.source = "ex41";
    if (cmd != "sweep" && cmd != "independence") req.weight_name = "r";
    req.pmax = 3;
    const Report r = run(problem, req);
    CAPTURE(cmd);
    CHECK(r.schema == report_schema);
    CHECK(r.fixture == std::optional<std::string>("ex41"));
    const nlohmann::json j = r;
    const Report back = j.get<Report>();
    CHECK(back == r);
    CHECK(nlohmann::json::parse(j.dump()).get<Report>() == r);
    CHECK_FALSE(render_text(r).empty());
  }
}

TEST_CASE("report contents") {
  const auto problem = fixtures::load("ex41");
  RunRequest req;
  req.source = "ex41";
  req.command = "annihilator";
  req.weight_name = "q";
  CHECK(run(problem, req).results["text"] == "[(7,0),(2,2),(0,5)]");

  req.command = "multiplicity";
  req.weight_name = "s";
  const auto m = run(problem, req);
  CHECK(m.results["determined"] == true);
  CHECK(render_text(m).find("e^p = 17") != std::string::npos);

  req.command = "theorem-a";
  req.weight_name = "q";
  const auto t = run(problem, req);
  CHECK(t.results["reference"]["agrees"] == true);

  req.command = "sweep";
  req.weight_name.reset();
  req.pmax = 6;
  const auto s = run(problem, req);
  CHECK(s.results["distinct"] == 9);
  CHECK_FALSE(s.weight.has_value());
  CHECK(render_text(s).find("9 distinct") != std::string::npos);

  req.pmax = 100;
  CHECK_THROWS_AS(run(problem, req), ScaleRefusedError);

  req.command = "frobnicate";
  CHECK_THROWS_AS(run(problem, req), DomainError);
  req.command = "render";
  CHECK_THROWS_AS(run(problem, req), DomainError);
}

TEST_CASE("malformed JSON reports are rejected") {
  CHECK_THROWS(nlohmann::json::parse(R"({"schema":1})").get<Report>());
}

TEST_CASE("SVG output is deterministic") {
  const MonomialSeq ex41(2, {{5, 0}, {4, 1}, {2, 2}, {0, 3}});
  const auto a = render_newton_svg(ex41, Weight({2, 2, 1, 3}), "q");
  const auto b = render_newton_svg(ex41, Weight({2, 2, 1, 3}), "q");
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("b1+4b2") != std::string::npos);
  CHECK_THROWS_AS(render_newton_svg(MonomialSeq(1, {{2}}), Weight({1}), "x"), UnsupportedError);

  const auto problem = fixtures::load("ex41");
  RunRequest req;
  req.command = "render";
  req.source = "ex41";
  req.weight_name = "q";
  const auto p1 = temp_path("residuum_a.svg"), p2 = temp_path("residuum_b.svg");
  req.svg_path = p1.string();
  run(problem, req);
  req.svg_path = p2.string();
  run(problem, req);
  CHECK(slurp(p1) == slurp(p2));
  req.staircase = true;
  run(problem, req);
  const auto stairs = slurp(p2);
  CHECK(stairs.find("ann") != std::string::npos);
  CHECK(stairs != slurp(p1));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}
