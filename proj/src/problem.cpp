#include "residuum/problem.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/fixtures.hpp"

namespace residuum {

const Weight& Problem::weight(const std::string& name) const {
  for (const auto& [n, w] : weights)
    if (n == name) return w;
  std::string known;
  for (const auto& [n, w] : weights) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown weight '" + name + "'" + (known.empty() ? " (the problem defines no weights)" : "; known: " + known));
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, t.column, std::string("expected an integer ") + what + ", got '" + std::string(t.text) + "'");
  return v;
}

double parse_double(const Token& t, std::size_t line) {
  double v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, t.column, "expected a number, got '" + std::string(t.text) + "'");
  return v;
}

bool parse_bool(const Token& t, std::size_t line) {
  if (t.text == "true" || t.text == "1" || t.text == "yes") return true;
  if (t.text == "false" || t.text == "0" || t.text == "no") return false;
  throw ParseError(line, t.column, "expected true or false, got '" + std::string(t.text) + "'");
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem p;
  std::size_t dim_line = 0;
  std::vector<std::size_t> weight_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    auto need = [&](std::size_t count, const char* usage) {
      if (tokens.size() != count) {
        const std::size_t col = tokens.size() > count ? tokens[count].column : line.size() + 1;
        throw ParseError(line_no, col, std::string("expected '") + usage + "'");
      }
    };

    if (head.text == "name") {
      need(2, "name <identifier>");
      p.name = tokens[1].text;
    } else if (head.text == "dim") {
      need(2, "dim <n>");
      if (dim_line) throw ParseError(line_no, head.column, "dimension declared twice");
      const auto n = parse_int(tokens[1], line_no, "dimension");
      if (n < 1) throw ParseError(line_no, tokens[1].column, "dimension must be >= 1");
      p.dim = static_cast<std::size_t>(n);
      dim_line = line_no;
    } else if (head.text == "gen") {
      if (!dim_line) throw ParseError(line_no, head.column, "'gen' before 'dim'");
      if (tokens.size() != p.dim + 1)
        throw ParseError(line_no, head.column,
                         "dimension mismatch: generator has " + std::to_string(tokens.size() - 1) +
                             " entries, expected " + std::to_string(p.dim));
      std::vector<std::int64_t> v;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const auto x = parse_int(tokens[k], line_no, "exponent");
        if (x < 0) throw ParseError(line_no, tokens[k].column, "exponents must be nonnegative");
        v.push_back(x);
      }
      p.gens.emplace_back(std::move(v));
    } else if (head.text == "weight") {
      if (tokens.size() < 3) throw ParseError(line_no, head.column, "expected 'weight <name> <p1> ... <pm>'");
      const std::string name(tokens[1].text);
      for (const auto& [n, w] : p.weights)
        if (n == name) throw ParseError(line_no, tokens[1].column, "weight '" + name + "' defined twice");
      std::vector<std::int64_t> v;
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        const auto x = parse_int(tokens[k], line_no, "weight entry");
        if (x < 1) throw ParseError(line_no, tokens[k].column, "weight '" + name + "' entries must be >= 1");
        v.push_back(x);
      }
      p.weights.emplace_back(name, Weight(std::move(v)));
      weight_lines.push_back(line_no);
    } else if (head.text == "option") {
      need(3, "option <key> <value>");
      const auto key = tokens[1].text;
      if (key == "pmax") {
        const auto v = parse_int(tokens[2], line_no, "pmax");
        if (v < 1) throw ParseError(line_no, tokens[2].column, "pmax must be >= 1");
        p.options.pmax = v;
      } else if (key == "tol") {
        const auto v = parse_double(tokens[2], line_no);
        if (!(v > 0)) throw ParseError(line_no, tokens[2].column, "tol must be positive");
        p.options.tol = v;
      } else if (key == "threads") {
        const auto v = parse_int(tokens[2], line_no, "thread count");
        if (v < 1) throw ParseError(line_no, tokens[2].column, "threads must be >= 1");
        p.options.threads = static_cast<unsigned>(v);
      } else if (key == "numeric") {
        p.options.numeric = parse_bool(tokens[2], line_no);
      } else if (key == "experimental") {
        p.options.experimental = parse_bool(tokens[2], line_no);
      } else {
        throw ParseError(line_no, tokens[1].column, "unknown option '" + std::string(key) + "'");
      }
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  }

  if (!dim_line) throw ParseError(line_no, 1, "missing 'dim' line");
  if (p.gens.empty()) throw ParseError(line_no, 1, "no 'gen' lines");
  for (std::size_t k = 0; k < p.weights.size(); ++k) {
    const auto& [name, w] = p.weights[k];
    if (w.size() != p.gens.size())
      throw ParseError(weight_lines[k], 1,
                       "weight '" + name + "' has " + std::to_string(w.size()) + " entries, expected " +
                           std::to_string(p.gens.size()));
  }
  require_cofinite(p.gens, p.dim);
  return p;
}

Problem load_problem(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    if (!in) throw Error("cannot read '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
  }
  if (fixtures::text(source)) return fixtures::load(source);
  std::string known;
  for (const auto& n : fixtures::names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("no such file or bundled fixture: '" + source + "' (fixtures: " + known + ")");
}

}  // namespace residuum
