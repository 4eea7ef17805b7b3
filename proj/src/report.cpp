#include "residuum/report.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/fixtures.hpp"
#include "residuum/quadrature.hpp"
#include "residuum/svg.hpp"
#include "residuum/sweep.hpp"

namespace residuum {

using nlohmann::json;

void to_json(json& j, const Report& r) {
  j = json{{"schema", r.schema},   {"command", r.command}, {"source", r.source},
           {"dim", r.dim},         {"gens", r.gens},       {"results", r.results}};
  j["fixture"] = r.fixture ? json(*r.fixture) : json(nullptr);
  j["weight_name"] = r.weight_name ? json(*r.weight_name) : json(nullptr);
  j["weight"] = r.weight ? json(*r.weight) : json(nullptr);
}

void from_json(const json& j, Report& r) {
  r.schema = j.at("schema").get<int>();
  if (r.schema != report_schema) throw DomainError("unsupported report schema " + std::to_string(r.schema));
  r.command = j.at("command").get<std::string>();
  r.source = j.at("source").get<std::string>();
  r.dim = j.at("dim").get<std::size_t>();
  r.gens = j.at("gens").get<std::vector<IntVec>>();
  r.results = j.at("results");
  r.fixture = j.at("fixture").is_null() ? std::nullopt : std::optional(j.at("fixture").get<std::string>());
  r.weight_name =
      j.at("weight_name").is_null() ? std::nullopt : std::optional(j.at("weight_name").get<std::string>());
  r.weight = j.at("weight").is_null() ? std::nullopt : std::optional(j.at("weight").get<IntVec>());
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"polytope",  "valuations", "essential",    "current",
                                             "annihilator", "multiplicity", "theorem-a", "independence",
                                             "sweep",     "coffe",      "render"};
  return list;
}

namespace {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json big(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

json rational(const Rational& q) {
  std::ostringstream os;
  os << q;
  return json(os.str());
}

json one_based(const MultiIndex& index) {
  json a = json::array();
  for (auto j : index.positions()) a.push_back(j + 1);
  return a;
}

json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.coords());
  return json{{"generators", gens}, {"text", ideal.to_string()}};
}

json facet_json(const Facet& f, std::span<const ExpVec> points) {
  json on = json::array(), verts = json::array();
  for (auto i : f.on_facet) on.push_back(i + 1);
  for (auto i : f.vertices) verts.push_back(i + 1);
  return json{{"normal", f.normal}, {"level", f.level},         {"on_facet", on},
              {"vertices", verts},  {"det", big(facet_det(f, points))}, {"valuation", f.valuation()}};
}

json relation_json(const CoffeRelation& rel) {
  json terms = json::array();
  for (const auto& t : rel.terms)
    terms.push_back(json{{"index", one_based(t.index)},
                         {"scaled_det", big(t.scaled_det)},
                         {"unscaled_det", big(t.unscaled_det)},
                         {"weight_product", t.weight_product}});
  return json{{"facet", rel.facet},
              {"normal", rel.normal},
              {"terms", terms},
              {"rhs", big(rel.rhs)},
              {"divisor", big(rel.divisor())},
              {"text", rel.to_string()},
              {"reduced", rel.to_string(true)},
              {"unscaled_text", rel.unscaled_string()},
              {"readings_differ", rel.readings_differ()}};
}

json coefficient_json(const Coefficient& c) {
  if (std::holds_alternative<CoefficientKnown>(c)) return json{{"kind", "known"}, {"value", 1}};
  if (const auto* k = std::get_if<CoefficientConstrained>(&c))
    return json{{"kind", "constrained"}, {"relation", k->relation}};
  const auto& n = std::get<CoefficientNumeric>(c);
  return json{{"kind", "numeric"},
              {"relation", n.relation},
              {"estimate", n.estimate},
              {"abs_error", n.abs_error},
              {"cells", n.cells}};
}

json current_json(const ResidueCurrent& current) {
  json entries = json::array();
  for (const auto& e : current.entries) {
    json w = json::array();
    for (auto f : e.witnesses) w.push_back(current.scaled_np.facets()[f].normal);
    json entry{{"index", one_based(e.index)},
               {"vanishes", e.vanishes()},
               {"reason", to_string(e.vanishing)},
               {"det", big(e.det)},
               {"alpha", e.alpha.coords()},
               {"witnesses", w}};
    if (!e.vanishes()) {
      entry["sign"] = e.sign;
      entry["coefficient"] = coefficient_json(e.coeff);
    }
    entries.push_back(std::move(entry));
  }
  json relations = json::array();
  for (const auto& r : coffe_constraints(current)) relations.push_back(relation_json(r));
  return json{{"entries", entries}, {"relations", relations}};
}

json multiplicity_json(const Multiplicity& m) {
  json out{{"determined", m.determined()}};
  out["value"] = m.exact ? rational(*m.exact) : json(nullptr);
  json cons = json::array();
  for (const auto& r : m.constraints) cons.push_back(relation_json(r));
  out["constraints"] = cons;
  out["estimate"] = m.estimate ? json(*m.estimate) : json(nullptr);
  out["abs_error"] = m.abs_error ? json(*m.abs_error) : json(nullptr);
  return out;
}

json validation_json(const CoffeValidation& v) {
  json facets = json::array();
  for (const auto& f : v.facets) {
    json coeffs = json::array();
    for (const auto& c : f.coefficients)
      coeffs.push_back(json{{"index", one_based(c.index)},
                            {"estimate", c.estimate},
                            {"abs_error", c.abs_error},
                            {"cells", c.cells}});
    facets.push_back(json{{"facet", f.facet},
                          {"normal", f.normal},
                          {"evaluated", f.evaluated},
                          {"note", f.note},
                          {"coefficients", coeffs},
                          {"lhs", f.lhs},
                          {"rhs", f.rhs},
                          {"residual", f.residual},
                          {"residual_bound", f.residual_bound}});
  }
  return json{{"facets", facets}, {"max_residual", v.max_residual}};
}

json witness_json(const std::optional<WeightWitness>& w) {
  if (!w) return json(nullptr);
  return json{{"first", w->first.values()}, {"second", w->second.values()}};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << body;
  if (!out) throw Error("failed writing '" + path + "'");
}

bool cmd_uses_weight(const std::string& cmd) { return cmd != "sweep" && cmd != "independence"; }

}  // namespace

Report run(const Problem& problem, const RunRequest& req) {
  if (std::find(commands().begin(), commands().end(), req.command) == commands().end())
    throw DomainError("unknown command '" + req.command + "'");

  const MonomialSeq seq = problem.seq();
  const Weight p = req.weight_name ? problem.weight(*req.weight_name) : Weight::ones(seq.size());
  const double tol = req.tol.value_or(problem.options.tol.value_or(1e-9));
  const std::int64_t pmax = req.pmax.value_or(problem.options.pmax.value_or(6));
  const bool numeric = req.numeric || problem.options.numeric;
  const bool experimental = req.experimental || problem.options.experimental;
  const QuadratureOptions qopt{tol, QuadratureOptions{}.max_cells};

  Report r;
  r.command = req.command;
  r.source = req.source;
  r.fixture = fixtures::match(problem);
  r.weight_name = req.weight_name;
  r.dim = seq.dim();
  for (const auto& g : seq.exps()) r.gens.push_back(g.coords());
  if (cmd_uses_weight(req.command)) r.weight = p.values();

  const std::string& cmd = req.command;
  json& out = r.results;
  out = json::object();

  if (cmd == "polytope" || cmd == "valuations") {
    const auto scaled = scaled_points(seq, p);
    const auto np = newton_polyhedron(scaled, seq.dim());
    json facets = json::array();
    for (const auto& f : np.facets()) facets.push_back(facet_json(f, scaled));
    if (cmd == "polytope") {
      json pts = json::array();
      for (const auto& s : scaled) pts.push_back(s.coords());
      out["scaled_points"] = pts;
      out["facets"] = facets;
      out["complement_volume"] = big(complement_volume(np));
    } else {
      json vals = json::array();
      for (const auto& f : np.facets()) vals.push_back(json{{"normal", f.normal}, {"text", f.valuation()}});
      out["valuations"] = vals;
    }
  } else if (cmd == "essential") {
    const auto scaled = scaled_points(seq, p);
    const auto np = newton_polyhedron(scaled, seq.dim());
    json ess = json::array();
    for (const auto& e : p_essential_indices(seq, p)) {
      json w = json::array();
      for (auto f : e.facets) w.push_back(np.facets()[f].normal);
      ess.push_back(json{{"index", one_based(e.index)}, {"witnesses", w}});
    }
    out["essential"] = ess;
  } else if (cmd == "current") {
    auto current = residue_current(seq, p);
    if (numeric) current = refine_numeric(std::move(current), experimental, qopt);
    out = current_json(current);
  } else if (cmd == "annihilator") {
    out = ideal_json(annihilator(seq, p));
  } else if (cmd == "multiplicity") {
    auto current = residue_current(seq, p);
    if (numeric) current = refine_numeric(std::move(current), experimental, qopt);
    out = multiplicity_json(multiplicity_ep(current));
  } else if (cmd == "theorem-a") {
    const auto t = theorem_a_report(seq, p);
    json shifts = json::array();
    for (const auto& [index, shift] : t.shifts)
      shifts.push_back(json{{"index", one_based(index)}, {"shift", shift.coords()}});
    out = json{{"closure_power", ideal_json(t.closure_power)},
               {"shifts", shifts},
               {"left", ideal_json(t.left)},
               {"ann", ideal_json(t.ann)},
               {"right", ideal_json(t.right)},
               {"left_included", t.left_included},
               {"right_included", t.right_included},
               {"left_strict", t.left_strict},
               {"right_equal", t.right_equal},
               {"right_is_complete_intersection", t.right_is_complete_intersection},
               {"right_equality_implies_ci", t.right_equality_implies_ci}};
    if (r.fixture == "ex41" && p == Weight({2, 2, 1, 3})) {
      const auto printed = fixtures::printed_left_ideal_ex41_q();
      const bool agrees = printed == t.left;
      out["reference"] = json{
          {"printed_left", ideal_json(printed)},
          {"agrees", agrees},
          {"note", agrees ? "recomputed left ideal equals the printed generator list"
                          : "DISCREPANCY: recomputed left ideal differs from the printed generator list"}};
    }
  } else if (cmd == "independence") {
    const auto ind = independence_report(seq);
    out = json{{"regular", ind.regular},
               {"current_independent", ind.current_independent},
               {"ann_independent", ind.ann_independent},
               {"current_witness", witness_json(ind.current_witness)},
               {"ann_witness", witness_json(ind.ann_witness)}};
  } else if (cmd == "sweep") {
    SweepOptions so;
    so.force = req.force;
    so.threads = req.threads.value_or(problem.options.threads.value_or(1));
    const auto s = enumerate_annihilators(seq, pmax, so);
    json classes = json::array();
    for (const auto& c : s.classes)
      classes.push_back(json{{"ideal", ideal_json(c.ideal)},
                             {"representative", c.representative.values()},
                             {"count", c.count}});
    out = json{{"pmax", s.pmax}, {"weights", s.weights}, {"distinct", s.classes.size()}, {"classes", classes}};
  } else if (cmd == "coffe") {
    const auto current = residue_current(seq, p);
    json rels = json::array();
    for (const auto& rel : coffe_constraints(current)) rels.push_back(relation_json(rel));
    out["relations"] = rels;
    if (numeric) out["numeric"] = validation_json(validate_coffe_numeric(current, experimental, qopt));
  } else if (cmd == "render") {
    if (!req.svg_path) throw DomainError("render needs --svg PATH");
    const std::string title = (r.fixture ? *r.fixture : std::string("z^A")) + ", weight " + p.to_string();
    if (req.staircase) {
      const auto t = theorem_a_report(seq, p);
      write_file(*req.svg_path,
                 render_staircase_svg({{"left", t.left}, {"ann", t.ann}, {"a(z^A)", t.right}}, title));
    } else {
      write_file(*req.svg_path, render_newton_svg(seq, p, title));
    }
    out = json{{"svg", *req.svg_path}, {"mode", req.staircase ? "staircase" : "newton"}};
  }

  if (req.svg_path && cmd != "render") {
    write_file(*req.svg_path, render_newton_svg(seq, p, "weight " + p.to_string()));
    out["svg"] = *req.svg_path;
  }
  return r;
}

namespace {

std::string tuple(const json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + ")";
}

std::string index_text(const json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + "}";
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void relations_text(std::ostream& os, const json& rels) {
  for (const auto& rel : rels) {
    os << "  facet " << tuple(rel["normal"]) << ": " << rel["text"].get<std::string>();
    if (rel["divisor"] != 1) os << "   i.e. " << rel["reduced"].get<std::string>();
    os << '\n';
    if (rel["readings_differ"].get<bool>())
      os << "    with |det A_I| instead of |det (pA)_I|: " << rel["unscaled_text"].get<std::string>() << '\n';
  }
}

std::string estimate_text(const json& est, const json& err) {
  std::ostringstream os;
  os.precision(12);
  os << est.get<double>() << " +/- ";
  os.precision(2);
  os << err.get<double>();
  return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  const json& res = r.results;
  os << r.command << ": " << r.source;
  if (r.fixture && *r.fixture != r.source) os << " (fixture " << *r.fixture << ')';
  if (r.weight) os << ", weight " << (r.weight_name ? *r.weight_name + " = " : std::string()) << tuple(*r.weight);
  os << '\n';

  const std::string& cmd = r.command;
  if (cmd == "polytope") {
    for (const auto& f : res["facets"])
      os << "  facet normal " << tuple(f["normal"]) << ", level " << f["level"] << ", points "
         << index_text(f["on_facet"]) << ", det " << scalar(f["det"]) << '\n';
    os << "complement volume " << scalar(res["complement_volume"]) << '\n';
  } else if (cmd == "valuations") {
    for (const auto& v : res["valuations"]) os << "  " << v["text"].get<std::string>() << '\n';
  } else if (cmd == "essential") {
    for (const auto& e : res["essential"])
      os << "  " << index_text(e["index"]) << " on facet " << tuple(e["witnesses"][0]) << '\n';
  } else if (cmd == "current") {
    for (const auto& e : res["entries"]) {
      os << "  " << index_text(e["index"]) << "  ";
      if (e["vanishes"].get<bool>()) {
        os << "0  (" << e["reason"].get<std::string>() << ")\n";
        continue;
      }
      const auto& a = e["alpha"];
      os << (e["sign"].get<int>() > 0 ? "+" : "-") << "C" << index_text(e["index"]);
      for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? " ^ " : " ") << "dbar[1/z" << i + 1 << '^' << a[i] << ']';
      const auto& c = e["coefficient"];
      const auto kind = c["kind"].get<std::string>();
      if (kind == "known")
        os << "   C = 1";
      else if (kind == "constrained")
        os << "   C constrained by facet relation " << c["relation"];
      else
        os << "   C = " << estimate_text(c["estimate"], c["abs_error"]);
      os << '\n';
    }
    os << "relations:\n";
    relations_text(os, res["relations"]);
  } else if (cmd == "annihilator") {
    os << res["text"].get<std::string>() << '\n';
  } else if (cmd == "multiplicity") {
    if (res["determined"].get<bool>()) {
      os << "e^p = " << res["value"].get<std::string>() << '\n';
    } else {
      os << "e^p undetermined; constraints:\n";
      relations_text(os, res["constraints"]);
    }
    if (!res["estimate"].is_null() && !res["determined"].get<bool>())
      os << "numeric estimate " << estimate_text(res["estimate"], res["abs_error"]) << '\n';
  } else if (cmd == "theorem-a") {
    os << "  left  " << res["left"]["text"].get<std::string>() << '\n'
       << "  ann   " << res["ann"]["text"].get<std::string>() << '\n'
       << "  right " << res["right"]["text"].get<std::string>() << '\n'
       << "  left in ann: " << res["left_included"] << ", ann in right: " << res["right_included"]
       << ", left strict: " << res["left_strict"] << ", ann = right: " << res["right_equal"]
       << ", a(z^A) complete intersection: " << res["right_is_complete_intersection"] << '\n';
    if (res.contains("reference"))
      os << "  printed left " << res["reference"]["printed_left"]["text"].get<std::string>() << ": "
         << res["reference"]["note"].get<std::string>() << '\n';
  } else if (cmd == "independence") {
    os << "  regular sequence: " << res["regular"] << '\n'
       << "  current independent of p: " << res["current_independent"] << '\n'
       << "  annihilator independent of p: " << res["ann_independent"] << '\n';
    if (!res["current_witness"].is_null())
      os << "  currents differ for " << tuple(res["current_witness"]["first"]) << " and "
         << tuple(res["current_witness"]["second"]) << '\n';
    if (!res["ann_witness"].is_null())
      os << "  annihilators differ for " << tuple(res["ann_witness"]["first"]) << " and "
         << tuple(res["ann_witness"]["second"]) << '\n';
  } else if (cmd == "sweep") {
    os << res["distinct"] << " distinct annihilator ideals over " << res["weights"] << " weights in {1.."
       << res["pmax"] << "}^" << r.gens.size() << '\n';
    for (const auto& c : res["classes"])
      os << "  " << tuple(c["representative"]) << "  " << c["ideal"]["text"].get<std::string>() << "  ("
         << c["count"] << " weights)\n";
  } else if (cmd == "coffe") {
    relations_text(os, res["relations"]);
    if (res.contains("numeric")) {
      for (const auto& f : res["numeric"]["facets"]) {
        os << "  numeric, facet " << tuple(f["normal"]) << ": ";
        if (!f["evaluated"].get<bool>()) {
          os << "not evaluated: " << f["note"].get<std::string>() << '\n';
          continue;
        }
        for (const auto& c : f["coefficients"])
          os << "C" << index_text(c["index"]) << " = " << estimate_text(c["estimate"], c["abs_error"]) << "  ";
        os << "residual " << f["residual"].get<double>() << '\n';
      }
    }
  } else if (cmd == "render") {
    os << "wrote " << res["svg"].get<std::string>() << '\n';
  }
  if (cmd != "render" && res.contains("svg")) os << "wrote " << res["svg"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace residuum
