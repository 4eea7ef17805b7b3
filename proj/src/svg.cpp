#include "residuum/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/newton.hpp"

namespace residuum {

namespace {

constexpr double size = 480.0;
constexpr double margin = 48.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps lattice coordinates in [0, extent]^2 to the canvas.
struct Frame {
  std::int64_t extent;
  double scale() const { return (size - 2 * margin) / static_cast<double>(extent); }
  double x(double v) const { return margin + v * scale(); }
  double y(double v) const { return size - margin - v * scale(); }
};

void header(std::ostringstream& os, const std::string& title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
     << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << num(size / 2) << "\" y=\"24.00\" font-family=\"sans-serif\" font-size=\"14\" "
     << "text-anchor=\"middle\">" << escape(title) << "</text>\n";
}

void axes(std::ostringstream& os, const Frame& f) {
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(f.extent)) << "\" y2=\""
     << num(f.y(0)) << "\"/>\n"
     << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(0)) << "\" y2=\""
     << num(f.y(f.extent)) << "\"/>\n"
     << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  for (std::int64_t t = 0; t <= f.extent; ++t) {
    os << "<line x1=\"" << num(f.x(t)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(t)) << "\" y2=\""
       << num(f.y(0) + 4) << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(t)) << "\" x2=\"" << num(f.x(0) - 4) << "\" y2=\""
       << num(f.y(t)) << "\" stroke=\"black\"/>\n";
  }
  os << "<text x=\"" << num(f.x(f.extent)) << "\" y=\"" << num(f.y(0) + 18) << "\" text-anchor=\"middle\">"
     << f.extent << "</text>\n"
     << "<text x=\"" << num(f.x(0) - 8) << "\" y=\"" << num(f.y(f.extent) + 4) << "\" text-anchor=\"end\">"
     << f.extent << "</text>\n"
     << "<text x=\"" << num(f.x(0)) << "\" y=\"" << num(f.y(0) + 18) << "\" text-anchor=\"middle\">0</text>\n"
     << "<text x=\"" << num(f.x(f.extent) + 10) << "\" y=\"" << num(f.y(0) + 4) << "\">b1</text>\n"
     << "<text x=\"" << num(f.x(0) - 4) << "\" y=\"" << num(f.y(f.extent) - 8) << "\">b2</text>\n"
     << "</g>\n";
}

}  // namespace

std::string render_newton_svg(const MonomialSeq& seq, const Weight& p, const std::string& title) {
  if (seq.dim() != 2) throw UnsupportedError("rendering needs n = 2");
  const auto scaled = scaled_points(seq, p);
  const auto np = newton_polyhedron(scaled, 2);

  std::vector<ExpVec> corners;
  for (const auto& f : np.facets())
    for (auto v : f.vertices) corners.push_back(scaled[v]);
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

  std::int64_t extent = 1;
  for (const auto& s : scaled) extent = std::max({extent, s[0], s[1]});
  extent += 1;
  const Frame fr{extent};

  std::ostringstream os;
  header(os, title);
  os << "<path d=\"M " << num(fr.x(0)) << ' ' << num(fr.y(extent));
  for (const auto& c : corners) os << " L " << num(fr.x(c[0])) << ' ' << num(fr.y(c[1]));
  os << " L " << num(fr.x(extent)) << ' ' << num(fr.y(0)) << " L " << num(fr.x(extent)) << ' '
     << num(fr.y(extent)) << " Z\" fill=\"#d0d0d0\" stroke=\"none\"/>\n";
  axes(os, fr);

  os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  os << "<polyline points=\"" << num(fr.x(0)) << ',' << num(fr.y(extent));
  for (const auto& c : corners) os << ' ' << num(fr.x(c[0])) << ',' << num(fr.y(c[1]));
  os << ' ' << num(fr.x(extent)) << ',' << num(fr.y(0)) << "\"/>\n</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#0033aa\">\n";
  for (const auto& f : np.facets()) {
    const auto& a = scaled[f.vertices.front()];
    const auto& b = scaled[f.vertices.back()];
    const double mx = (a[0] + b[0]) / 2.0, my = (a[1] + b[1]) / 2.0;
    os << "<text class=\"facet\" x=\"" << num(fr.x(mx) + 6) << "\" y=\"" << num(fr.y(my) - 6) << "\">"
       << f.valuation() << "</text>\n";
  }
  os << "</g>\n<g fill=\"#aa0000\">\n";
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    os << "<circle cx=\"" << num(fr.x(scaled[j][0])) << "\" cy=\"" << num(fr.y(scaled[j][1]))
       << "\" r=\"3.5\"><title>" << p[j] << "*a" << j + 1 << " = " << scaled[j].to_string()
       << "</title></circle>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_staircase_svg(const std::vector<std::pair<std::string, MonomialIdeal>>& ideals,
                                 const std::string& title) {
  if (ideals.empty()) throw DomainError("nothing to draw");
  std::int64_t extent = 1;
  for (const auto& [label, ideal] : ideals) {
    if (ideal.dim() != 2) throw UnsupportedError("rendering needs n = 2");
    if (!ideal.is_cofinite()) throw UnsupportedError("staircases are drawn for cofinite ideals only");
    for (const auto& g : ideal.gens()) extent = std::max({extent, g[0], g[1]});
  }
  extent += 1;
  const Frame fr{extent};
  static const char* shades[] = {"#606060", "#909090", "#c0c0c0", "#e0e0e0"};

  std::ostringstream os;
  header(os, title);
  // Largest ideal first so smaller ones are painted on top.
  for (std::size_t k = ideals.size(); k-- > 0;) {
    // Generators in decreasing lexicographic order walk from the b1 axis to the b2 axis.
    const auto& gens = ideals[k].second.gens();
    os << "<path d=\"M " << num(fr.x(extent)) << ' ' << num(fr.y(0));
    os << " L " << num(fr.x(gens[0][0])) << ' ' << num(fr.y(gens[0][1]));
    for (std::size_t i = 1; i < gens.size(); ++i) {
      os << " L " << num(fr.x(gens[i - 1][0])) << ' ' << num(fr.y(gens[i][1])) << " L " << num(fr.x(gens[i][0]))
         << ' ' << num(fr.y(gens[i][1]));
    }
    os << " L " << num(fr.x(0)) << ' ' << num(fr.y(extent)) << " L " << num(fr.x(extent)) << ' '
       << num(fr.y(extent)) << " Z\" fill=\"" << shades[std::min<std::size_t>(k, 3)]
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  axes(os, fr);
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const double y = 44.0 + 16.0 * static_cast<double>(k);
    os << "<rect x=\"" << num(size - 200) << "\" y=\"" << num(y - 10) << "\" width=\"12\" height=\"12\" fill=\""
       << shades[std::min<std::size_t>(k, 3)] << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << num(size - 182) << "\" y=\"" << num(y) << "\">" << escape(ideals[k].first) << ' '
       << ideals[k].second.to_string() << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace residuum
