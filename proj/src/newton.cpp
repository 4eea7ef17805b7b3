#include "residuum/newton.hpp"

#include <algorithm>
#include <sstream>

#include "residuum/errors.hpp"
#include "residuum/polytope.hpp"

namespace residuum {

std::string Facet::valuation() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (i) os << '+';
    if (normal[i] != 1) os << normal[i];
    os << 'b' << (i + 1);
  }
  return os.str();
}

NewtonPolyhedron::NewtonPolyhedron(std::size_t dim, std::vector<ExpVec> points, std::vector<Facet> facets)
    : dim_(dim), points_(std::move(points)), facets_(std::move(facets)) {}

bool NewtonPolyhedron::contains(const ExpVec& x) const {
  if (x.dim() != dim_) throw DimensionError("point dimension does not match the polyhedron");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x.span()) >= f.level; });
}

std::int64_t NewtonPolyhedron::max_vertex_coordinate() const {
  std::int64_t m = 0;
  for (const auto& f : facets_)
    for (auto v : f.vertices)
      for (auto c : points_[v].coords()) m = std::max(m, c);
  return m;
}

void require_cofinite(std::span<const ExpVec> points, std::size_t dim) {
  if (points.empty()) throw DomainError("empty exponent set");
  std::vector<bool> hit(dim, false);
  for (const auto& p : points) {
    if (p.dim() != dim) throw DimensionError("exponent " + p.to_string() + " does not have dimension " + std::to_string(dim));
    if (p.is_zero()) throw DomainError("the zero exponent generates the unit ideal");
    const int axis = p.pure_axis();
    if (axis >= 0) hit[static_cast<std::size_t>(axis)] = true;
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (!hit[j])
      throw NotCofiniteError("exponent set is not cofinite: no pure power of z" + std::to_string(j + 1) +
                             ", so V(z^A) != {0}");
  }
}

namespace {

// Fills level, on_facet and vertices for a facet with a known normal.
Facet complete_facet(IntVec normal, std::span<const ExpVec> points) {
  Facet f;
  f.normal = std::move(normal);
  f.level = dot(f.normal, points[0].span());
  for (const auto& p : points) f.level = std::min(f.level, dot(f.normal, p.span()));
  for (std::size_t i = 0; i < points.size(); ++i)
    if (dot(f.normal, points[i].span()) == f.level) f.on_facet.push_back(i);

  std::vector<IntVec> distinct;
  for (auto i : f.on_facet) distinct.push_back(points[i].coords());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<IntVec> corner_points;
  for (auto v : polytope::vertices(distinct)) corner_points.push_back(distinct[v]);

  for (auto i : f.on_facet)
    if (std::binary_search(corner_points.begin(), corner_points.end(), points[i].coords()))
      f.vertices.push_back(i);
  std::stable_sort(f.vertices.begin(), f.vertices.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  return f;
}

NewtonPolyhedron assemble(std::size_t dim, std::span<const ExpVec> points, std::vector<IntVec> normals) {
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  std::vector<Facet> facets;
  for (auto& n : normals) facets.push_back(complete_facet(std::move(n), points));
  return NewtonPolyhedron(dim, {points.begin(), points.end()}, std::move(facets));
}

std::int64_t cross(const ExpVec& o, const ExpVec& a, const ExpVec& b) {
  return checked_add(checked_mul(a[0] - o[0], b[1] - o[1]), -checked_mul(a[1] - o[1], b[0] - o[0]));
}

}  // namespace

NewtonPolyhedron newton_polyhedron_staircase(std::span<const ExpVec> points) {
  require_cofinite(points, 2);

  // Pareto-minimal points, increasing x and strictly decreasing y.
  std::vector<ExpVec> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ExpVec> front;
  for (const auto& p : sorted) {
    if (front.empty() || p[1] < front.back()[1]) front.push_back(p);
  }

  std::vector<ExpVec> hull;
  for (const auto& p : front) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }

  std::vector<IntVec> normals;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    normals.push_back(primitive(IntVec{hull[i][1] - hull[i + 1][1], hull[i + 1][0] - hull[i][0]}));
  }
  return assemble(2, points, std::move(normals));
}

NewtonPolyhedron newton_polyhedron_general(std::span<const ExpVec> points, std::size_t dim) {
  require_cofinite(points, dim);
  if (dim < 2) throw DimensionError("general hull needs n >= 2");

  std::int64_t max_coord = 0;
  for (const auto& p : points)
    for (auto c : p.coords()) max_coord = std::max(max_coord, c);
  const std::int64_t pad = checked_add(1, checked_mul(static_cast<std::int64_t>(dim), max_coord));

  std::vector<IntVec> cloud;
  for (const auto& p : points) {
    cloud.push_back(p.coords());
    for (std::size_t j = 0; j < dim; ++j) {
      IntVec q = p.coords();
      q[j] = checked_add(q[j], pad);
      cloud.push_back(std::move(q));
    }
  }
  std::sort(cloud.begin(), cloud.end());
  cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());

  std::vector<IntVec> normals;
  for (auto& f : polytope::facets(cloud)) {
    if (std::all_of(f.normal.begin(), f.normal.end(), [](auto x) { return x >= 1; }))
      normals.push_back(std::move(f.normal));
  }
  return assemble(dim, points, std::move(normals));
}

NewtonPolyhedron newton_polyhedron(std::span<const ExpVec> points, std::size_t dim) {
  if (dim == 0) throw DimensionError("dimension must be >= 1");
  if (dim == 1) {
    require_cofinite(points, 1);
    return assemble(1, points, {IntVec{1}});
  }
  if (dim == 2) return newton_polyhedron_staircase(points);
  return newton_polyhedron_general(points, dim);
}

Integer facet_det(const Facet& facet, std::span<const ExpVec> points) {
  if (facet.normal.size() == 1) return facet.level;
  std::vector<IntVec> distinct;
  for (auto i : facet.on_facet) distinct.push_back(points[i].coords());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Integer total = 0;
  for (const auto& simplex : polytope::triangulate(distinct)) {
    std::vector<IntVec> rows;
    for (auto i : simplex) rows.push_back(distinct[i]);
    total += abs(det(IntMatrix(std::move(rows))));
  }
  return total;
}

Integer complement_volume(const NewtonPolyhedron& np) {
  Integer total = 0;
  for (const auto& f : np.facets()) total += facet_det(f, np.points());
  return total;
}

std::optional<std::size_t> unimodular_corner(const Facet& facet, std::span<const ExpVec> points) {
  const std::size_t n = facet.normal.size();
  if (facet.on_facet.size() != n) return std::nullopt;
  if (n == 1) return 0;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& corner = points[facet.on_facet[c]];
    std::vector<IntVec> edges;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c) continue;
      IntVec e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = points[facet.on_facet[k]][i] - corner[i];
      if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) return std::nullopt;
      edges.push_back(primitive(e));
    }
    const auto w = generalized_cross(IntMatrix(std::move(edges)));
    Integer g = 0;
    for (const auto& x : w) g = gcd(g, x);
    if (g == 1) return c;
  }
  return std::nullopt;
}

std::vector<ExpVec> lattice_points_in(const NewtonPolyhedron& np, std::int64_t bound) {
  if (bound < np.max_vertex_coordinate())
    throw DomainError("box bound " + std::to_string(bound) + " is below the largest vertex coordinate " +
                      std::to_string(np.max_vertex_coordinate()));
  std::vector<ExpVec> out;
  std::vector<std::int64_t> x(np.dim(), 0);
  while (true) {
    ExpVec p(x);
    if (np.contains(p)) out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace residuum
