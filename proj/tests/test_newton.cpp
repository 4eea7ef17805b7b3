#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "residuum/errors.hpp"
#include "residuum/newton.hpp"

using namespace residuum;

namespace {

NewtonPolyhedron np_of(std::vector<ExpVec> s) {
  const auto n = s.front().dim();
  return newton_polyhedron(s, n);
}

std::vector<IntVec> normals(const NewtonPolyhedron& np) {
  std::vector<IntVec> out;
  for (const auto& f : np.facets()) out.push_back(f.normal);
  return out;
}

}  // namespace

TEST_CASE("single facet with valuation 3b1+5b2") {
  const auto np = np_of({{5, 0}, {4, 1}, {2, 2}, {0, 3}});
  REQUIRE(np.facets().size() == 1);
  const auto& f = np.facets()[0];
  CHECK(f.normal == IntVec{3, 5});
  CHECK(f.level == 15);
  CHECK(f.on_facet == std::vector<std::size_t>{0, 3});
  CHECK(f.valuation() == "3b1+5b2");
  CHECK(facet_det(f, np.points()) == 15);
  CHECK(complement_volume(np) == 15);
}

TEST_CASE("two facets for the q-scaled set") {
  const auto np = np_of({{10, 0}, {8, 2}, {2, 2}, {0, 9}});
  CHECK(normals(np) == std::vector<IntVec>{{1, 4}, {7, 2}});
  CHECK(np.facets()[0].valuation() == "b1+4b2");
  CHECK(np.facets()[1].valuation() == "7b1+2b2");
}

TEST_CASE("unit simplex, r-scaled facet and the volume of the square of the maximal ideal") {
  const auto simplex = np_of({{1, 0}, {0, 1}});
  REQUIRE(simplex.facets().size() == 1);
  CHECK(simplex.facets()[0].normal == IntVec{1, 1});
  CHECK(simplex.facets()[0].level == 1);
  CHECK(complement_volume(simplex) == 1);

  const auto r = np_of({{15, 0}, {12, 3}, {8, 8}, {0, 15}});
  REQUIRE(r.facets().size() == 1);
  CHECK(r.facets()[0].normal == IntVec{1, 1});
  CHECK(facet_det(r.facets()[0], r.points()) == 225);
  CHECK(r.facets()[0].vertices == std::vector<std::size_t>{3, 0});

  CHECK(complement_volume(np_of({{2, 0}, {1, 1}, {0, 2}})) == 4);
}

TEST_CASE("one variable: the minimum is the facet") {
  const auto np = newton_polyhedron(std::vector<ExpVec>{{3}, {2}, {2}}, 1);
  REQUIRE(np.facets().size() == 1);
  CHECK(np.facets()[0].level == 2);
  CHECK(np.facets()[0].on_facet == std::vector<std::size_t>{1, 2});
  CHECK(facet_det(np.facets()[0], np.points()) == 2);
}

TEST_CASE("three variables: simplex and a two-facet polyhedron") {
  const auto np = np_of({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  REQUIRE(np.facets().size() == 1);
  CHECK(np.facets()[0].normal == IntVec{6, 4, 3});
  CHECK(complement_volume(np) == 24);

  const auto two = np_of({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}});
  CHECK(two.facets().size() == 3);
  CHECK(complement_volume(two) == 48);
  CHECK(normals(two) == std::vector<IntVec>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  for (const auto& f : two.facets())
    for (auto c : f.normal) CHECK(c >= 1);
}

TEST_CASE("errors: empty and not cofinite") {
  CHECK_THROWS_AS(newton_polyhedron(std::vector<ExpVec>{}, 2), DomainError);
  try {
    newton_polyhedron(std::vector<ExpVec>{{1, 1}}, 2);
    FAIL("expected an exception");
  } catch (const NotCofiniteError& e) {
    CHECK(std::string(e.what()).find("V(z^A) != {0}") != std::string::npos);
  }
  CHECK_THROWS_AS(newton_polyhedron(std::vector<ExpVec>{{2, 0}, {0, 0}}, 2), DomainError);
  CHECK_THROWS_AS(newton_polyhedron(std::vector<ExpVec>{{2, 0}, {0, 1, 0}}, 2), DimensionError);
}

TEST_CASE("lattice points in a box") {
  const auto np = np_of({{2, 0}, {0, 2}});
  const auto pts = lattice_points_in(np, 2);
  std::vector<ExpVec> expected{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  CHECK(pts == expected);
  CHECK(lattice_points_in(np_of({{1, 0}, {0, 1}}), 1) == std::vector<ExpVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK_THROWS_AS(lattice_points_in(np, 1), DomainError);
  CHECK(np_of({{5, 0}, {0, 3}}).contains(ExpVec{3, 3}));
  CHECK_FALSE(np_of({{5, 0}, {0, 3}}).contains(ExpVec{2, 1}));
}

TEST_CASE("unimodular corner") {
  const auto simplex = np_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(unimodular_corner(simplex.facets()[0], simplex.points()).has_value());
  // Edges (-2,1,0) and (-2,0,1) from (2,0,0) span the facet lattice of 1x+2y+2z = 2.
  const auto np = np_of({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(unimodular_corner(np.facets()[0], np.points()).has_value());
  // (2,0,0),(0,2,0),(0,0,2) with (1,1,0) on the facet: four points, no diagonal chart.
  const auto four = np_of({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}});
  CHECK_FALSE(unimodular_corner(four.facets()[0], four.points()).has_value());
  // Lattice triangle of normalized area 3 inside x+y+z = 9: primitive edges, index 3.
  const auto fat = np_of({{10, 0, 0}, {0, 10, 0}, {0, 0, 10}, {3, 3, 3}, {5, 2, 2}, {4, 4, 1}});
  bool seen = false;
  for (const auto& f : fat.facets()) {
    if (f.normal != IntVec{1, 1, 1}) continue;
    seen = true;
    CHECK(f.on_facet.size() == 3);
    CHECK_FALSE(unimodular_corner(f, fat.points()).has_value());
  }
  CHECK(seen);
}

TEST_CASE("property: soundness, facet spans and homothety") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = trial % 3 == 0 ? 3 : 2;
    const auto s = oracle::random_cofinite(rng, n, n == 2 ? 8 : 4, n == 2 ? 4 : 3);
    const auto np = newton_polyhedron(s, n);
    for (const auto& f : np.facets()) {
      for (const auto& p : s) CHECK(dot(f.normal, p.span()) >= f.level);
      std::vector<IntVec> diffs;
      for (auto i : f.on_facet) {
        IntVec d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = s[i][k] - s[f.on_facet[0]][k];
        diffs.push_back(d);
      }
      CHECK(rank(IntMatrix(diffs)) == n - 1);
    }
    for (std::int64_t k = 2; k <= 3; ++k) {
      std::vector<ExpVec> ks;
      for (const auto& p : s) ks.push_back(p.scaled(k));
      Integer kn = 1;
      for (std::size_t i = 0; i < n; ++i) kn *= k;
      CHECK(complement_volume(newton_polyhedron(ks, n)) == kn * complement_volume(np));
    }
  }
}

TEST_CASE("property: staircase hull agrees with the general hull") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_cofinite(rng, 2, 9, 1 + trial % 5);
    const auto a = newton_polyhedron_staircase(s);
    const auto b = newton_polyhedron_general(s, 2);
    CHECK(a.facets() == b.facets());
  }
}

TEST_CASE("property: membership agrees with rational feasibility") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = trial % 4 == 0 ? 3 : 2;
    const auto s = oracle::random_cofinite(rng, n, n == 2 ? 6 : 3, 2);
    const auto np = newton_polyhedron(s, n);
    for (const auto& x : oracle::box(n, n == 2 ? 7 : 4)) CHECK(np.contains(x) == oracle::in_newton_polyhedron(x, s));
  }
}
