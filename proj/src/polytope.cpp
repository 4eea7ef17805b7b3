#include "residuum/polytope.hpp"

#include <algorithm>
#include <set>

#include "residuum/errors.hpp"

namespace residuum::polytope {

namespace {

IntVec minus(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], -b[i]);
  return out;
}

Integer big_dot(const std::vector<Integer>& w, const IntVec& x) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s;
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  IndexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    visit(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<IntVec> pick(Points pts, const IndexSet& idx) {
  std::vector<IntVec> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

// Standard basis vectors completing the direction space of pts to R^n.
std::vector<IntVec> complement_directions(Points pts, std::size_t k) {
  const std::size_t n = pts[0].size();
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(minus(pts[i], pts[0]));
  std::vector<IntVec> out;
  std::size_t current = k;
  for (std::size_t axis = 0; axis < n && out.size() < n - k; ++axis) {
    IntVec e(n, 0);
    e[axis] = 1;
    rows.push_back(e);
    if (rank(IntMatrix(rows)) > current) {
      out.push_back(e);
      ++current;
    } else {
      rows.pop_back();
    }
  }
  return out;
}

std::vector<RelativeFacet> segment_facets(Points pts) {
  std::size_t other = 1;
  while (pts[other] == pts[0]) ++other;
  const IntVec d = primitive(minus(pts[other], pts[0]));
  std::vector<std::int64_t> t;
  for (const auto& p : pts) t.push_back(dot(d, p));
  const auto lo = *std::min_element(t.begin(), t.end());
  const auto hi = *std::max_element(t.begin(), t.end());
  RelativeFacet low{{}, d, lo}, high{{}, d, -hi};
  for (auto& x : high.normal) x = -x;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (t[i] == lo) low.members.push_back(i);
    if (t[i] == hi) high.members.push_back(i);
  }
  return {low, high};
}

}  // namespace

std::size_t affine_dimension(Points pts) {
  if (pts.empty()) throw DomainError("affine dimension of an empty point set");
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(minus(pts[i], pts[0]));
  if (rows.empty()) return 0;
  return rank(IntMatrix(std::move(rows)));
}

std::vector<RelativeFacet> facets(Points pts) {
  const std::size_t k = affine_dimension(pts);
  if (k == 0) return {};
  if (k == 1) return segment_facets(pts);

  const auto extra = complement_directions(pts, k);
  std::set<IndexSet> seen;
  std::vector<RelativeFacet> out;
  for_each_subset(pts.size(), k, [&](const IndexSet& f) {
    std::vector<IntVec> rows;
    for (std::size_t i = 1; i < f.size(); ++i) rows.push_back(minus(pts[f[i]], pts[f[0]]));
    rows.insert(rows.end(), extra.begin(), extra.end());
    auto w = generalized_cross(IntMatrix(rows));
    if (std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; })) return;

    int side = 0;
    IndexSet members;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int s = sign(big_dot(w, minus(pts[i], pts[f[0]])));
      if (s == 0) {
        members.push_back(i);
      } else if (side == 0) {
        side = s;
      } else if (s != side) {
        return;
      }
    }
    if (side == 0 || !seen.insert(members).second) return;
    if (side < 0)
      for (auto& x : w) x = -x;
    RelativeFacet facet;
    facet.normal = primitive(w);
    facet.offset = dot(facet.normal, pts[f[0]]);
    facet.members = std::move(members);
    out.push_back(std::move(facet));
  });
  return out;
}

IndexSet vertices(Points pts) {
  const std::size_t k = affine_dimension(pts);
  if (k == 0) return {0};
  std::set<std::size_t> acc;
  for (const auto& f : facets(pts)) {
    if (k == 1) {
      acc.insert(f.members.front());
      continue;
    }
    const auto sub = pick(pts, f.members);
    for (auto v : vertices(sub)) acc.insert(f.members[v]);
  }
  return {acc.begin(), acc.end()};
}

std::vector<IndexSet> triangulate(Points pts) {
  const std::size_t k = affine_dimension(pts);
  if (k == 0) return {{0}};
  const std::size_t apex = static_cast<std::size_t>(
      std::min_element(pts.begin(), pts.end()) - pts.begin());
  std::vector<IndexSet> out;
  for (const auto& f : facets(pts)) {
    if (std::binary_search(f.members.begin(), f.members.end(), apex)) continue;
    const auto sub = pick(pts, f.members);
    for (const auto& simplex : triangulate(sub)) {
      IndexSet s;
      s.reserve(simplex.size() + 1);
      s.push_back(apex);
      for (auto i : simplex) s.push_back(f.members[i]);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace residuum::polytope
