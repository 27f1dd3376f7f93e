#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "census/common.hpp"
#include "census/gluing.hpp"

using namespace census;

namespace {

bool cyclic_equal3(std::array<int, 3> a, std::array<int, 3> b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

// Vertex map restricted to a face triple, as an image triple.
std::array<int, 3> image_triple(const FaceGluingMap& m, const std::array<int, 3>& src) {
  return {m.vertex_map[src[0]], m.vertex_map[src[1]], m.vertex_map[src[2]]};
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
  const auto& group = octahedron_symmetries();
  std::array<int, kOctaVertices> vm{};
  for (int v = 0; v < kOctaVertices; ++v) vm[v] = g.vertex_map[h.vertex_map[v]];
  const auto it = std::find_if(group.begin(), group.end(),
                               [&](const Automorphism& a) { return a.vertex_map == vm; });
  REQUIRE(it != group.end());
  return *it;
}

GluingPattern random_pattern(std::mt19937& rng) {
  std::vector<int> faces(kOctaFaces);
  std::iota(faces.begin(), faces.end(), 0);
  std::shuffle(faces.begin(), faces.end(), rng);
  GluingPattern p;
  for (int i = 0; i < 4; ++i) {
    int a = faces[2 * i], b = faces[2 * i + 1];
    if (a > b) std::swap(a, b);
    p.pairs[i] = {a, b, static_cast<int>(rng() % 3)};
  }
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

}  // namespace

TEST_CASE("octahedron structure") {
  const Polyhedron3& o = octahedron();
  CHECK(o.faces[0] == std::array<int, 3>{0, 1, 2});
  CHECK(o.face_index({0, 1, 2}) == 0);
  CHECK(o.face_index({2, 1, 5}) >= 0);
  CHECK(o.face_index({0, 1, 3}) == -1);  // poles and opposite equator vertices never share a face

  // Every edge lies in exactly two faces, and chi = 6 - 12 + 8 = 2.
  std::map<int, int> edge_uses;
  for (int f = 0; f < kOctaFaces; ++f)
    for (int i = 0; i < 3; ++i) {
      const int u = o.faces[f][i], w = o.faces[f][(i + 1) % 3];
      ++edge_uses[o.edge_index[u][w]];
    }
  REQUIRE(edge_uses.size() == kOctaEdges);
  for (const auto& [e, uses] : edge_uses) CHECK(uses == 2);
  CHECK(kOctaVertices - kOctaEdges + kOctaFaces == 2);

  // Coherent orientation: each directed edge on exactly one face boundary.
  for (int e = 0; e < kOctaEdges; ++e) {
    const auto [u, w] = std::pair{o.edges[e][0], o.edges[e][1]};
    CHECK(o.face_of_dir[u][w] >= 0);
    CHECK(o.face_of_dir[w][u] >= 0);
    CHECK(o.face_of_dir[u][w] != o.face_of_dir[w][u]);
  }
}

TEST_CASE("symmetry group has 48 elements, half of them orientation-preserving") {
  const auto& group = octahedron_symmetries();
  REQUIRE(group.size() == 48);
  const auto positive =
      std::count_if(group.begin(), group.end(), [](const Automorphism& g) { return g.sign > 0; });
  CHECK(positive == 24);

  const std::array<int, kOctaVertices> id = {0, 1, 2, 3, 4, 5};
  const auto it = std::find_if(group.begin(), group.end(),
                               [&](const Automorphism& g) { return g.vertex_map == id; });
  REQUIRE(it != group.end());
  CHECK(it->sign == +1);

  // Closure and sign multiplicativity.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& g = group[rng() % group.size()];
    const auto& h = group[rng() % group.size()];
    CHECK(compose(g, h).sign == g.sign * h.sign);
  }
}

TEST_CASE("three orientation-reversing maps per face pair") {
  const Polyhedron3& o = octahedron();
  for (int a = 0; a < kOctaFaces; ++a)
    for (int b = 0; b < kOctaFaces; ++b) {
      if (a == b) continue;
      const auto maps = face_gluing_maps(a, b);
      std::set<std::array<int, kOctaVertices>> distinct;
      for (const auto& m : maps) {
        distinct.insert(m.vertex_map);
        // Reversing: the image of the source cycle is the reversed target cycle.
        const auto img = image_triple(m, o.faces[a]);
        const auto& t = o.faces[b];
        CHECK(cyclic_equal3(img, {t[2], t[1], t[0]}));
        CHECK_FALSE(cyclic_equal3(img, t));
      }
      CHECK(distinct.size() == 3);
    }
  CHECK_THROWS_AS(face_gluing_maps(2, 2), std::invalid_argument);
}

TEST_CASE("the acceptable and unacceptable sample gluings") {
  const Polyhedron3& o = octahedron();
  const int f012 = o.face_index({0, 1, 2});
  const int f023 = o.face_index({0, 2, 3});
  const int f512 = o.face_index({1, 2, 5});

  auto has_map = [&](int a, int b, std::array<std::pair<int, int>, 3> assignment) {
    const auto maps = face_gluing_maps(a, b);
    return std::any_of(maps.begin(), maps.end(), [&](const FaceGluingMap& m) {
      return std::all_of(assignment.begin(), assignment.end(),
                         [&](auto av) { return m.vertex_map[av.first] == av.second; });
    });
  };

  // (v0,v1,v2) -> (v0,v3,v2) reverses, (v0,v1,v2) -> (v0,v2,v3) does not.
  CHECK(has_map(f012, f023, {{{0, 0}, {1, 3}, {2, 2}}}));
  CHECK_FALSE(has_map(f012, f023, {{{0, 0}, {1, 2}, {2, 3}}}));
  // (v0,v1,v2) -> (v5,v1,v2) reverses, (v0,v1,v2) -> (v5,v2,v1) does not.
  CHECK(has_map(f012, f512, {{{0, 5}, {1, 1}, {2, 2}}}));
  CHECK_FALSE(has_map(f012, f512, {{{0, 5}, {1, 2}, {2, 1}}}));
}

TEST_CASE("composing a gluing map with another's inverse rotates the face") {
  const Polyhedron3& o = octahedron();
  for (int a : {0, 3})
    for (int b : {5, 6}) {
      const auto maps = face_gluing_maps(a, b);
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          const auto inv = maps[s].inverted();
          std::array<int, 3> img{};
          const auto& t = o.faces[b];
          for (int i = 0; i < 3; ++i) img[i] = maps[r].vertex_map[inv.vertex_map[t[i]]];
          CHECK(cyclic_equal3(img, t));  // rotation, identity when r == s
          if (r == s)
            CHECK(img == t);
        }
    }
}

TEST_CASE("pattern enumeration yields 8505 patterns over 105 matchings") {
  const auto patterns = enumerate_patterns();
  REQUIRE(patterns.size() == 8505);
  std::set<GluingPattern> distinct(patterns.begin(), patterns.end());
  CHECK(distinct.size() == patterns.size());
  std::set<std::array<int, kOctaFaces>> matchings;
  for (const auto& p : patterns) {
    CHECK(p.valid());
    std::array<int, kOctaFaces> partner{};
    for (const auto& pg : p.pairs) {
      partner[pg.a] = pg.b;
      partner[pg.b] = pg.a;
    }
    matchings.insert(partner);
  }
  CHECK(matchings.size() == 105);
  CHECK(enumerate_patterns() == patterns);  // deterministic order
}

TEST_CASE("pattern ids round-trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const GluingPattern p = random_pattern(rng);
    CHECK(GluingPattern::from_id(p.id()) == p);
  }
  CHECK_THROWS_AS(GluingPattern::from_id("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(GluingPattern::from_id("01r0|02r0|45r0|67r0"), std::invalid_argument);
}

TEST_CASE("conjugation is a group action on valid patterns") {
  const auto& group = octahedron_symmetries();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const GluingPattern p = random_pattern(rng);
    for (const auto& g : group) {
      const GluingPattern q = conjugate(g, p);
      CHECK(q.valid());
    }
    const auto& g = group[rng() % group.size()];
    const auto& h = group[rng() % group.size()];
    CHECK(conjugate(g, conjugate(h, p)) == conjugate(compose(g, h), p));
  }
}

TEST_CASE("canonical pattern is idempotent and orbit-constant") {
  const auto& group = octahedron_symmetries();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const GluingPattern p = random_pattern(rng);
    const GluingPattern c = canonical_pattern(p);
    CHECK(canonical_pattern(c) == c);
    CHECK_FALSE(p < c);
    for (const auto& g : group) CHECK(canonical_pattern(conjugate(g, p)) == c);
  }
}

TEST_CASE("the census finds 298 classes") {
  const OctaCensus census = octa_census(2);
  CHECK(census.patterns == 8505);
  REQUIRE(census.class_reps.size() == 298);
  REQUIRE(census.orbit_sizes.size() == 298);

  // Orbit sizes partition the patterns and divide the group order.
  CHECK(std::accumulate(census.orbit_sizes.begin(), census.orbit_sizes.end(), 0) == 8505);
  for (int size : census.orbit_sizes) CHECK(48 % size == 0);
  CHECK(std::any_of(census.orbit_sizes.begin(), census.orbit_sizes.end(),
                    [](int s) { return s < 48; }));

  for (const auto& rep : census.class_reps) CHECK(canonical_pattern(rep) == rep);
}

TEST_CASE("burnside count agrees with the canonical class count") {
  const auto patterns = enumerate_patterns();
  const auto& group = octahedron_symmetries();
  std::uint64_t fixed = 0;
  for (const auto& g : group)
    for (const auto& p : patterns)
      if (conjugate(g, p) == p) ++fixed;
  CHECK(fixed % group.size() == 0);
  CHECK(fixed / group.size() == 298);
}

TEST_CASE("orbit partition via union-find agrees with canonicalization") {
  const auto patterns = enumerate_patterns();
  const auto& group = octahedron_symmetries();
  std::map<GluingPattern, int> index;
  for (std::size_t i = 0; i < patterns.size(); ++i) index[patterns[i]] = static_cast<int>(i);

  UnionFind uf(static_cast<int>(patterns.size()));
  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (const auto& g : group)
      uf.unite(static_cast<int>(i), index.at(conjugate(g, patterns[i])));
  std::set<int> roots;
  for (std::size_t i = 0; i < patterns.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
  CHECK(roots.size() == 298);
}
