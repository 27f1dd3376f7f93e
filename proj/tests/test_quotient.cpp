#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "census/quotient.hpp"

using namespace census;

namespace {

// Frozen boundary-type distribution over the 298 classes.
const std::map<std::vector<int>, int> kBoundaryTable = {
    {{0}, 23},       {{0, 0}, 8},  {{0, 0, 0}, 4}, {{0, 0, 0, 0}, 1}, {{0, 0, 0, 0, 0}, 1},
    {{1}, 67},       {{1, 0}, 10}, {{1, 0, 0}, 4}, {{1, 1}, 8},       {{1, 1, 0}, 1},
    {{2}, 113},      {{2, 1}, 2},  {{3}, 56},
};

// Frozen distribution after capping sphere components.
const std::map<std::vector<int>, int> kCappedTable = {
    {{}, 37}, {{1}, 81}, {{1, 1}, 9}, {{2}, 113}, {{2, 1}, 2}, {{3}, 56},
};

}  // namespace

TEST_CASE("edge orbits partition the twelve edges with identity return maps") {
  for (const auto& p : enumerate_patterns()) {
    const auto orbits = edge_orbits(p);  // throws on a non-identity return map
    std::set<int> covered;
    std::size_t total = 0;
    for (const auto& orbit : orbits) {
      CHECK(orbit.returned == orbit.base);
      CHECK(orbit.edges.size() == orbit.directed.size());
      total += orbit.edges.size();
      covered.insert(orbit.edges.begin(), orbit.edges.end());
    }
    CHECK(total == 12);
    CHECK(covered.size() == 12);
  }
}

TEST_CASE("vertex links are closed connected orientable surfaces") {
  for (const auto& p : enumerate_patterns()) {
    const auto classes = vertex_classes(p);
    const auto links = vertex_links(p);  // throws on non-orientable or disconnected links
    CHECK(links.size() == classes.size());
    std::size_t vertices = 0;
    for (const auto& link : links) {
      CHECK(link.orientable);
      CHECK(link.genus >= 0);
      CHECK(link.chi == 2 - 2 * link.genus);
      CHECK(link.vertices.size() == link.square_signs.size());
      for (int s : link.square_signs) CHECK((s == 1 || s == -1));
      vertices += link.vertices.size();
    }
    CHECK(vertices == kOctaVertices);
  }
}

TEST_CASE("boundary signatures are orbit invariants") {
  std::mt19937 rng(23);
  const auto patterns = enumerate_patterns();
  const auto& group = octahedron_symmetries();
  for (int trial = 0; trial < 15; ++trial) {
    const auto& p = patterns[rng() % patterns.size()];
    const auto sig = boundary_signature(p);
    const auto& g = group[rng() % group.size()];
    CHECK(boundary_signature(conjugate(g, p)) == sig);
  }
}

TEST_CASE("boundary distribution over the 298 classes") {
  const OctaCensus census = octa_census(2);
  std::map<std::vector<int>, int> distribution;
  for (const auto& rep : census.class_reps) ++distribution[boundary_signature(rep).genera()];
  CHECK(distribution == kBoundaryTable);
}

TEST_CASE("capped distribution and its refinement by sphere deletion") {
  const OctaCensus census = octa_census(2);
  std::map<std::vector<int>, int> capped;
  for (const auto& rep : census.class_reps)
    ++capped[cap_spheres(boundary_signature(rep)).genera()];
  CHECK(capped == kCappedTable);

  // Collapsing the boundary table by deleting genus-0 entries must reproduce
  // the capped table row-for-row.
  std::map<std::vector<int>, int> collapsed;
  for (const auto& [genera, count] : kBoundaryTable) {
    std::vector<int> kept;
    for (int g : genera)
      if (g > 0) kept.push_back(g);
    collapsed[kept] += count;
  }
  CHECK(collapsed == kCappedTable);
}

TEST_CASE("a pattern with five sphere links exists") {
  const OctaCensus census = octa_census(2);
  const auto five = std::count_if(census.class_reps.begin(), census.class_reps.end(),
                                  [](const GluingPattern& rep) {
                                    return boundary_signature(rep).genera() ==
                                           std::vector<int>{0, 0, 0, 0, 0};
                                  });
  CHECK(five == 1);
}

TEST_CASE("capping removes exactly the sphere components") {
  CHECK(cap_spheres(make_signature({0})).genera().empty());
  CHECK(cap_spheres(make_signature({1, 0, 0})).genera() == std::vector<int>{1});
  CHECK(cap_spheres(make_signature({3})).genera() == std::vector<int>{3});
  CHECK(cap_spheres(SurfaceSignature{}).genera().empty());

  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> genera;
    const int n = 1 + rng() % 5;
    for (int i = 0; i < n; ++i) genera.push_back(rng() % 4);
    const auto sig = make_signature(genera);
    const auto capped = cap_spheres(sig);
    CHECK(cap_spheres(capped) == capped);
    for (const auto& c : capped.components) CHECK(c.genus > 0);
    // capped is a sub-multiset of the original
    auto rest = sig.components;
    for (const auto& c : capped.components) {
      auto it = std::find(rest.begin(), rest.end(), c);
      REQUIRE(it != rest.end());
      rest.erase(it);
    }
    for (const auto& c : rest) CHECK(c.genus == 0);
  }
}

TEST_CASE("genus-3 boundaries are exactly the single-edge-orbit classes") {
  const OctaCensus census = octa_census(2);
  int genus3 = 0, single = 0;
  for (const auto& rep : census.class_reps) {
    const bool is_genus3 = boundary_signature(rep).genera() == std::vector<int>{3};
    const auto orbits = edge_orbits(rep);
    const bool is_single = orbits.size() == 1;
    if (is_single) CHECK(orbits.front().edges.size() == 12);
    CHECK(is_genus3 == is_single);
    genus3 += is_genus3;
    single += is_single;
  }
  CHECK(genus3 == 56);
  CHECK(single == 56);
}
