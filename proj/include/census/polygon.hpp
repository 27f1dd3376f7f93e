#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "census/surface.hpp"

namespace census {

// Fixed-point-free involution on the edge labels 0..2k-1 of a 2k-gon.
// Edge i runs from polygon vertex i to vertex i+1 (mod 2k); a glued pair of
// edges is identified reversing the boundary orientation.
struct EdgePairing {
  int k = 0;
  std::vector<int> partner;  // partner[i] = j with j != i, involutive

  static EdgePairing from_pairs(int k, const std::vector<std::pair<int, int>>& pairs);
  bool valid() const;
  // Encoding used for canonical ordering: sorted list of sorted pairs.
  std::vector<std::pair<int, int>> sorted_pairs() const;
  bool operator==(const EdgePairing&) const = default;
};

// Lexicographic order on sorted_pairs().
bool pairing_less(const EdgePairing& a, const EdgePairing& b);

enum class DihedralKind { rotation, reflection };

// Element of the dihedral group of the 2k-gon acting on edge labels:
// rotations send i to i+s, reflections send i to c-i (mod 2k). The 4k formal
// elements induce pairwise distinct permutations except when k = 1.
struct DihedralElement {
  DihedralKind kind = DihedralKind::rotation;
  int param = 0;
  std::vector<int> edge_map;
};

std::uint64_t polygon_pairing_count(int k);  // (2k-1)!!
std::vector<EdgePairing> enumerate_polygon_pairings(int k);
std::vector<DihedralElement> dihedral_group(int k);  // 4k elements

EdgePairing apply(const DihedralElement& g, const EdgePairing& p);

// Least element of the dihedral orbit of p; idempotent and orbit-constant.
EdgePairing canonical_pairing(const EdgePairing& p);

// Closed orientable surface obtained by performing the gluing: vertex
// classes v give chi = v - k + 1 and genus (2 - chi) / 2.
SurfaceSignature polygon_surface(const EdgePairing& p);

struct PolygonCensus {
  std::uint64_t gluings = 0;
  std::size_t classes = 0;
  std::size_t surfaces = 0;               // distinct genera realized
  std::vector<EdgePairing> class_reps;    // canonical forms, ascending
  std::vector<int> class_genus;           // aligned with class_reps
};
PolygonCensus polygon_census(int k);

}  // namespace census
