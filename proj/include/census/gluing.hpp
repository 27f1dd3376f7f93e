#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "census/octahedron.hpp"

namespace census {

struct PairGluing {
  int a = -1;
  int b = -1;
  int rot = 0;  // which of the three orientation-reversing maps a -> b
  auto operator<=>(const PairGluing&) const = default;
};

// Perfect matching of the 8 faces with one orientation-reversing map per
// matched pair. Pairs are stored with a < b and sorted by a, which makes the
// struct its own encoding.
struct GluingPattern {
  std::array<PairGluing, 4> pairs;

  auto operator<=>(const GluingPattern&) const = default;
  bool valid() const;
  int partner_of(int face) const;
  FaceGluingMap map_out_of(int face) const;  // stored map or its inverse
  std::string id() const;                    // e.g. "01r2|23r0|45r1|67r2"
  static GluingPattern from_id(const std::string& text);
};

// All 8505 patterns (105 matchings times 3^4 maps), deterministic order.
std::vector<GluingPattern> enumerate_patterns();

// Relabel by g: each pair map m becomes g o m o g^{-1} on the image faces.
GluingPattern conjugate(const Automorphism& g, const GluingPattern& p);

// Least conjugate under the 48-element symmetry group.
GluingPattern canonical_pattern(const GluingPattern& p);

struct OctaCensus {
  std::size_t patterns = 0;
  std::vector<GluingPattern> class_reps;  // canonical forms, ascending
  std::vector<int> orbit_sizes;           // aligned with class_reps
};
OctaCensus octa_census(unsigned jobs = 1);

}  // namespace census
