#include "census/gluing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "census/common.hpp"
#include "census/parallel.hpp"

namespace census {

bool GluingPattern::valid() const {
  std::array<bool, kOctaFaces> used{};
  int prev_a = -1;
  for (const auto& pg : pairs) {
    if (pg.a < 0 || pg.b < 0 || pg.a >= kOctaFaces || pg.b >= kOctaFaces) return false;
    if (pg.a >= pg.b || pg.rot < 0 || pg.rot > 2) return false;
    if (pg.a <= prev_a) return false;
    if (used[pg.a] || used[pg.b]) return false;
    used[pg.a] = used[pg.b] = true;
    prev_a = pg.a;
  }
  return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

int GluingPattern::partner_of(int face) const {
  for (const auto& pg : pairs) {
    if (pg.a == face) return pg.b;
    if (pg.b == face) return pg.a;
  }
  throw std::invalid_argument("face index out of range");
}

FaceGluingMap GluingPattern::map_out_of(int face) const {
  for (const auto& pg : pairs) {
    if (pg.a == face) return face_gluing_maps(pg.a, pg.b)[pg.rot];
    if (pg.b == face) return face_gluing_maps(pg.a, pg.b)[pg.rot].inverted();
  }
  throw std::invalid_argument("face index out of range");
}

std::string GluingPattern::id() const {
  std::string s;
  for (const auto& pg : pairs) {
    if (!s.empty()) s += '|';
    s += static_cast<char>('0' + pg.a);
    s += static_cast<char>('0' + pg.b);
    s += 'r';
    s += static_cast<char>('0' + pg.rot);
  }
  return s;
}

GluingPattern GluingPattern::from_id(const std::string& text) {
  if (text.size() != 4 * 4 + 3) throw std::invalid_argument("bad pattern id length");
  GluingPattern p;
  for (int i = 0; i < 4; ++i) {
    const char* s = text.data() + 5 * i;
    if (i > 0 && s[-1] != '|') throw std::invalid_argument("bad pattern id separator");
    if (s[2] != 'r') throw std::invalid_argument("bad pattern id");
    p.pairs[i] = {s[0] - '0', s[1] - '0', s[3] - '0'};
  }
  if (!p.valid()) throw std::invalid_argument("pattern id does not encode a matching");
  return p;
}

std::vector<GluingPattern> enumerate_patterns() {
  std::vector<GluingPattern> out;
  out.reserve(8505);
  std::array<bool, kOctaFaces> used{};
  std::array<std::pair<int, int>, 4> match;

  auto assign_rotations = [&](auto&& self, int pair_index, GluingPattern& p) -> void {
    if (pair_index == 4) {
      out.push_back(p);
      return;
    }
    for (int r = 0; r < 3; ++r) {
      p.pairs[pair_index] = {match[pair_index].first, match[pair_index].second, r};
      self(self, pair_index + 1, p);
    }
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 4) {
      GluingPattern p;
      assign_rotations(assign_rotations, 0, p);
      return;
    }
    int a = 0;
    while (used[a]) ++a;
    used[a] = true;
    for (int b = a + 1; b < kOctaFaces; ++b) {
      if (used[b]) continue;
      used[b] = true;
      match[depth] = {a, b};
      self(self, depth + 1);
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, 0);
  require(out.size() == 8505, "pattern enumeration size");
  return out;
}

GluingPattern conjugate(const Automorphism& g, const GluingPattern& p) {
  const Polyhedron3& o = octahedron();
  GluingPattern out;
  int slot = 0;
  for (const auto& pg : p.pairs) {
    const FaceGluingMap m = face_gluing_maps(pg.a, pg.b)[pg.rot];
    int a2 = g.face_map[pg.a];
    int b2 = g.face_map[pg.b];
    // g o m o g^{-1}, recorded on the vertices of the image source face.
    FaceGluingMap m2;
    m2.source = a2;
    m2.target = b2;
    m2.vertex_map.fill(-1);
    for (int v : o.faces[pg.a]) m2.vertex_map[g.vertex_map[v]] = g.vertex_map[m.vertex_map[v]];
    if (a2 > b2) {
      std::swap(a2, b2);
      m2 = m2.inverted();
    }
    int rot = -1;
    const auto candidates = face_gluing_maps(a2, b2);
    for (int r = 0; r < 3; ++r)
      if (candidates[r] == m2) {
        rot = r;
        break;
      }
    require(rot >= 0, "conjugated gluing map is not orientation-reversing");
    out.pairs[slot++] = {a2, b2, rot};
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

GluingPattern canonical_pattern(const GluingPattern& p) {
  if (!p.valid()) throw std::invalid_argument("invalid gluing pattern");
  GluingPattern best = p;
  for (const auto& g : octahedron_symmetries()) {
    GluingPattern q = conjugate(g, p);
    if (q < best) best = q;
  }
  return best;
}

OctaCensus octa_census(unsigned jobs) {
  const auto patterns = enumerate_patterns();
  const auto canon = parallel_map<GluingPattern>(
      patterns.size(), jobs, [&](std::size_t i) { return canonical_pattern(patterns[i]); });

  std::map<GluingPattern, int> orbits;
  for (const auto& c : canon) ++orbits[c];

  OctaCensus census;
  census.patterns = patterns.size();
  census.class_reps.reserve(orbits.size());
  census.orbit_sizes.reserve(orbits.size());
  for (const auto& [rep, size] : orbits) {
    census.class_reps.push_back(rep);
    census.orbit_sizes.push_back(size);
  }
  return census;
}

}  // namespace census
