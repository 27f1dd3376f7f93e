#include "census/octahedron.hpp"

#include <algorithm>
#include <stdexcept>

#include "census/common.hpp"

namespace census {

namespace {

// Vertices 0 and 5 are the poles, 1..4 the equator. Top faces are listed in
// their positive cyclic order; bottom triples are reversed so that all eight
// boundary orientations are coherent (every directed edge occurs once).
constexpr std::array<std::array<int, 3>, kOctaFaces> kFaces = {{
    {0, 1, 2},
    {0, 2, 3},
    {0, 3, 4},
    {0, 4, 1},
    {5, 2, 1},
    {5, 3, 2},
    {5, 4, 3},
    {5, 1, 4},
}};

Polyhedron3 build() {
  Polyhedron3 o;
  o.faces = kFaces;

  std::vector<std::array<int, 2>> edges;
  for (const auto& f : o.faces)
    for (int i = 0; i < 3; ++i) {
      int u = f[i], w = f[(i + 1) % 3];
      edges.push_back({std::min(u, w), std::max(u, w)});
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  require(edges.size() == kOctaEdges, "octahedron edge count");
  std::copy(edges.begin(), edges.end(), o.edges.begin());

  for (auto& row : o.edge_index) row.fill(-1);
  for (auto& row : o.face_of_dir) row.fill(-1);
  for (auto& row : o.in_edge) row.fill(-1);
  for (auto& row : o.out_edge) row.fill(-1);

  for (int e = 0; e < kOctaEdges; ++e) {
    o.edge_index[o.edges[e][0]][o.edges[e][1]] = e;
    o.edge_index[o.edges[e][1]][o.edges[e][0]] = e;
  }
  for (int f = 0; f < kOctaFaces; ++f)
    for (int i = 0; i < 3; ++i) {
      const int u = o.faces[f][i], w = o.faces[f][(i + 1) % 3];
      require(o.face_of_dir[u][w] == -1, "directed edge in two faces");
      o.face_of_dir[u][w] = f;
      o.out_edge[u][f] = o.edge_index[u][w];
      o.in_edge[w][f] = o.edge_index[u][w];
    }
  return o;
}

bool cyclic_equal(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

}  // namespace

int Polyhedron3::face_index(std::array<int, 3> vertex_set) const {
  std::sort(vertex_set.begin(), vertex_set.end());
  for (int f = 0; f < kOctaFaces; ++f) {
    std::array<int, 3> s = faces[f];
    std::sort(s.begin(), s.end());
    if (s == vertex_set) return f;
  }
  return -1;
}

bool Polyhedron3::face_contains(int f, int v) const {
  const auto& t = faces[f];
  return t[0] == v || t[1] == v || t[2] == v;
}

int Polyhedron3::corner_id(int e, int v) const {
  if (edges[e][0] == v) return 2 * e;
  require(edges[e][1] == v, "vertex not an endpoint of edge");
  return 2 * e + 1;
}

const Polyhedron3& octahedron() {
  static const Polyhedron3 o = build();
  return o;
}

const std::vector<Automorphism>& octahedron_symmetries() {
  static const std::vector<Automorphism> group = [] {
    const Polyhedron3& o = octahedron();
    std::vector<Automorphism> out;
    std::array<int, kOctaVertices> perm = {0, 1, 2, 3, 4, 5};
    do {
      Automorphism g;
      g.vertex_map = perm;
      bool ok = true;
      int sign = 0;
      for (int f = 0; f < kOctaFaces && ok; ++f) {
        const std::array<int, 3> image = {perm[o.faces[f][0]], perm[o.faces[f][1]],
                                          perm[o.faces[f][2]]};
        const int fi = o.face_index(image);
        if (fi < 0) {
          ok = false;
          break;
        }
        g.face_map[f] = fi;
        const auto& target = o.faces[fi];
        const std::array<int, 3> reversed = {target[2], target[1], target[0]};
        int s;
        if (cyclic_equal(image, target))
          s = +1;
        else if (cyclic_equal(image, reversed))
          s = -1;
        else {
          ok = false;
          break;
        }
        if (sign == 0)
          sign = s;
        else
          require(sign == s, "automorphism sign differs between faces");
      }
      if (ok) {
        g.sign = sign;
        out.push_back(g);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    require(out.size() == 48, "octahedron symmetry group size");
    return out;
  }();
  return group;
}

FaceGluingMap FaceGluingMap::inverted() const {
  FaceGluingMap inv;
  inv.source = target;
  inv.target = source;
  inv.vertex_map.fill(-1);
  for (int v = 0; v < kOctaVertices; ++v)
    if (vertex_map[v] != -1) inv.vertex_map[vertex_map[v]] = v;
  return inv;
}

std::array<FaceGluingMap, 3> face_gluing_maps(int a, int b) {
  if (a == b) throw std::invalid_argument("a face cannot be glued to itself");
  const Polyhedron3& o = octahedron();
  const auto& src = o.faces[a];
  const auto& dst = o.faces[b];
  const std::array<int, 3> reversed = {dst[2], dst[1], dst[0]};
  std::array<FaceGluingMap, 3> maps;
  for (int r = 0; r < 3; ++r) {
    maps[r].source = a;
    maps[r].target = b;
    maps[r].vertex_map.fill(-1);
    for (int i = 0; i < 3; ++i) maps[r].vertex_map[src[i]] = reversed[(r + i) % 3];
  }
  return maps;
}

}  // namespace census
