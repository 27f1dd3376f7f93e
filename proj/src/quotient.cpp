#include "census/quotient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "census/common.hpp"

namespace census {

namespace {

using FaceMaps = std::array<std::array<int, kOctaVertices>, kOctaFaces>;

// Vertex map attached to each face: the stored map for the smaller face of a
// pair, its inverse for the larger one.
FaceMaps pattern_face_maps(const GluingPattern& p) {
  FaceMaps fm{};
  for (const auto& pg : p.pairs) {
    const FaceGluingMap m = face_gluing_maps(pg.a, pg.b)[pg.rot];
    fm[pg.a] = m.vertex_map;
    fm[pg.b] = m.inverted().vertex_map;
  }
  return fm;
}

int map_edge(const Polyhedron3& o, const std::array<int, kOctaVertices>& m, int e) {
  return o.edge_index[m[o.edges[e][0]]][m[o.edges[e][1]]];
}

}  // namespace

std::vector<EdgeOrbit> edge_orbits(const GluingPattern& p) {
  if (!p.valid()) throw std::invalid_argument("invalid gluing pattern");
  const Polyhedron3& o = octahedron();
  const FaceMaps fm = pattern_face_maps(p);

  std::array<bool, kOctaEdges> seen{};
  std::vector<EdgeOrbit> orbits;
  for (int e0 = 0; e0 < kOctaEdges; ++e0) {
    if (seen[e0]) continue;
    EdgeOrbit orbit;
    orbit.base = {o.edges[e0][0], o.edges[e0][1]};

    // Rotate to the face on the far side of the current directed edge and
    // push through its gluing; the traversal is a permutation of directed
    // edges, so it returns to the start unless an edge gets flipped onto
    // itself on the way (which the orientation-reversing hypothesis forbids).
    std::array<int, 2> d = orbit.base;
    for (;;) {
      const int e = o.edge_index[d[0]][d[1]];
      if (!orbit.edges.empty() && e == e0) {
        orbit.returned = d;
        break;
      }
      require(!seen[e], "edge identified to itself reversing orientation");
      seen[e] = true;
      orbit.edges.push_back(e);
      orbit.directed.push_back(d);
      const int depart = o.face_of_dir[d[1]][d[0]];
      const auto& m = fm[depart];
      d = {m[d[0]], m[d[1]]};
    }
    require(orbit.returned == orbit.base, "edge-orbit return map is not the identity");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<int>> vertex_classes(const GluingPattern& p) {
  const FaceMaps fm = pattern_face_maps(p);
  const Polyhedron3& o = octahedron();
  UnionFind uf(kOctaVertices);
  for (int f = 0; f < kOctaFaces; ++f)
    for (int v : o.faces[f]) uf.unite(v, fm[f][v]);

  std::vector<std::vector<int>> classes;
  std::array<int, kOctaVertices> where;
  where.fill(-1);
  for (int v = 0; v < kOctaVertices; ++v) {
    const int r = uf.find(v);
    if (where[r] == -1) {
      where[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[where[r]].push_back(v);
  }
  return classes;
}

std::vector<VertexLink> vertex_links(const GluingPattern& p) {
  if (!p.valid()) throw std::invalid_argument("invalid gluing pattern");
  const Polyhedron3& o = octahedron();
  const FaceMaps fm = pattern_face_maps(p);

  // Corner flags (edge endpoint near a vertex) identified by the gluings.
  UnionFind corners(kOctaCorners);
  for (int f = 0; f < kOctaFaces; ++f) {
    const auto& m = fm[f];
    for (int i = 0; i < 3; ++i) {
      const int u = o.faces[f][i], w = o.faces[f][(i + 1) % 3];
      const int e = o.edge_index[u][w];
      const int e2 = o.edge_index[m[u]][m[w]];
      corners.unite(o.corner_id(e, u), o.corner_id(e2, m[u]));
      corners.unite(o.corner_id(e, w), o.corner_id(e2, m[w]));
    }
  }

  std::vector<VertexLink> links;
  for (const auto& cls : vertex_classes(p)) {
    VertexLink link;
    link.vertices = cls;
    link.square_signs.assign(cls.size(), 0);

    // Propagate a coherent orientation across the squares of the class. Two
    // squares agree in sign exactly when the side gluing between them
    // reverses the traversal direction; a contradiction means the link is
    // non-orientable and the gluing maps were not orientation-reversing.
    auto slot_of = [&](int v) {
      return static_cast<int>(std::find(cls.begin(), cls.end(), v) - cls.begin());
    };
    std::vector<int> stack;
    link.square_signs[0] = +1;
    stack.push_back(cls[0]);
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const int sv = link.square_signs[slot_of(v)];
      for (int f = 0; f < kOctaFaces; ++f) {
        if (!o.face_contains(f, v)) continue;
        const auto& m = fm[f];
        const int v2 = m[v];
        const int f2 = p.partner_of(f);
        require(o.face_contains(f2, v2), "side gluing leaves the partner face");
        // Same sign iff the image of this square's outgoing corner is the
        // partner side's incoming corner.
        const int img_out = map_edge(o, m, o.out_edge[v][f]);
        const int want = (img_out == o.in_edge[v2][f2]) ? sv : -sv;
        const int slot2 = slot_of(v2);
        require(slot2 < static_cast<int>(cls.size()), "side gluing leaves the vertex class");
        if (link.square_signs[slot2] == 0) {
          link.square_signs[slot2] = want;
          stack.push_back(v2);
          ++reached;
        } else {
          require(link.square_signs[slot2] == want, "vertex link is non-orientable");
        }
      }
    }
    require(reached == static_cast<int>(cls.size()), "vertex link is not connected");
    link.orientable = true;

    // chi = corners - sides + squares with sides = 2 * squares.
    std::set<int> corner_roots;
    for (int v : cls)
      for (int e = 0; e < kOctaEdges; ++e)
        if (o.edges[e][0] == v || o.edges[e][1] == v)
          corner_roots.insert(corners.find(o.corner_id(e, v)));
    const int nsq = static_cast<int>(cls.size());
    link.chi = static_cast<int>(corner_roots.size()) - nsq;
    require(link.chi <= 2 && (2 - link.chi) % 2 == 0, "vertex link has invalid Euler characteristic");
    link.genus = (2 - link.chi) / 2;
    links.push_back(std::move(link));
  }
  return links;
}

SurfaceSignature boundary_signature(const GluingPattern& p) {
  std::vector<int> genera;
  for (const auto& link : vertex_links(p)) genera.push_back(link.genus);
  return make_signature(std::move(genera));
}

}  // namespace census
