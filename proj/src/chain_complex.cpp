#include "census/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "census/common.hpp"

namespace census {

namespace {

using FaceMaps = std::array<std::array<int, kOctaVertices>, kOctaFaces>;

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

// Corner flags of the hexagon of face f in boundary-cycle order.
std::array<int, 6> hexagon_corner_cycle(const Polyhedron3& o, int f) {
  std::array<int, 6> cyc{};
  for (int i = 0; i < 3; ++i) {
    const int u = o.faces[f][i], w = o.faces[f][(i + 1) % 3];
    const int e = o.edge_index[u][w];
    cyc[2 * i] = o.corner_id(e, u);
    cyc[2 * i + 1] = o.corner_id(e, w);
  }
  return cyc;
}

bool cyclic_equal(const std::array<int, 6>& a, const std::array<int, 6>& b) {
  for (int r = 0; r < 6; ++r) {
    bool eq = true;
    for (int i = 0; i < 6 && eq; ++i) eq = (a[i] == b[(i + r) % 6]);
    if (eq) return true;
  }
  return false;
}

int direction_sign(std::pair<int, int> traversal, std::pair<int, int> reference) {
  if (traversal == reference) return +1;
  if (traversal.first == reference.second && traversal.second == reference.first) return -1;
  throw invariant_error("1-cell traversal does not match its class direction");
}

}  // namespace

ChainComplex build_chain_complex(const GluingPattern& p) {
  if (!p.valid()) throw std::invalid_argument("invalid gluing pattern");
  const Polyhedron3& o = octahedron();
  const FaceMaps fm = pattern_face_maps(p);
  const auto orbits = edge_orbits(p);

  // 0-cells: square-corner classes.
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
  std::array<int, kOctaCorners> zero_cell;
  zero_cell.fill(-1);
  int n0 = 0;
  for (int c = 0; c < kOctaCorners; ++c) {
    const int r = corners.find(c);
    if (zero_cell[r] == -1) zero_cell[r] = n0++;
  }
  auto corner_cell = [&](int c) { return zero_cell[corners.find(c)]; };

  // 1-cells: truncated octahedron-edge classes carry the orbit traversal
  // direction; square-side classes carry the direction their representative
  // side is traversed by its hexagon.
  const int na = static_cast<int>(orbits.size());
  std::array<int, kOctaEdges> orbit_of{};
  std::array<std::array<int, 2>, kOctaEdges> dir_of{};
  for (int oi = 0; oi < na; ++oi)
    for (std::size_t j = 0; j < orbits[oi].edges.size(); ++j) {
      orbit_of[orbits[oi].edges[j]] = oi;
      dir_of[orbits[oi].edges[j]] = orbits[oi].directed[j];
    }

  constexpr int kNoSide = -1;
  std::array<int, kOctaVertices * kOctaFaces> rim_class;
  std::array<std::pair<int, int>, kOctaVertices * kOctaFaces> rim_dir;  // (tail, head) corner flags
  rim_class.fill(kNoSide);
  auto side_id = [](int v, int f) { return v * kOctaFaces + f; };
  int nr = 0;
  for (int v = 0; v < kOctaVertices; ++v)
    for (int f = 0; f < kOctaFaces; ++f) {
      if (!o.face_contains(f, v) || rim_class[side_id(v, f)] != kNoSide) continue;
      const auto& m = fm[f];
      const int v2 = m[v];
      const int f2 = p.partner_of(f);
      const int tail = o.corner_id(o.in_edge[v][f], v);
      const int head = o.corner_id(o.out_edge[v][f], v);
      rim_class[side_id(v, f)] = nr;
      rim_dir[side_id(v, f)] = {tail, head};
      require(rim_class[side_id(v2, f2)] == kNoSide, "square side glued twice");
      rim_class[side_id(v2, f2)] = nr;
      rim_dir[side_id(v2, f2)] = {o.corner_id(map_edge(o, m, o.in_edge[v][f]), v2),
                                  o.corner_id(map_edge(o, m, o.out_edge[v][f]), v2)};
      ++nr;
    }
  require(nr == 12, "square-side class count");
  const int n1 = na + nr;

  ChainComplex cc;
  cc.cells = {n0, n1, 10, 1};

  cc.d1 = IntMatrix(n0, n1);
  for (int oi = 0; oi < na; ++oi) {
    const auto d = orbits[oi].directed.front();
    const int e = orbits[oi].edges.front();
    cc.d1.at(corner_cell(o.corner_id(e, d[1])), oi) += 1;
    cc.d1.at(corner_cell(o.corner_id(e, d[0])), oi) -= 1;
  }
  {
    std::vector<bool> done(nr, false);
    for (int v = 0; v < kOctaVertices; ++v)
      for (int f = 0; f < kOctaFaces; ++f) {
        if (!o.face_contains(f, v)) continue;
        const int cls = rim_class[side_id(v, f)];
        if (done[cls]) continue;
        done[cls] = true;
        const auto [tail, head] = rim_dir[side_id(v, f)];
        cc.d1.at(corner_cell(head), na + cls) += 1;
        cc.d1.at(corner_cell(tail), na + cls) -= 1;
      }
  }

  // 2-cells: hexagon classes in pair order, then the six squares.
  cc.d2 = IntMatrix(n1, 10);
  for (int pi = 0; pi < 4; ++pi) {
    const int f = p.pairs[pi].a;  // representative hexagon of the class
    for (int i = 0; i < 3; ++i) {
      const int u = o.faces[f][i], w = o.faces[f][(i + 1) % 3];
      const int e = o.edge_index[u][w];
      cc.d2.at(orbit_of[e], pi) +=
          direction_sign({u, w}, {dir_of[e][0], dir_of[e][1]});
      const int s = side_id(w, f);
      const std::pair<int, int> hex_traversal = {o.corner_id(o.in_edge[w][f], w),
                                                 o.corner_id(o.out_edge[w][f], w)};
      cc.d2.at(na + rim_class[s], pi) += direction_sign(hex_traversal, rim_dir[s]);
    }
  }
  for (int v = 0; v < kOctaVertices; ++v)
    for (int f = 0; f < kOctaFaces; ++f) {
      if (!o.face_contains(f, v)) continue;
      const int s = side_id(v, f);
      // The square traverses its side against the hexagon, head to tail.
      const std::pair<int, int> square_traversal = {o.corner_id(o.out_edge[v][f], v),
                                                    o.corner_id(o.in_edge[v][f], v)};
      cc.d2.at(na + rim_class[s], 4 + v) += direction_sign(square_traversal, rim_dir[s]);
    }

  // 3-cell boundary: the outward-oriented hexagons cancel in pairs, the
  // squares survive; both contributions are computed, not assumed.
  cc.d3 = IntMatrix(10, 1);
  for (int pi = 0; pi < 4; ++pi) {
    const auto& pg = p.pairs[pi];
    cc.d3.at(pi, 0) += 1;
    const auto& m = fm[pg.a];
    std::array<int, 6> pushed{};
    const auto rep_cycle = hexagon_corner_cycle(o, pg.a);
    for (int i = 0; i < 6; ++i) {
      const int e = o.corner_edge(rep_cycle[i]);
      const int v = o.corner_vertex(rep_cycle[i]);
      pushed[i] = o.corner_id(map_edge(o, m, e), m[v]);
    }
    const auto own = hexagon_corner_cycle(o, pg.b);
    std::array<int, 6> own_reversed{};
    std::reverse_copy(own.begin(), own.end(), own_reversed.begin());
    if (cyclic_equal(pushed, own))
      cc.d3.at(pi, 0) += 1;
    else if (cyclic_equal(pushed, own_reversed))
      cc.d3.at(pi, 0) -= 1;
    else
      throw invariant_error("glued hexagons do not share a corner cycle");
  }
  for (int v = 0; v < kOctaVertices; ++v) cc.d3.at(4 + v, 0) += 1;

  require(is_zero(multiply(cc.d1, cc.d2)), "d1 o d2 is non-zero");
  require(is_zero(multiply(cc.d2, cc.d3)), "d2 o d3 is non-zero");
  return cc;
}

ChainComplex cap_complex(const ChainComplex& c, const std::vector<VertexLink>& spheres) {
  ChainComplex out = c;
  const int extra = static_cast<int>(spheres.size());
  out.cells[3] = c.cells[3] + extra;
  out.d3 = IntMatrix(c.d3.rows, c.d3.cols + extra);
  for (int i = 0; i < c.d3.rows; ++i)
    for (int j = 0; j < c.d3.cols; ++j) out.d3.at(i, j) = c.d3.at(i, j);
  for (int s = 0; s < extra; ++s) {
    const auto& link = spheres[s];
    if (link.genus != 0 || !link.orientable)
      throw std::invalid_argument("only sphere boundary components can be capped");
    for (std::size_t i = 0; i < link.vertices.size(); ++i)
      out.d3.at(4 + link.vertices[i], c.d3.cols + s) = link.square_signs[i];
  }
  require(is_zero(multiply(out.d2, out.d3)), "cap boundary is not a cycle");
  return out;
}

std::string AbelianGroup::str() const {
  if (rank == 0 && torsion.empty()) return "0";
  std::string s;
  if (rank == 1)
    s = "Z";
  else if (rank > 1)
    s = "Z^" + std::to_string(rank);
  for (const auto d : torsion) {
    if (!s.empty()) s += '+';
    s += "Z/" + std::to_string(d);
  }
  return s;
}

AbelianGroup first_homology(const ChainComplex& c) {
  const SmithNormalForm s1 = smith_normal_form(c.d1);
  const SmithNormalForm s2 = smith_normal_form(c.d2);
  AbelianGroup h;
  h.rank = c.cells[1] - s1.rank - s2.rank;
  require(h.rank >= 0, "negative first Betti number");
  for (const auto d : s2.factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

AbelianGroup first_homology(const GluingPattern& p) {
  return first_homology(build_chain_complex(p));
}

int zeroth_betti(const ChainComplex& c) {
  return c.cells[0] - smith_normal_form(c.d1).rank;
}

}  // namespace census
