#pragma once

#include <array>
#include <vector>

namespace census {

inline constexpr int kOctaVertices = 6;
inline constexpr int kOctaFaces = 8;
inline constexpr int kOctaEdges = 12;
inline constexpr int kOctaCorners = 24;  // (edge, endpoint) flags

// Combinatorial oriented octahedron. Face triples are stored in the cyclic
// order induced by one global orientation, so every directed edge (u,w) of a
// face boundary belongs to exactly one face and its reverse to the adjacent
// one.
struct Polyhedron3 {
  std::array<std::array<int, 3>, kOctaFaces> faces;
  std::array<std::array<int, 2>, kOctaEdges> edges;  // sorted pairs, ascending

  std::array<std::array<int, kOctaVertices>, kOctaVertices> edge_index;   // -1 if absent
  std::array<std::array<int, kOctaVertices>, kOctaVertices> face_of_dir;  // face with u->w on its boundary
  // Edge arriving at / leaving vertex v along the boundary cycle of face f
  // (-1 when v is not a vertex of f).
  std::array<std::array<int, kOctaFaces>, kOctaVertices> in_edge;
  std::array<std::array<int, kOctaFaces>, kOctaVertices> out_edge;

  int face_index(std::array<int, 3> vertex_set) const;  // lookup by vertex set
  bool face_contains(int f, int v) const;
  // Corner flag id for endpoint v of edge e, in 0..23.
  int corner_id(int e, int v) const;
  int corner_edge(int c) const { return c / 2; }
  int corner_vertex(int c) const { return edges[c / 2][c % 2]; }
};

const Polyhedron3& octahedron();

// Symmetry of the octahedron: vertex permutation carrying faces to faces.
// sign is +1 exactly when every face's cyclic order is preserved.
struct Automorphism {
  std::array<int, kOctaVertices> vertex_map;
  std::array<int, kOctaFaces> face_map;
  int sign = +1;
};

const std::vector<Automorphism>& octahedron_symmetries();  // 48 elements

// Simplicial orientation-reversing identification of two distinct faces.
struct FaceGluingMap {
  int source = -1;
  int target = -1;
  std::array<int, kOctaVertices> vertex_map;  // -1 outside the source triple

  FaceGluingMap inverted() const;
  bool operator==(const FaceGluingMap&) const = default;
};

// The three orientation-reversing simplicial maps from face a onto face b;
// index r sends slot 0 of the source triple to slot r of the reversed target
// triple. Throws std::invalid_argument when a == b.
std::array<FaceGluingMap, 3> face_gluing_maps(int a, int b);

}  // namespace census
