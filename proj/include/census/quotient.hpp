#pragma once

#include <array>
#include <vector>

#include "census/gluing.hpp"
#include "census/surface.hpp"

namespace census {

// Cycle of octahedron edges identified by successive face gluings, together
// with the traversal direction of every member edge. The composed return map
// on the endpoints of the first edge must be the identity; a swap would fold
// an edge onto itself and is rejected.
struct EdgeOrbit {
  std::vector<int> edges;                   // edge indices in traversal order
  std::vector<std::array<int, 2>> directed; // oriented traversal, aligned
  std::array<int, 2> base{};
  std::array<int, 2> returned{};
};

std::vector<EdgeOrbit> edge_orbits(const GluingPattern& p);

// Classes of octahedron vertices under the identifications induced by p.
std::vector<std::vector<int>> vertex_classes(const GluingPattern& p);

// Closed surface assembled from the truncation squares around one vertex
// class. Orientability and connectivity are verified, not assumed.
struct VertexLink {
  std::vector<int> vertices;      // class members, ascending
  std::vector<int> square_signs;  // coherent orientation per square, aligned
  int chi = 2;
  int genus = 0;
  bool orientable = true;
};

std::vector<VertexLink> vertex_links(const GluingPattern& p);

// Genera of the links, sorted descending.
SurfaceSignature boundary_signature(const GluingPattern& p);

}  // namespace census
