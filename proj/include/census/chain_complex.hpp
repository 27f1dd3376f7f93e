#pragma once

#include <array>
#include <string>

#include "census/gluing.hpp"
#include "census/quotient.hpp"
#include "census/snf.hpp"

namespace census {

// Integer CW chain complex of the glued truncated octahedron.
//
// Cells: one 3-cell (the truncated body); 2-cells are the 4 hexagon classes
// (in the order of the pattern's sorted face pairs) followed by the 6
// truncation squares (one per octahedron vertex); 1-cells are the truncated
// octahedron-edge classes followed by the 12 square-side classes; 0-cells
// are the square-corner classes. Construction verifies d o d = 0.
struct ChainComplex {
  std::array<int, 4> cells{};  // counts per dimension 0..3
  IntMatrix d1, d2, d3;

  int euler() const { return cells[0] - cells[1] + cells[2] - cells[3]; }
};

ChainComplex build_chain_complex(const GluingPattern& p);

// Attach a 3-disc to each listed genus-0 link: d3 gains one column per cap,
// holding the coherently oriented sum of that link's squares. Capping a
// positive-genus link is rejected.
ChainComplex cap_complex(const ChainComplex& c, const std::vector<VertexLink>& spheres);

// Finitely generated abelian group in invariant-factor form; factors equal
// to 1 are dropped.
struct AbelianGroup {
  int rank = 0;
  std::vector<std::int64_t> torsion;

  std::string str() const;  // "0", "Z", "Z^3", "Z^3+Z/3", ...
  bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup first_homology(const ChainComplex& c);
AbelianGroup first_homology(const GluingPattern& p);
int zeroth_betti(const ChainComplex& c);

}  // namespace census
