#pragma once

#include <cstdint>
#include <vector>

namespace census {

// Dense integer matrix; all mutating arithmetic is overflow-checked.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
bool is_zero(const IntMatrix& m);

struct SmithNormalForm {
  std::vector<std::int64_t> factors;  // d1 | d2 | ... | dr, all positive
  int rank = 0;
};

// Exact diagonalization by unimodular row/column operations with a
// smallest-nonzero-entry pivot rule; aborts on int64 overflow instead of
// wrapping.
SmithNormalForm smith_normal_form(IntMatrix m);

}  // namespace census
