#include "census/snf.hpp"

#include <algorithm>
#include <cstdlib>

#include "census/common.hpp"

namespace census {

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  require(x.cols == y.rows, "matrix dimension mismatch");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, y.at(k, j)));
    }
  return out;
}

bool is_zero(const IntMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](std::int64_t v) { return v == 0; });
}

namespace {

void add_row(IntMatrix& m, int dst, int src, std::int64_t factor) {
  for (int j = 0; j < m.cols; ++j)
    m.at(dst, j) = checked_add(m.at(dst, j), checked_mul(factor, m.at(src, j)));
}

void add_col(IntMatrix& m, int dst, int src, std::int64_t factor) {
  for (int i = 0; i < m.rows; ++i)
    m.at(i, dst) = checked_add(m.at(i, dst), checked_mul(factor, m.at(i, src)));
}

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_pivot(const IntMatrix& m, int t, int& pi, int& pj) {
  bool found = false;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      const std::int64_t v = m.at(i, j);
      if (v != 0 && (!found || std::abs(v) < std::abs(m.at(pi, pj)))) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithNormalForm smith_normal_form(IntMatrix m) {
  const int bound = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < bound; ++t) {
    int pi = 0, pj = 0;
    if (!find_pivot(m, t, pi, pj)) break;
    for (;;) {
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      for (int i = t + 1; i < m.rows; ++i)
        if (m.at(i, t) != 0) add_row(m, i, t, -(m.at(i, t) / m.at(t, t)));
      for (int j = t + 1; j < m.cols; ++j)
        if (m.at(t, j) != 0) add_col(m, j, t, -(m.at(t, j) / m.at(t, t)));

      bool clean = true;
      for (int i = t + 1; i < m.rows && clean; ++i) clean = (m.at(i, t) == 0);
      for (int j = t + 1; j < m.cols && clean; ++j) clean = (m.at(t, j) == 0);
      if (clean) {
        // The pivot must divide the rest of the block for the divisibility
        // chain; fold a bad row in and keep reducing.
        int bad = -1;
        for (int i = t + 1; i < m.rows && bad < 0; ++i)
          for (int j = t + 1; j < m.cols; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(m, t, bad, 1);
      }
      require(find_pivot(m, t, pi, pj), "pivot vanished during reduction");
    }
  }

  SmithNormalForm snf;
  snf.rank = t;
  for (int i = 0; i < t; ++i) snf.factors.push_back(std::abs(m.at(i, i)));
  for (int i = 0; i + 1 < t; ++i)
    require(snf.factors[i + 1] % snf.factors[i] == 0, "invariant factors do not divide");
  return snf;
}

}  // namespace census
