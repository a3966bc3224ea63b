#pragma once

#include <optional>

namespace fanalg::cli {

// Published codimension and degree of F_{p,m} for 3 <= p <= 9, 1 <= m <= 5.
// A degree of 0 marks an unknown value.
struct CodimDegree {
  long codim = 0;
  long degree = 0;
};

inline std::optional<CodimDegree> published_codim_degree(int p, int m) {
  static constexpr CodimDegree kGrid[7][5] = {
      {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{2, 4}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{5, 11}, {1, 5}, {0, 1}, {0, 1}, {0, 1}},
      {{9, 26}, {4, 45}, {0, 1}, {0, 1}, {0, 1}},
      {{14, 57}, {8, 259}, {3, 91}, {0, 1}, {0, 1}},
      {{20, 120}, {13, 1232}, {7, 1368}, {2, 98}, {0, 1}},
      {{27, 247}, {19, 5319}, {12, 14232}, {6, 0}, {1, 54}},
  };
  if (p < 3 || p > 9 || m < 1 || m > 5) return std::nullopt;
  return kGrid[p - 3][m - 1];
}

// Published minimal generator counts of I_{p,m} by degree, 4 <= p <= 9.
// -1 marks a cell that does not apply.
struct GeneratorCounts {
  long tetrads = -1;          // m = 1, degree 2
  long minors_m2 = -1;        // m = 2, degree 3
  long pentads = -1;          // m = 2, degree 5
  long minors_m3 = -1;        // m = 3, degree 4
  long septads = -1;          // m = 3, degree 7
  long other_degree7 = -1;    // m = 3, degree 7, not septads
  long degree8 = -1;          // m = 3, degree 8
};

inline std::optional<GeneratorCounts> published_generator_counts(int p) {
  static constexpr GeneratorCounts kRows[6] = {
      {2, -1, -1, -1, -1, -1, -1},
      {10, 0, 1, -1, -1, -1, -1},
      {30, 5, 6, -1, -1, -1, -1},
      {70, 35, 21, 0, 15, 0, 20},
      {140, 140, 56, 14, 120, 140, 168},
      {252, 420, 126, 126, 540, 1386, 756},
  };
  if (p < 4 || p > 9) return std::nullopt;
  return kRows[p - 4];
}

}  // namespace fanalg::cli
