#ifndef HGALG_LINALG_HPP
#define HGALG_LINALG_HPP

#include <vector>

#include "hgalg/field.hpp"

namespace hgalg {

struct SparseEntry {
  int col;
  int value;
};

/// Row-major sparse integer matrix. Rows need not be sorted.
struct SparseMatrix {
  int cols = 0;
  std::vector<std::vector<SparseEntry>> rows;
};

/// Exact rank over the given field. GF(p) uses modular elimination; the
/// rationals use fraction-free elimination on arbitrary-precision integers.
int rank_over_field(const SparseMatrix& m, const FieldSpec& field);

}  // namespace hgalg

#endif  // HGALG_LINALG_HPP
