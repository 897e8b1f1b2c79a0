#include "phimod/linalg.hpp"

namespace phimod {

std::vector<RowE> kernel_basis(std::vector<RowE> rows, size_t ncols, const FieldPtr& F) {
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    FieldElement inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      FieldElement factor = rows[i][col];
      for (size_t c = col; c < ncols; ++c) rows[i][c] -= factor * rows[r][c];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<RowE> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RowE v(ncols, FieldElement::zero(F));
    v[free] = FieldElement::one(F);
    for (size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace phimod
