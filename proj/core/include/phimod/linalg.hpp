#pragma once

#include <vector>

#include "phimod/exactfield.hpp"

namespace phimod {

using RowE = std::vector<FieldElement>;

/// Basis of {v : A v = 0} for A given by rows over E with `ncols` columns.
std::vector<RowE> kernel_basis(std::vector<RowE> rows, size_t ncols, const FieldPtr& F);

}  // namespace phimod
