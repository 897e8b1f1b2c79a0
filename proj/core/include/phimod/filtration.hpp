#pragma once

#include <vector>

#include "phimod/productring.hpp"

namespace phimod {

/// Labelled weights of a rank-two filtration, one pair of jumps per embedding.
///
/// At embedding i the filtration is everything for j <= lower_i, the line
/// (x_i, y_i) for lower_i < j <= lower_i + k_i, and zero beyond. Modules built
/// from scratch have lower = 0; twisting by a rank-one module moves it.
struct WeightData {
  std::vector<long> k;
  std::vector<long> lower;
  std::vector<long> jumps;        // distinct positive k values, increasing
  std::vector<IndexSet> steps;    // steps[r] = {i : k_i >= jumps[r]}
  IndexSet positive;              // {i : k_i > 0} = steps[0] when nonempty

  size_t m() const { return k.size(); }
  long total() const;             // sum of k_i
  long lower_total() const;       // sum of lower_i
  bool operator==(const WeightData& o) const { return k == o.k && lower == o.lower; }
};

/// Derives jumps and step sets. Throws InvalidInput on a negative weight.
WeightData weight_profile(const std::vector<long>& k, std::vector<long> lower = {});

/// Fil^j D_L generated by x eta_1 + y eta_2 on the coordinates of each step.
struct FiltrationData {
  WeightData weights;
  VecM x;
  VecM y;
};

/// Requires (x_i, y_i) != (0, 0) everywhere and matching lengths.
void validate_filtration(const FiltrationData& F);

/// Same weights and (x, y) proportional coordinatewise by units.
/// Throws WeightMismatch when the weights differ.
bool equivalent_filtrations(const FiltrationData& a, const FiltrationData& b);

/// Coordinates after the base change P (tensored up to the embeddings).
FiltrationData transform_filtration(const FiltrationData& F, const Mat2M& P);

/// (u1, v1) and (u2, v2) span the same line; both are assumed nonzero.
bool proportional(const FieldElement& u1, const FieldElement& v1, const FieldElement& u2,
                  const FieldElement& v2);

}  // namespace phimod
