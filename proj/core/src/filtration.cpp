#include "phimod/filtration.hpp"

#include <algorithm>
#include <numeric>

namespace phimod {

long WeightData::total() const { return std::accumulate(k.begin(), k.end(), 0L); }

long WeightData::lower_total() const { return std::accumulate(lower.begin(), lower.end(), 0L); }

WeightData weight_profile(const std::vector<long>& k, std::vector<long> lower) {
  const size_t m = k.size();
  if (m == 0) fail(ErrorKind::InvalidInput, "empty weight vector");
  if (lower.empty()) lower.assign(m, 0);
  if (lower.size() != m) fail(ErrorKind::InvalidInput, "lower jumps must have length m");
  WeightData w;
  w.k = k;
  w.lower = std::move(lower);
  for (long ki : k) {
    if (ki < 0) fail(ErrorKind::InvalidInput, "weights must be non-negative");
    if (ki > 0) w.jumps.push_back(ki);
  }
  std::sort(w.jumps.begin(), w.jumps.end());
  w.jumps.erase(std::unique(w.jumps.begin(), w.jumps.end()), w.jumps.end());
  w.positive = IndexSet(m);
  for (size_t i = 0; i < m; ++i)
    if (k[i] > 0) w.positive.insert(i);
  for (long level : w.jumps) {
    IndexSet s(m);
    for (size_t i = 0; i < m; ++i)
      if (k[i] >= level) s.insert(i);
    w.steps.push_back(s);
  }
  return w;
}

void validate_filtration(const FiltrationData& F) {
  const size_t m = F.weights.m();
  if (F.x.size() != m || F.y.size() != m)
    fail(ErrorKind::InvalidInput, "filtration vectors must have length m");
  for (size_t i = 0; i < m; ++i)
    if (F.x[i].is_zero() && F.y[i].is_zero())
      fail(ErrorKind::InvalidInput,
           "filtration line vanishes at embedding " + std::to_string(i));
}

bool proportional(const FieldElement& u1, const FieldElement& v1, const FieldElement& u2,
                  const FieldElement& v2) {
  return u1 * v2 == v1 * u2;
}

bool equivalent_filtrations(const FiltrationData& a, const FiltrationData& b) {
  if (!(a.weights == b.weights)) fail(ErrorKind::WeightMismatch, "weights differ");
  for (size_t i = 0; i < a.weights.m(); ++i)
    if (!proportional(a.x[i], a.y[i], b.x[i], b.y[i])) return false;
  return true;
}

FiltrationData transform_filtration(const FiltrationData& F, const Mat2M& P) {
  return {F.weights, P.a * F.x + P.b * F.y, P.c * F.x + P.d * F.y};
}

}  // namespace phimod
