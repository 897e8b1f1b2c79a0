#include "phimod/productring.hpp"

namespace phimod {

VecF phi_shift(const VecF& v, long k) {
  const long f = static_cast<long>(v.size());
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (long i = 0; i < f; ++i) out.push_back(v[static_cast<size_t>(((i + k) % f + f) % f)]);
  return VecF(std::move(out));
}

VecF nm_phi(const VecF& v) {
  FieldElement prod = FieldElement::one(v.field());
  for (const auto& x : v) prod *= x;
  return VecF::constant(prod, v.size());
}

VecF tr_phi(const VecF& v) {
  FieldElement sum = FieldElement::zero(v.field());
  for (const auto& x : v) sum += x;
  return VecF::constant(sum, v.size());
}

std::optional<VecF> solve_twisted(const VecF& alpha, const VecF& beta) {
  if (alpha.size() != beta.size()) fail(ErrorKind::SpecMismatch, "vector lengths differ");
  if (!alpha.is_unit() || !beta.is_unit())
    fail(ErrorKind::NotInvertible, "twisted equation needs unit coefficients");
  if (nm_phi(alpha) != nm_phi(beta)) return std::nullopt;
  // gamma_{i+1} = alpha_i gamma_i / beta_i
  std::vector<FieldElement> g;
  g.push_back(FieldElement::one(alpha.field()));
  for (size_t i = 0; i + 1 < alpha.size(); ++i) g.push_back(g.back() * alpha[i] / beta[i]);
  return VecF(std::move(g));
}

VecM tensor_e(const VecF& v, int e) {
  std::vector<FieldElement> out;
  out.reserve(v.size() * static_cast<size_t>(e));
  for (int i = 0; i < e; ++i)
    for (const auto& x : v) out.push_back(x);
  return VecM(std::move(out));
}

IndexSet::IndexSet(size_t n, const std::vector<size_t>& members) : bits_(n, false) {
  for (size_t i : members) insert(i);
}

size_t IndexSet::count() const {
  size_t c = 0;
  for (bool b : bits_) c += b;
  return c;
}

std::vector<size_t> IndexSet::elements() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  IndexSet r(universe());
  for (size_t i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] && o.bits_.at(i);
  return r;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  IndexSet r(universe());
  for (size_t i = 0; i < universe(); ++i) r.bits_[i] = bits_[i] || o.bits_.at(i);
  return r;
}

IndexSet IndexSet::complement() const {
  IndexSet r(universe());
  for (size_t i = 0; i < universe(); ++i) r.bits_[i] = !bits_[i];
  return r;
}

IndexSet support(const VecM& x) {
  IndexSet s(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s.insert(i);
  return s;
}

VecM idempotent(const IndexSet& J, const FieldPtr& F) {
  std::vector<FieldElement> out;
  for (size_t i = 0; i < J.universe(); ++i)
    out.push_back(J.contains(i) ? FieldElement::one(F) : FieldElement::zero(F));
  return VecM(std::move(out));
}

Mat2 Mat2::identity(const FieldPtr& F) { return scalar(FieldElement::one(F)); }

Mat2 Mat2::scalar(const FieldElement& s) { return diag(s, s); }

Mat2 Mat2::diag(const FieldElement& x, const FieldElement& y) {
  FieldElement z = FieldElement::zero(x.field());
  return {x, z, z, y};
}

Mat2 Mat2::inverse() const {
  FieldElement dt = det();
  if (dt.is_zero()) fail(ErrorKind::NotInvertible, "singular 2x2 matrix");
  FieldElement inv = dt.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 operator*(const FieldElement& s, const Mat2& x) {
  return {s * x.a, s * x.b, s * x.c, s * x.d};
}

Mat2F phi_shift(const Mat2F& m, long k) {
  return {phi_shift(m.a, k), phi_shift(m.b, k), phi_shift(m.c, k), phi_shift(m.d, k)};
}

Mat2F nm_phi(const Mat2F& m) {
  Mat2F acc = m;
  for (size_t k = 1; k < m.size(); ++k) acc = acc * phi_shift(m, static_cast<long>(k));
  return acc;
}

Mat2M tensor_e(const Mat2F& m, int e) {
  return {tensor_e(m.a, e), tensor_e(m.b, e), tensor_e(m.c, e), tensor_e(m.d, e)};
}

}  // namespace phimod
