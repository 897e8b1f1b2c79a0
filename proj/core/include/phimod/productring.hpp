#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phimod/exactfield.hpp"

namespace phimod {

// Coordinates indexed by Gal(L0/Q_p) (length f) and by embeddings of L
// (length m = e*f) live in different types so they cannot be mixed up.
struct InertiaTag {};
struct EmbeddingTag {};

template <class Tag>
class ProdVec {
 public:
  ProdVec() = default;
  explicit ProdVec(std::vector<FieldElement> v) : v_(std::move(v)) {}

  static ProdVec constant(const FieldElement& a, size_t n) {
    return ProdVec(std::vector<FieldElement>(n, a));
  }
  static ProdVec ones(const FieldPtr& F, size_t n) { return constant(FieldElement::one(F), n); }
  static ProdVec zeros(const FieldPtr& F, size_t n) { return constant(FieldElement::zero(F), n); }

  size_t size() const { return v_.size(); }
  const FieldElement& operator[](size_t i) const { return v_[i]; }
  FieldElement& operator[](size_t i) { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<FieldElement>& data() const { return v_; }
  const FieldPtr& field() const { return v_.front().field(); }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_unit() const {
    for (const auto& x : v_)
      if (x.is_zero()) return false;
    return true;
  }
  /// True when every coordinate equals coordinate 0.
  bool is_constant() const {
    for (const auto& x : v_)
      if (x != v_.front()) return false;
    return true;
  }

  ProdVec& operator+=(const ProdVec& o) { return zip(o, [](auto& a, const auto& b) { a += b; }); }
  ProdVec& operator-=(const ProdVec& o) { return zip(o, [](auto& a, const auto& b) { a -= b; }); }
  ProdVec& operator*=(const ProdVec& o) { return zip(o, [](auto& a, const auto& b) { a *= b; }); }
  ProdVec& operator*=(const FieldElement& s) {
    for (auto& x : v_) x *= s;
    return *this;
  }

  friend ProdVec operator+(ProdVec a, const ProdVec& b) { return a += b; }
  friend ProdVec operator-(ProdVec a, const ProdVec& b) { return a -= b; }
  friend ProdVec operator*(ProdVec a, const ProdVec& b) { return a *= b; }
  friend ProdVec operator*(ProdVec a, const FieldElement& s) { return a *= s; }
  friend ProdVec operator*(const FieldElement& s, ProdVec a) { return a *= s; }
  ProdVec operator-() const {
    ProdVec r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
  }

  /// Componentwise inverse. Throws NotInvertible if a coordinate vanishes.
  ProdVec inverse() const {
    ProdVec r = *this;
    for (auto& x : r.v_) {
      if (x.is_zero()) fail(ErrorKind::NotInvertible, "vector has a zero coordinate");
      x = x.inverse();
    }
    return r;
  }

  bool operator==(const ProdVec& o) const { return v_ == o.v_; }
  bool operator!=(const ProdVec& o) const { return !(*this == o); }

 private:
  template <class F>
  ProdVec& zip(const ProdVec& o, F op) {
    if (o.size() != size()) fail(ErrorKind::SpecMismatch, "vector lengths differ");
    for (size_t i = 0; i < v_.size(); ++i) op(v_[i], o.v_[i]);
    return *this;
  }

  std::vector<FieldElement> v_;
};

using VecF = ProdVec<InertiaTag>;
using VecM = ProdVec<EmbeddingTag>;

/// Entry i of the result is v[(i + k) mod f]; k = 1 is phi.
VecF phi_shift(const VecF& v, long k = 1);
/// Product v * phi(v) * ... * phi^{f-1}(v); every coordinate is prod(v).
VecF nm_phi(const VecF& v);
/// Sum v + phi(v) + ... + phi^{f-1}(v).
VecF tr_phi(const VecF& v);

/// Nonzero gamma with alpha * gamma = beta * phi(gamma), normalised by
/// gamma_0 = 1. Exists iff Nm(alpha) = Nm(beta); solutions then form the line
/// E * gamma. Both inputs must be units.
std::optional<VecF> solve_twisted(const VecF& alpha, const VecF& beta);

/// Image of v under E^{S_L0} -> E^{S_L}: entry f*i + j is v_j.
VecM tensor_e(const VecF& v, int e);

/// Subset of {0, ..., n-1}.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(size_t n) : bits_(n, false) {}
  IndexSet(size_t n, const std::vector<size_t>& members);
  static IndexSet all(size_t n) {
    IndexSet s(n);
    s.bits_.assign(n, true);
    return s;
  }

  size_t universe() const { return bits_.size(); }
  bool contains(size_t i) const { return bits_.at(i); }
  void insert(size_t i) { bits_.at(i) = true; }
  void erase(size_t i) { bits_.at(i) = false; }
  size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<size_t> elements() const;

  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator|(const IndexSet& o) const;
  IndexSet complement() const;
  bool operator==(const IndexSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const IndexSet& o) const { return bits_ != o.bits_; }

 private:
  std::vector<bool> bits_;
};

/// J_x = {i : x_i != 0}.
IndexSet support(const VecM& x);
/// Idempotent f_J: 1 on J, 0 elsewhere.
VecM idempotent(const IndexSet& J, const FieldPtr& F);

/// 2x2 matrix over E, rows (a b) and (c d).
struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 identity(const FieldPtr& F);
  static Mat2 scalar(const FieldElement& s);
  static Mat2 diag(const FieldElement& x, const FieldElement& y);

  FieldElement det() const { return a * d - b * c; }
  FieldElement trace() const { return a + d; }
  Mat2 inverse() const;
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  bool is_diagonal() const { return b.is_zero() && c.is_zero(); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const FieldElement& s, const Mat2& x);
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
};

/// 2x2 matrix with entries in a product ring.
template <class Tag>
struct Mat2V {
  ProdVec<Tag> a, b, c, d;

  size_t size() const { return a.size(); }
  const FieldPtr& field() const { return a.field(); }

  Mat2 at(size_t i) const { return {a[i], b[i], c[i], d[i]}; }
  void set(size_t i, const Mat2& m) {
    a[i] = m.a;
    b[i] = m.b;
    c[i] = m.c;
    d[i] = m.d;
  }

  static Mat2V from_coords(const std::vector<Mat2>& ms) {
    std::vector<FieldElement> a, b, c, d;
    for (const auto& m : ms) {
      a.push_back(m.a);
      b.push_back(m.b);
      c.push_back(m.c);
      d.push_back(m.d);
    }
    return {ProdVec<Tag>(a), ProdVec<Tag>(b), ProdVec<Tag>(c), ProdVec<Tag>(d)};
  }
  static Mat2V constant(const Mat2& m, size_t n) { return from_coords(std::vector<Mat2>(n, m)); }
  static Mat2V identity(const FieldPtr& F, size_t n) { return constant(Mat2::identity(F), n); }
  static Mat2V zero(const FieldPtr& F, size_t n) {
    auto z = ProdVec<Tag>::zeros(F, n);
    return {z, z, z, z};
  }
  static Mat2V diag(const ProdVec<Tag>& x, const ProdVec<Tag>& y) {
    auto z = ProdVec<Tag>::zeros(x.field(), x.size());
    return {x, z, z, y};
  }

  ProdVec<Tag> det() const { return a * d - b * c; }
  Mat2V inverse() const {
    ProdVec<Tag> inv = det().inverse();
    return {d * inv, -b * inv, -c * inv, a * inv};
  }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

  friend Mat2V operator*(const Mat2V& x, const Mat2V& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend Mat2V operator+(const Mat2V& x, const Mat2V& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2V operator*(const ProdVec<Tag>& s, const Mat2V& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  friend Mat2V operator*(const FieldElement& s, const Mat2V& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  bool operator==(const Mat2V& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2V& o) const { return !(*this == o); }
};

using Mat2F = Mat2V<InertiaTag>;
using Mat2M = Mat2V<EmbeddingTag>;

Mat2F phi_shift(const Mat2F& m, long k = 1);
/// M * phi(M) * ... * phi^{f-1}(M).
Mat2F nm_phi(const Mat2F& m);
Mat2M tensor_e(const Mat2F& m, int e);

}  // namespace phimod
