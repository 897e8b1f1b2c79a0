#include "phimod/phimodule.hpp"

#include <stdexcept>

namespace phimod {

std::string_view to_string(FClass c) {
  switch (c) {
    case FClass::SplitSemisimple: return "split_semisimple";
    case FClass::FScalar: return "f_scalar";
    case FClass::NonFSemisimple: return "non_f_semisimple";
  }
  return "";
}

std::string_view to_string(CanonicalTag t) {
  switch (t) {
    case CanonicalTag::SplitDiag: return "split_diag";
    case CanonicalTag::FScalar: return "f_scalar";
    case CanonicalTag::NonFSemisimple: return "non_f_semisimple";
  }
  return "";
}

ValidationReport validate_phi_module(const PhiModule& D) {
  ValidationReport rep;
  const size_t f = static_cast<size_t>(D.ext.f);
  if (D.frob.size() != f || D.mono.size() != f) {
    rep.add("Frobenius and monodromy must have f = " + std::to_string(f) + " coordinates");
    return rep;
  }
  if (!D.frob.det().is_unit()) rep.add("Frobenius matrix is not invertible");
  if (!(D.mono * D.mono).is_zero()) rep.add("N is not nilpotent");
  FieldElement p(D.field, D.ext.p);
  if (D.mono * D.frob != p * (D.frob * phi_shift(D.mono)))
    rep.add("N [phi] != p [phi] phi(N)");
  return rep;
}

Mat2F change_basis(const Mat2F& frob, const Mat2F& P) {
  return P * frob * phi_shift(P).inverse();
}

Mat2F change_basis_linear(const Mat2F& N, const Mat2F& P) { return P * N * P.inverse(); }

Mat2 frobenius_power(const Mat2F& frob) { return nm_phi(frob).at(0); }

FClass f_class(const Mat2F& frob, const std::vector<FieldElement>& witnesses) {
  Mat2 Q = frobenius_power(frob);
  if (Q.is_scalar()) return FClass::FScalar;
  FieldElement disc = Q.trace() * Q.trace() - FieldElement(Q.a.field(), 4) * Q.det();
  if (disc.is_zero()) return FClass::NonFSemisimple;
  nth_root(disc, 2, witnesses);
  return FClass::SplitSemisimple;
}

Mat2F canonical_matrix(CanonicalTag tag, const FieldElement& alpha, const FieldElement& delta,
                       size_t f) {
  const FieldPtr& F = alpha.field();
  switch (tag) {
    case CanonicalTag::SplitDiag:
      return Mat2F::constant(Mat2::diag(alpha, delta), f);
    case CanonicalTag::FScalar:
      return Mat2F::constant(Mat2::scalar(alpha), f);
    case CanonicalTag::NonFSemisimple:
      return Mat2F::constant({alpha, FieldElement::zero(F), FieldElement::one(F), alpha}, f);
  }
  return {};
}

Mat2F CanonicalForm::matrix(size_t f) const { return canonical_matrix(tag, alpha, delta, f); }

std::optional<CanonicalForm> recognise_canonical(const Mat2F& M) {
  if (!M.a.is_constant() || !M.d.is_constant() || !M.b.is_zero() || !M.c.is_constant())
    return std::nullopt;
  const size_t f = M.size();
  FieldElement a = M.a[0], d = M.d[0], c = M.c[0];
  Mat2F I = Mat2F::identity(M.field(), f);
  if (c.is_zero()) {
    if (a == d) return CanonicalForm{CanonicalTag::FScalar, a, a, I, {}};
    if (a.pow(static_cast<long>(f)) != d.pow(static_cast<long>(f)))
      return CanonicalForm{CanonicalTag::SplitDiag, a, d, I, {}};
    return std::nullopt;
  }
  if (c.is_one() && a == d) return CanonicalForm{CanonicalTag::NonFSemisimple, a, a, I, {}};
  return std::nullopt;
}

namespace {

struct Vec2 {
  FieldElement x, y;
};

// Kernel vector of Q - lambda, scaled so its first nonzero entry is 1.
Vec2 eigenvector(const Mat2& Q, const FieldElement& lambda) {
  const FieldPtr& F = lambda.field();
  FieldElement r1u = Q.a - lambda, r1v = Q.b, r2u = Q.c, r2v = Q.d - lambda;
  Vec2 v;
  if (!r1u.is_zero() || !r1v.is_zero())
    v = {r1v, -r1u};
  else if (!r2u.is_zero() || !r2v.is_zero())
    v = {r2v, -r2u};
  else
    v = {FieldElement::one(F), FieldElement::zero(F)};
  FieldElement lead = v.x.is_zero() ? v.y : v.x;
  FieldElement inv = lead.inverse();
  return {v.x * inv, v.y * inv};
}

// B with B_0 = B0 and B_i = M_i B_{i+1}; then B^{-1} M phi(B) is the identity
// away from coordinate 0 and B0^{-1} Nm(M)_0 B0 at coordinate 0.
Mat2F propagate(const Mat2F& M, const Mat2& B0) {
  const size_t f = M.size();
  std::vector<Mat2> B(f);
  B[0] = B0;
  Mat2 next = B0;
  for (size_t i = f; i-- > 1;) {
    B[i] = M.at(i) * next;
    next = B[i];
  }
  return Mat2F::from_coords(B);
}

Mat2 columns(const Vec2& u, const Vec2& w) { return {u.x, w.x, u.y, w.y}; }

std::vector<FieldElement> root_candidates(const Mat2F& frob,
                                          const std::vector<FieldElement>& witnesses) {
  std::vector<FieldElement> out = witnesses;
  for (const auto& v : {frob.a, frob.d})
    for (const auto& x : v) out.push_back(x);
  return out;
}

}  // namespace

Mat2F clear_scalar_lower_left(const Mat2F& T) {
  const size_t f = T.size();
  const FieldPtr& F = T.field();
  if (!T.b.is_zero() || T.a != T.d) fail(ErrorKind::InvalidInput, "expected ((a,0),(zeta,a))");
  for (size_t i = 1; i < f; ++i)
    if (!T.a[i].is_one()) fail(ErrorKind::InvalidInput, "expected a = (alpha, 1, ..., 1)");
  const VecF& zeta = T.c;
  std::vector<FieldElement> z(f, FieldElement::one(F));
  if (f > 1) {
    z[f - 1] = FieldElement::one(F) - zeta[f - 1];
    for (size_t i = f - 1; i-- > 1;) z[i] = z[i + 1] - zeta[i];
  }
  VecF one = VecF::ones(F, f), zero = VecF::zeros(F, f);
  return {one, zero, VecF(z), one};
}

VecF jordan_offdiag_vector(const VecF& gamma, const FieldElement& alpha) {
  const size_t f = gamma.size();
  const FieldPtr& F = alpha.field();
  FieldElement T = tr_phi(gamma)[0], partial = FieldElement::zero(F);
  FieldElement inv = alpha.inverse();
  std::vector<FieldElement> z;
  for (size_t i = 0; i < f; ++i) {
    z.push_back((FieldElement(F, static_cast<long>(i)) * T -
                 FieldElement(F, static_cast<long>(f)) * partial) *
                inv);
    partial += gamma[i];
  }
  return VecF(std::move(z));
}

CanonicalForm canonicalize(const Mat2F& frob, const std::vector<FieldElement>& witnesses) {
  const size_t f = frob.size();
  const long lf = static_cast<long>(f);
  const FieldPtr& F = frob.field();
  if (!frob.det().is_unit()) fail(ErrorKind::NotInvertible, "Frobenius matrix is not invertible");
  const auto hints = root_candidates(frob, witnesses);
  Mat2 Q = frobenius_power(frob);
  VecF ones = VecF::ones(F, f);

  CanonicalForm out;
  Mat2F P;
  if (Q.is_scalar()) {
    P = propagate(frob, Mat2::identity(F)).inverse();
    Mat2F T = change_basis(frob, P);
    if (!T.c.is_zero()) {
      P = clear_scalar_lower_left(T) * P;
      T = change_basis(frob, P);
    }
    auto root = nth_root(Q.a, lf, hints);
    VecF s = *solve_twisted(T.a, root.root * ones);
    P = Mat2F::diag(s, s) * P;
    out = {CanonicalTag::FScalar, root.root, root.root, {}, {root.source}};
  } else {
    FieldElement tr = Q.trace();
    FieldElement disc = tr * tr - FieldElement(F, 4) * Q.det();
    FieldElement half(F, Rational(1, 2));
    if (disc.is_zero()) {
      FieldElement lambda = tr * half;
      Vec2 w = eigenvector(Q, lambda);
      Vec2 u = w.y.is_zero() ? Vec2{FieldElement::zero(F), FieldElement::one(F)}
                             : Vec2{FieldElement::one(F), FieldElement::zero(F)};
      P = propagate(frob, columns(u, w)).inverse();
      Mat2F T = change_basis(frob, P);
      auto root = nth_root(lambda, lf, hints);
      VecF s = *solve_twisted(T.a, root.root * ones);
      P = Mat2F::diag(s, s) * P;
      T = change_basis(frob, P);
      FieldElement trace_gamma = tr_phi(T.c)[0];
      VecF z = jordan_offdiag_vector(T.c, root.root);
      Mat2F Mstar{FieldElement(F, lf) * ones, VecF::zeros(F, f), z, trace_gamma * ones};
      P = Mstar.inverse() * P;
      out = {CanonicalTag::NonFSemisimple, root.root, root.root, {}, {root.source}};
    } else {
      auto s = nth_root(disc, 2, witnesses);
      FieldElement lambda = (tr + s.root) * half, mu = (tr - s.root) * half;
      if (Q.b.is_zero()) {
        lambda = Q.a;
        mu = Q.d;
      }
      P = propagate(frob, columns(eigenvector(Q, lambda), eigenvector(Q, mu))).inverse();
      Mat2F T = change_basis(frob, P);
      auto ra = nth_root(lambda, lf, hints);
      auto rd = nth_root(mu, lf, hints);
      VecF s1 = *solve_twisted(T.a, ra.root * ones);
      VecF s2 = *solve_twisted(T.d, rd.root * ones);
      P = Mat2F::diag(s1, s2) * P;
      out = {CanonicalTag::SplitDiag, ra.root, rd.root, {}, {s.source, ra.source, rd.source}};
    }
  }
  out.basechange = P;
  if (change_basis(frob, P) != out.matrix(f))
    throw std::logic_error("canonicalize: base change does not reach the standard form");
  return out;
}

Mat2F MonodromyFamily::member(const FieldElement& n) const {
  const FieldPtr& F = n.field();
  if (shape == MonodromyShape::Zero) fail(ErrorKind::MonodromyMismatch, "only N = 0 is allowed");
  Mat2F N = Mat2F::zero(F, generator->size());
  (shape == MonodromyShape::Lower ? N.c : N.b) = *generator * n;
  return N;
}

MonodromyFamily monodromy_candidates(CanonicalTag tag, const FieldElement& alpha,
                                     const FieldElement& delta, long p, size_t f) {
  MonodromyFamily fam;
  if (tag != CanonicalTag::SplitDiag) return fam;
  const FieldPtr& F = alpha.field();
  const long lf = static_cast<long>(f);
  FieldElement pf = FieldElement(F, p).pow(lf);
  auto geometric = [&](const FieldElement& ratio) {
    std::vector<FieldElement> g{FieldElement::one(F)};
    for (size_t i = 1; i < f; ++i) g.push_back(g.back() * ratio);
    return VecF(std::move(g));
  };
  if (alpha.pow(lf) == pf * delta.pow(lf)) {
    fam.shape = MonodromyShape::Lower;
    fam.generator = geometric(alpha / (FieldElement(F, p) * delta));
  } else if (delta.pow(lf) == pf * alpha.pow(lf)) {
    fam.shape = MonodromyShape::Upper;
    fam.generator = geometric(delta / (FieldElement(F, p) * alpha));
  }
  return fam;
}

bool is_zero_monodromy(const Mat2F& N) { return N.is_zero(); }

NormalizedMonodromy normalize_monodromy(const FieldElement& alpha, const FieldElement& delta,
                                        const Mat2F& N, long p) {
  const size_t f = N.size();
  const FieldPtr& F = alpha.field();
  Mat2F frob = Mat2F::constant(Mat2::diag(alpha, delta), f);
  Mat2F P = Mat2F::identity(F, f);
  Mat2F mono = N;
  if (N.is_zero()) fail(ErrorKind::MonodromyMismatch, "N = 0 needs no normalisation");
  if (N.a.is_zero() && N.c.is_zero() && N.d.is_zero()) {
    VecF one = VecF::ones(F, f), zero = VecF::zeros(F, f);
    Mat2F swap{zero, one, one, zero};
    P = swap;
    frob = change_basis(frob, swap);
    mono = change_basis_linear(N, swap);
  }
  if (!mono.a.is_zero() || !mono.b.is_zero() || !mono.d.is_zero() || !mono.c.is_unit())
    fail(ErrorKind::MonodromyMismatch, "N is not a unit multiple of an off-diagonal corner");
  Mat2F scale = Mat2F::diag(VecF::ones(F, f), mono.c.inverse());
  P = scale * P;
  Mat2F frob_n = change_basis(frob, scale);
  Mat2F mono_n = change_basis_linear(mono, scale);
  FieldElement a = frob_n.a[0], d = frob_n.d[0];
  if (!frob_n.a.is_constant() || !frob_n.d.is_constant() || a != FieldElement(F, p) * d)
    fail(ErrorKind::MonodromyMismatch, "N is incompatible with diag(alpha, delta)");
  return {P, a, d, frob_n, mono_n};
}

}  // namespace phimod
