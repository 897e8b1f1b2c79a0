#include "phimod/isoclass.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "phimod/linalg.hpp"

namespace phimod {

std::string_view to_string(IsoBranch b) {
  switch (b) {
    case IsoBranch::Direct: return "direct";
    case IsoBranch::Swapped: return "swapped";
    case IsoBranch::Monodromy: return "monodromy";
    case IsoBranch::FScalar: return "f_scalar";
    case IsoBranch::NonFSemisimple: return "non_f_semisimple";
    case IsoBranch::ClassMismatch: return "class_mismatch";
    case IsoBranch::LinearAlgebra: return "linear_algebra";
  }
  return "";
}

namespace {

void check_preconditions(const FilteredModule& A, const FilteredModule& B) {
  if (!same_field(A.field(), B.field()))
    fail(ErrorKind::PreconditionMismatch, "modules have different coefficient fields");
  if (!(A.ext() == B.ext()) || !(A.group == B.group))
    fail(ErrorKind::PreconditionMismatch, "modules live over different extensions");
  if (!(A.fil.weights == B.fil.weights))
    fail(ErrorKind::PreconditionMismatch, "modules have different labelled weights");
}

// r != 0 with r u_i = v_i on the given coordinates, if any.
std::optional<FieldElement> common_ratio(const std::vector<FieldElement>& u,
                                         const std::vector<FieldElement>& v,
                                         const FieldPtr& F) {
  std::optional<FieldElement> r;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return std::nullopt;
    if (u[i].is_zero()) continue;
    FieldElement q = v[i] / u[i];
    if (r && *r != q) return std::nullopt;
    r = q;
  }
  return r ? *r : FieldElement::one(F);
}

VecF geometric(const FieldElement& ratio, size_t f) {
  std::vector<FieldElement> g{FieldElement::one(ratio.field())};
  for (size_t i = 1; i < f; ++i) g.push_back(g.back() * ratio);
  return VecF(std::move(g));
}

const FieldElement& entry(const Mat2& M, int r, int s) {
  return r == 0 ? (s == 0 ? M.a : M.b) : (s == 0 ? M.c : M.d);
}

// Finds a point of span(B) where every quadratic form det(Q_j) is nonzero,
// or nullopt if one of them vanishes identically on the span.
std::optional<Mat2F> invertible_point(const std::vector<Mat2F>& basis, const FieldPtr& F) {
  if (basis.empty()) return std::nullopt;
  const size_t f = basis.front().size(), k = basis.size();
  auto det_at = [&](const std::vector<long>& t, size_t j) {
    Mat2 acc = {FieldElement::zero(F), FieldElement::zero(F), FieldElement::zero(F),
                FieldElement::zero(F)};
    for (size_t l = 0; l < k; ++l)
      if (t[l] != 0) acc = acc + FieldElement(F, t[l]) * basis[l].at(j);
    return acc.det();
  };
  for (size_t j = 0; j < f; ++j) {
    // det(Q_j) restricted to the span is zero iff all its coefficients vanish.
    bool nonzero = false;
    for (size_t l = 0; l < k && !nonzero; ++l) {
      std::vector<long> t(k, 0);
      t[l] = 1;
      nonzero = !det_at(t, j).is_zero();
      for (size_t m = l + 1; m < k && !nonzero; ++m) {
        std::vector<long> s(k, 0), tl(k, 0), tm(k, 0);
        s[l] = s[m] = 1;
        tl[l] = 1;
        tm[m] = 1;
        nonzero = !(det_at(s, j) - det_at(tl, j) - det_at(tm, j)).is_zero();
      }
    }
    if (!nonzero) return std::nullopt;
  }
  // A product of nonzero polynomials of degree 2f misses most integer points.
  std::mt19937 rng(20240531u);
  for (long range = 2;; range *= 2) {
    std::uniform_int_distribution<long> dist(-range, range);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<long> t(k);
      for (auto& x : t) x = dist(rng);
      if (attempt == 0 && range == 2) std::fill(t.begin(), t.end(), 0), t[0] = 1;
      bool good = true;
      for (size_t j = 0; j < f && good; ++j) good = !det_at(t, j).is_zero();
      if (!good) continue;
      Mat2F Q = Mat2F::zero(F, f);
      for (size_t l = 0; l < k; ++l)
        if (t[l] != 0) Q = Q + FieldElement(F, t[l]) * basis[l];
      return Q;
    }
  }
}

struct Normalised {
  NormalizedModule A, B;
};

IsoVerdict finish(const FilteredModule& A, const FilteredModule& B, const Normalised& n,
                  IsoBranch branch, const Mat2F& Qn) {
  Mat2F Q = n.B.basechange.inverse() * Qn * n.A.basechange;
  if (!verify_isomorphism(n.A.module, n.B.module, Qn) || !verify_isomorphism(A, B, Q))
    return {false, branch, std::nullopt, "candidate intertwiner failed verification"};
  return {true, branch, Q, ""};
}

IsoVerdict decide_split(const FilteredModule& A, const FilteredModule& B, const Normalised& n) {
  const FilteredModule &a = n.A.module, &b = n.B.module;
  const StandardShape &sa = n.A.shape, &sb = n.B.shape;
  const FieldPtr& F = A.field();
  const size_t f = static_cast<size_t>(A.ext().f);
  const int e = A.ext().e;
  const auto pos = a.fil.weights.positive.elements();
  auto ratio_for = [&](const VecM& c1, const VecM& c2, bool swapped) {
    std::vector<FieldElement> u, v;
    for (size_t i : pos) {
      if (!swapped) {
        u.push_back(c1[i] * a.fil.x[i] * b.fil.y[i]);
        v.push_back(c2[i] * a.fil.y[i] * b.fil.x[i]);
      } else {
        u.push_back(c1[i] * a.fil.y[i] * b.fil.y[i]);
        v.push_back(c2[i] * a.fil.x[i] * b.fil.x[i]);
      }
    }
    return common_ratio(u, v, F);
  };
  VecF zero = VecF::zeros(F, f);
  std::string reason = "no diagonal or antidiagonal intertwiner";

  auto a0 = solve_twisted(sa.alpha, sb.alpha);
  auto d0 = solve_twisted(sa.delta, sb.delta);
  if (a0 && d0) {
    if (sa.monodromy) {
      // Q N_1 = N_2 Q pins the ratio of the two diagonal entries.
      VecF r = *d0 * a0->inverse();
      if (!r.is_constant()) return {false, IsoBranch::Monodromy, std::nullopt,
                                    "monodromy fixes incompatible scalings"};
      Mat2F Q = Mat2F::diag(r * *a0, *d0);
      auto ok = ratio_for(tensor_e(Q.a, e), tensor_e(Q.d, e), false);
      if (!ok || !ok->is_one())
        return {false, IsoBranch::Monodromy, std::nullopt, "filtrations do not match"};
      return finish(A, B, n, IsoBranch::Monodromy, Q);
    }
    if (auto r = ratio_for(tensor_e(*a0, e), tensor_e(*d0, e), false)) {
      IsoVerdict v = finish(A, B, n, IsoBranch::Direct, Mat2F::diag(*r * *a0, *d0));
      if (v.isomorphic) return v;
      reason = "diagonal intertwiner is not Galois equivariant";
    }
  }
  if (sa.monodromy) return {false, IsoBranch::Monodromy, std::nullopt, "Frobenius norms differ"};
  auto b0 = solve_twisted(sa.delta, sb.alpha);
  auto c0 = solve_twisted(sa.alpha, sb.delta);
  if (b0 && c0) {
    if (auto r = ratio_for(tensor_e(*b0, e), tensor_e(*c0, e), true)) {
      IsoVerdict v = finish(A, B, n, IsoBranch::Swapped, Mat2F{zero, *r * *b0, *c0, zero});
      if (v.isomorphic) return v;
      reason = "antidiagonal intertwiner is not Galois equivariant";
    }
  }
  return {false, IsoBranch::Direct, std::nullopt, reason};
}

IsoVerdict decide_fscalar(const FilteredModule& A, const FilteredModule& B, const Normalised& n) {
  const FilteredModule &a = n.A.module, &b = n.B.module;
  const FieldPtr& F = A.field();
  const size_t f = static_cast<size_t>(A.ext().f);
  FieldElement mu = n.A.shape.alpha[0] / n.B.shape.alpha[0];
  if (!mu.pow(static_cast<long>(f)).is_one())
    return {false, IsoBranch::FScalar, std::nullopt, "alpha^f differ"};
  // Unknowns r11, r12, r21, r22 of R with Q = R (x) (1, mu, ...).
  std::vector<RowE> rows;
  auto la = action_matrices(a.action, f), lb = action_matrices(b.action, f);
  for (size_t g = 0; g < la.size(); ++g) {
    Mat2 L1 = la[g].at(0), L2 = mu.pow(a.group.n[g]) * lb[g].at(0);
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) {
        RowE row(4, FieldElement::zero(F));
        for (int t = 0; t < 2; ++t) {
          row[2 * r + t] += entry(L1, t, s);
          row[2 * t + s] -= entry(L2, r, t);
        }
        rows.push_back(row);
      }
  }
  for (size_t i : a.fil.weights.positive.elements()) {
    const auto &x1 = a.fil.x[i], &y1 = a.fil.y[i], &x2 = b.fil.x[i], &y2 = b.fil.y[i];
    rows.push_back({x1 * y2, y1 * y2, -(x1 * x2), -(y1 * x2)});
  }
  std::vector<Mat2F> basis;
  VecF v = geometric(mu, f);
  for (const auto& k : kernel_basis(rows, 4, F))
    basis.push_back(Mat2F::constant({k[0], k[1], k[2], k[3]}, f));
  auto R = invertible_point(basis, F);
  if (!R) return {false, IsoBranch::FScalar, std::nullopt, "no invertible R"};
  return finish(A, B, n, IsoBranch::FScalar, v * *R);
}

IsoVerdict decide_nonss(const FilteredModule& A, const FilteredModule& B, const Normalised& n) {
  const FilteredModule &a = n.A.module, &b = n.B.module;
  const FieldPtr& F = A.field();
  const size_t f = static_cast<size_t>(A.ext().f);
  FieldElement a1 = n.A.shape.alpha[0], a2 = n.B.shape.alpha[0];
  FieldElement mu = a1 / a2;
  if (!mu.pow(static_cast<long>(f)).is_one())
    return {false, IsoBranch::NonFSemisimple, std::nullopt, "alpha^f differ"};
  auto ca = action_matrices(a.action, f), cb = action_matrices(b.action, f);
  for (size_t g = 0; g < ca.size(); ++g)
    if (ca[g].a[0] != mu.pow(a.group.n[g]) * cb[g].a[0])
      return {false, IsoBranch::NonFSemisimple, std::nullopt, "chi_1 != mu^n chi_2"};
  // a (x1 y2 - mu y1 x2) - c0 x1 x2 = 0 on the positive coordinates.
  std::vector<RowE> rows;
  for (size_t i : a.fil.weights.positive.elements()) {
    const auto &x1 = a.fil.x[i], &y1 = a.fil.y[i], &x2 = b.fil.x[i], &y2 = b.fil.y[i];
    rows.push_back({x1 * y2 - mu * y1 * x2, -(x1 * x2)});
  }
  std::optional<RowE> pick;
  for (const auto& k : kernel_basis(rows, 2, F))
    if (!k[0].is_zero()) pick = k;
  if (!pick) return {false, IsoBranch::NonFSemisimple, std::nullopt, "filtrations do not match"};
  VecF av = (*pick)[0] * geometric(mu, f);
  VecF cv = derive_jordan_c(a1, a2, (*pick)[0], (*pick)[1], f);
  Mat2F Q{av, VecF::zeros(F, f), cv, mu * av};
  return finish(A, B, n, IsoBranch::NonFSemisimple, Q);
}

}  // namespace

IsoVerdict decide_isomorphic(const FilteredModule& A, const FilteredModule& B) {
  check_preconditions(A, B);
  Normalised n{normalize(A), normalize(B)};
  const StandardShape &sa = n.A.shape, &sb = n.B.shape;
  if (sa.tag != sb.tag || sa.monodromy != sb.monodromy)
    return {false, IsoBranch::ClassMismatch, std::nullopt, "Frobenius or monodromy type differs"};
  switch (sa.tag) {
    case CanonicalTag::SplitDiag: return decide_split(A, B, n);
    case CanonicalTag::FScalar: return decide_fscalar(A, B, n);
    case CanonicalTag::NonFSemisimple: return decide_nonss(A, B, n);
  }
  return {};
}

bool verify_isomorphism(const FilteredModule& A, const FilteredModule& B, const Mat2F& Q) {
  if (Q.size() != static_cast<size_t>(A.ext().f) || !Q.det().is_unit()) return false;
  if (!(A.fil.weights == B.fil.weights)) return false;
  if (B.phi.frob * phi_shift(Q) != Q * A.phi.frob) return false;
  if (Q * A.phi.mono != B.phi.mono * Q) return false;
  const size_t f = Q.size();
  auto ga = action_matrices(A.action, f), gb = action_matrices(B.action, f);
  for (size_t g = 0; g < ga.size(); ++g)
    if (Q * ga[g] != gb[g] * act_mat(A.group, static_cast<int>(g), Q)) return false;
  Mat2M Qe = tensor_e(Q, A.ext().e);
  FiltrationData img = transform_filtration(A.fil, Qe);
  for (size_t i : A.fil.weights.positive.elements())
    if (!proportional(img.x[i], img.y[i], B.fil.x[i], B.fil.y[i])) return false;
  return true;
}

IsoVerdict isomorphic_by_linear_algebra(const FilteredModule& A, const FilteredModule& B) {
  check_preconditions(A, B);
  const FieldPtr& F = A.field();
  const size_t f = static_cast<size_t>(A.ext().f);
  const size_t nv = 4 * f;
  auto var = [f](int r, int s, size_t j) { return static_cast<size_t>(2 * r + s) * f + j % f; };
  std::vector<RowE> rows;
  auto blank = [&]() { return RowE(nv, FieldElement::zero(F)); };
  // left[j] Q_{j+shift} - Q_j right[j] = 0, entrywise.
  auto intertwine = [&](const Mat2F& left, const Mat2F& right, long shift) {
    for (size_t j = 0; j < f; ++j) {
      Mat2 L = left.at(j), R = right.at(j);
      size_t js = static_cast<size_t>(((static_cast<long>(j) + shift) % static_cast<long>(f) +
                                       static_cast<long>(f)) %
                                      static_cast<long>(f));
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          RowE row = blank();
          for (int t = 0; t < 2; ++t) {
            row[var(t, s, js)] += entry(L, r, t);
            row[var(r, t, j)] -= entry(R, t, s);
          }
          rows.push_back(row);
        }
    }
  };
  intertwine(B.phi.frob, A.phi.frob, 1);
  intertwine(B.phi.mono, A.phi.mono, 0);
  auto ga = action_matrices(A.action, f), gb = action_matrices(B.action, f);
  for (size_t g = 0; g < ga.size(); ++g) intertwine(gb[g], ga[g], A.group.n[g]);
  for (size_t i : A.fil.weights.positive.elements()) {
    const auto &x1 = A.fil.x[i], &y1 = A.fil.y[i], &x2 = B.fil.x[i], &y2 = B.fil.y[i];
    RowE row = blank();
    row[var(0, 0, i)] = x1 * y2;
    row[var(0, 1, i)] = y1 * y2;
    row[var(1, 0, i)] = -(x1 * x2);
    row[var(1, 1, i)] = -(y1 * x2);
    rows.push_back(row);
  }
  std::vector<Mat2F> basis;
  for (const auto& k : kernel_basis(rows, nv, F)) {
    auto slice = [&](int r, int s) {
      std::vector<FieldElement> v;
      for (size_t j = 0; j < f; ++j) v.push_back(k[var(r, s, j)]);
      return VecF(v);
    };
    basis.push_back({slice(0, 0), slice(0, 1), slice(1, 0), slice(1, 1)});
  }
  auto Q = invertible_point(basis, F);
  if (!Q) return {false, IsoBranch::LinearAlgebra, std::nullopt, "no invertible solution"};
  if (!verify_isomorphism(A, B, *Q))
    return {false, IsoBranch::LinearAlgebra, std::nullopt, "solution failed verification"};
  return {true, IsoBranch::LinearAlgebra, Q, ""};
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return tag == o.tag && monodromy == o.monodromy && trace_phi_f == o.trace_phi_f &&
         det_phi_f == o.det_phi_f && orbit_weights == o.orbit_weights && line_data == o.line_data;
}

Fingerprint iso_fingerprint(const FilteredModule& D) {
  NormalizedModule n = normalize(D);
  const FiltrationData& fil = n.module.fil;
  Mat2 Q = frobenius_power(D.phi.frob);
  Fingerprint fp{n.shape.tag, n.shape.monodromy, Q.trace(), Q.det(), {}, {}};
  for (const auto& o : orbits(D.group, D.ext().m())) {
    std::vector<long> w;
    for (size_t i : o) w.push_back(fil.weights.k[i]);
    std::sort(w.begin(), w.end());
    fp.orbit_weights.push_back(w);
  }
  const IndexSet& pos = fil.weights.positive;
  if (n.shape.tag == CanonicalTag::FScalar) {
    // Partition of the positive coordinates by the point (x_i : y_i).
    std::vector<bool> used(fil.weights.m(), false);
    for (size_t i : pos.elements()) {
      if (used[i]) continue;
      std::vector<size_t> cls;
      for (size_t j : pos.elements())
        if (!used[j] && proportional(fil.x[i], fil.y[i], fil.x[j], fil.y[j])) {
          used[j] = true;
          cls.push_back(j);
        }
      fp.line_data.push_back(cls);
    }
  } else {
    fp.line_data.push_back((support(fil.x).complement() & pos).elements());
    if (n.shape.tag == CanonicalTag::SplitDiag) {
      fp.line_data.push_back((support(fil.y).complement() & pos).elements());
      std::sort(fp.line_data.begin(), fp.line_data.end());
    }
  }
  return fp;
}

VecF derive_jordan_c(const FieldElement& alpha1, const FieldElement& alpha2,
                     const FieldElement& a0, const FieldElement& c0, size_t f) {
  FieldElement mu = alpha1 / alpha2;
  VecF a = a0 * geometric(mu, f), d = mu * a;
  std::vector<FieldElement> c{c0};
  for (size_t i = 0; i + 1 < f; ++i)
    c.push_back((alpha1 * c[i] + d[i] - a[i + 1]) / alpha2);
  FieldElement wrap = (alpha1 * c[f - 1] + d[f - 1] - a[0]) / alpha2;
  if (wrap != c[0]) throw std::logic_error("derive_jordan_c: recurrence does not close up");
  return VecF(std::move(c));
}

VecF printed_jordan_c(const FieldElement& alpha1, const FieldElement& alpha2,
                      const FieldElement& a0, const FieldElement& c0, size_t f) {
  FieldElement mu = alpha1 / alpha2, inv = mu.inverse();
  std::vector<FieldElement> c{c0};
  for (size_t i = 1; i < f; ++i) {
    FieldElement brace = c0 - a0 * inv + a0;
    for (size_t j = 1; j < i; ++j)
      brace -= inv.pow(static_cast<long>(2 * j + 1)) - inv.pow(static_cast<long>(2 * j));
    c.push_back(mu.pow(static_cast<long>(i)) * brace);
  }
  return VecF(std::move(c));
}

bool rank_one_iso(const RankOneModule& A, const RankOneModule& B) {
  if (A.weights != B.weights) return false;
  FieldElement eps = A.frobenius() / B.frobenius();
  if (!eps.pow(A.ext.f).is_one()) return false;
  for (size_t g = 0; g < A.chi.size(); ++g)
    if (A.chi[g] != eps.pow(A.group.n[g]) * B.chi[g]) return false;
  return true;
}

bool rank_one_iso_oracle(const RankOneModule& A, const RankOneModule& B) {
  if (A.weights != B.weights) return false;
  const size_t f = static_cast<size_t>(A.ext.f);
  const FieldPtr& F = A.field;
  std::vector<RowE> rows;
  // B.frob a_{j+1} = a_j A.frob and a_j chi_A(g) = chi_B(g) a_{j+n(g)}.
  for (size_t j = 0; j < f; ++j) {
    RowE row(f, FieldElement::zero(F));
    row[(j + 1) % f] += B.frobenius();
    row[j] -= A.frobenius();
    rows.push_back(row);
    for (size_t g = 0; g < A.chi.size(); ++g) {
      RowE r2(f, FieldElement::zero(F));
      r2[j] += A.chi[g];
      r2[(j + static_cast<size_t>(((A.group.n[g] % A.ext.f) + A.ext.f) % A.ext.f)) % f] -=
          B.chi[g];
      rows.push_back(r2);
    }
  }
  for (const auto& k : kernel_basis(rows, f, F))
    if (std::all_of(k.begin(), k.end(), [](const FieldElement& x) { return !x.is_zero(); }))
      return true;
  return false;
}

std::pair<FieldElement, FieldElement> family_roots(const FamilyParams& P) {
  long K = 0;
  for (long k : P.weights) K += k;
  FieldElement pik = P.pi.pow(K);
  FieldElement disc = P.a * P.a - FieldElement(P.field, 4) * pik;
  if (disc.is_zero()) fail(ErrorKind::InvalidInput, "alpha^2 = 4*pi^k");
  FieldElement s = nth_root(disc, 2, P.witnesses).root;
  FieldElement half(P.field, Rational(1, 2));
  return {(P.a + s) * half, (P.a - s) * half};
}

FamilyMember family_member(const FamilyParams& P, std::vector<FieldElement> lambda,
                           std::vector<FieldElement> mu) {
  const size_t f = static_cast<size_t>(P.f);
  const int m = P.e * P.f;
  if (lambda.size() + 1 != f || mu.size() + 1 != f)
    fail(ErrorKind::InvalidInput, "lambda and mu need f - 1 entries");
  if (P.weights.size() != static_cast<size_t>(m))
    fail(ErrorKind::InvalidInput, "weights need m = e f entries");
  if (!P.pi.pow(P.e).is_rational() || P.pi.pow(P.e).rational_part() != P.p)
    fail(ErrorKind::InvalidInput, "pi^e must equal p");
  auto [eps0, eps1] = family_roots(P);
  auto build = [&](const std::vector<FieldElement>& l, const FieldElement& eps) {
    std::vector<FieldElement> v = l;
    FieldElement prod = FieldElement::one(P.field);
    for (const auto& x : l) prod *= x;
    v.push_back(eps / prod);
    return VecF(v);
  };
  FilteredModule D;
  Extension ext = trivial_extension(P.p, P.f, P.e);
  D.phi = {P.field, ext.spec, Mat2F::diag(build(lambda, eps0), build(mu, eps1)),
           Mat2F::zero(P.field, f)};
  D.group = ext.group;
  D.action = GaloisAction::trivial(P.field, 1);
  VecM ones = VecM::ones(P.field, static_cast<size_t>(m));
  D.fil = {weight_profile(P.weights), ones, ones};
  return {std::move(lambda), std::move(mu), std::move(D)};
}

std::vector<FamilyMember> enumerate_family(const FamilyParams& P, size_t count) {
  const size_t f = static_cast<size_t>(P.f);
  std::vector<long> units;
  for (long v = 1; units.size() < 64; ++v)
    if (v % P.p != 0) units.push_back(v);
  std::vector<FamilyMember> out;
  std::vector<FieldElement> ones(f - 1, FieldElement::one(P.field));
  if (f == 1) {
    if (count > 0) out.push_back(family_member(P, {}, {}));
    return out;
  }
  // mu runs through index vectors in order of increasing sum.
  for (size_t total = 0; out.size() < count; ++total) {
    std::vector<size_t> idx(f - 1, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t left) {
      if (out.size() >= count) return;
      if (pos + 2 == f) {
        idx[pos] = left;
        std::vector<FieldElement> mu;
        for (size_t i : idx) mu.push_back(FieldElement(P.field, units.at(i)));
        out.push_back(family_member(P, ones, mu));
        return;
      }
      for (size_t v = 0; v <= left; ++v) {
        idx[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

bool family_criterion(const FamilyMember& A, const FamilyMember& B) {
  for (size_t i = 0; i < A.lambda.size(); ++i)
    if (A.lambda[i] * B.mu[i] != B.lambda[i] * A.mu[i]) return false;
  return true;
}

}  // namespace phimod
