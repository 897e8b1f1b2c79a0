#include "phimod/module.hpp"

namespace phimod {

ValidationReport validate_module(const FilteredModule& D) {
  ValidationReport rep = validate_phi_module(D.phi);
  auto merge = [&rep](const ValidationReport& r) {
    for (const auto& p : r.problems) rep.add(p);
  };
  merge(validate_group(D.ext(), D.group));
  if (!rep.ok) return rep;
  merge(validate_action(D.phi, D.group, D.action));
  try {
    if (D.fil.weights.m() != static_cast<size_t>(D.ext().m()))
      rep.add("weights must have length m = e f");
    else
      validate_filtration(D.fil);
  } catch (const Error& err) {
    rep.add(err.what());
  }
  if (rep.ok && !check_g_stable(D.ext(), D.group, action_matrices(D.action, D.ext().f), D.fil))
    rep.add("filtration is not stable under G");
  return rep;
}

FilteredModule apply_basechange(const FilteredModule& D, const Mat2F& P) {
  FilteredModule out = D;
  out.phi.frob = change_basis(D.phi.frob, P);
  out.phi.mono = change_basis_linear(D.phi.mono, P);
  std::vector<Mat2F> mats = action_matrices(D.action, static_cast<size_t>(D.ext().f));
  for (size_t g = 0; g < mats.size(); ++g)
    mats[g] = P * mats[g] * act_mat(D.group, static_cast<int>(g), P).inverse();
  out.action = recognise_action(mats);
  out.fil = transform_filtration(D.fil, tensor_e(P, D.ext().e));
  return out;
}

std::optional<StandardShape> standard_shape(const PhiModule& D) {
  const Mat2F& M = D.frob;
  if (!M.b.is_zero()) return std::nullopt;
  const FieldPtr& F = D.field;
  const size_t f = M.size();
  StandardShape s{CanonicalTag::SplitDiag, M.a, M.d, false};
  if (M.c.is_zero()) {
    if (M.a.is_constant() && M.a == M.d) {
      s.tag = CanonicalTag::FScalar;
    } else if (nm_phi(M.a) == nm_phi(M.d)) {
      return std::nullopt;
    }
  } else if (M.c == VecF::ones(F, f) && M.a.is_constant() && M.a == M.d) {
    s.tag = CanonicalTag::NonFSemisimple;
  } else {
    return std::nullopt;
  }
  if (!D.mono.is_zero()) {
    Mat2F target = Mat2F::zero(F, f);
    target.c = VecF::ones(F, f);
    if (s.tag != CanonicalTag::SplitDiag || D.mono != target ||
        M.a != FieldElement(F, D.ext.p) * M.d)
      return std::nullopt;
    s.monodromy = true;
  }
  return s;
}

NormalizedModule normalize(const FilteredModule& D) {
  const size_t f = static_cast<size_t>(D.ext().f);
  if (auto s = standard_shape(D.phi)) return {D, *s, Mat2F::identity(D.field(), f), {}};

  CanonicalForm form = canonicalize(D.phi.frob, D.hints);
  FilteredModule out = apply_basechange(D, form.basechange);
  Mat2F P = form.basechange;
  if (!out.phi.mono.is_zero()) {
    if (form.tag != CanonicalTag::SplitDiag)
      fail(ErrorKind::MonodromyMismatch, "nonzero N needs distinct eigenvalues of phi^f");
    auto nm = normalize_monodromy(form.alpha, form.delta, out.phi.mono, D.ext().p);
    out = apply_basechange(out, nm.basechange);
    P = nm.basechange * P;
  }
  auto s = standard_shape(out.phi);
  if (!s) fail(ErrorKind::NotCanonicalized, "normalisation did not reach a standard shape");
  return {out, *s, P, form.roots};
}

}  // namespace phimod
