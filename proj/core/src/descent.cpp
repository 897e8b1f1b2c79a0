#include "phimod/descent.hpp"

namespace phimod {

std::string_view to_string(ActionVariant v) {
  switch (v) {
    case ActionVariant::DiagChars: return "diag_chars";
    case ActionVariant::ScalarChar: return "scalar_char";
    case ActionVariant::Homomorphism: return "homomorphism";
    case ActionVariant::Explicit: return "explicit";
  }
  return "";
}

GaloisAction GaloisAction::diag_chars(std::vector<FieldElement> chi,
                                      std::vector<FieldElement> psi) {
  GaloisAction a;
  a.variant = ActionVariant::DiagChars;
  a.chi = std::move(chi);
  a.psi = std::move(psi);
  return a;
}

GaloisAction GaloisAction::scalar_char(std::vector<FieldElement> chi) {
  GaloisAction a;
  a.variant = ActionVariant::ScalarChar;
  a.psi = chi;
  a.chi = std::move(chi);
  return a;
}

GaloisAction GaloisAction::homomorphism(std::vector<Mat2> lambda) {
  GaloisAction a;
  a.variant = ActionVariant::Homomorphism;
  a.lambda = std::move(lambda);
  return a;
}

GaloisAction GaloisAction::explicit_cocycle(std::vector<Mat2F> mats) {
  GaloisAction a;
  a.variant = ActionVariant::Explicit;
  a.cocycle = std::move(mats);
  return a;
}

GaloisAction GaloisAction::trivial(const FieldPtr& F, size_t order) {
  return diag_chars(std::vector<FieldElement>(order, FieldElement::one(F)),
                    std::vector<FieldElement>(order, FieldElement::one(F)));
}

std::vector<Mat2F> action_matrices(const GaloisAction& act, size_t f) {
  std::vector<Mat2F> out;
  switch (act.variant) {
    case ActionVariant::DiagChars:
    case ActionVariant::ScalarChar:
      if (act.chi.size() != act.psi.size())
        fail(ErrorKind::InvalidInput, "chi and psi must have one value per element");
      for (size_t g = 0; g < act.chi.size(); ++g)
        out.push_back(Mat2F::constant(Mat2::diag(act.chi[g], act.psi[g]), f));
      break;
    case ActionVariant::Homomorphism:
      for (const auto& l : act.lambda) out.push_back(Mat2F::constant(l, f));
      break;
    case ActionVariant::Explicit:
      out = act.cocycle;
      break;
  }
  return out;
}

ValidationReport validate_action(const PhiModule& D, const GaloisGroup& G,
                                 const GaloisAction& act) {
  ValidationReport rep;
  const size_t f = static_cast<size_t>(D.ext.f);
  std::vector<Mat2F> M;
  try {
    M = action_matrices(act, f);
  } catch (const Error& err) {
    rep.add(err.what());
    return rep;
  }
  if (M.size() != G.order()) {
    rep.add("action must give one matrix per group element");
    return rep;
  }
  for (size_t g = 0; g < M.size(); ++g) {
    if (M[g].size() != f) {
      rep.add("[g] must have f coordinates");
      return rep;
    }
    if (!M[g].det().is_unit()) rep.add("[" + G.names[g] + "] is not invertible");
  }
  if (!rep.ok) return rep;

  auto cls = recognise_canonical(D.frob);
  bool nonzero_n = !D.mono.is_zero();
  if (cls && cls->tag != CanonicalTag::FScalar) {
    bool diag_only = true;
    for (const auto& m : M) diag_only = diag_only && m.b.is_zero() && m.c.is_zero();
    if (!diag_only) rep.add("non-diagonal [g] is only possible when phi^f is scalar");
    if ((nonzero_n || cls->tag == CanonicalTag::NonFSemisimple) &&
        act.variant == ActionVariant::DiagChars && act.chi != act.psi)
      rep.add("with N != 0 or non-semisimple phi^f the two characters must agree");
  }

  Mat2F I = Mat2F::identity(D.field, f);
  if (M[0] != I) rep.add("[identity] is not the identity matrix");
  const int r = static_cast<int>(G.order());
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (M[G.compose(a, b)] != M[a] * act_mat(G, a, M[b])) {
        rep.add("cocycle rule fails for (" + G.names[a] + ", " + G.names[b] + ")");
        a = b = r;
      }
  for (int g = 0; g < r; ++g) {
    if (D.frob * phi_shift(M[g]) != M[g] * act_mat(G, g, D.frob))
      rep.add("[g] does not commute with Frobenius for g = " + G.names[g]);
    if (D.mono * M[g] != M[g] * act_mat(G, g, D.mono))
      rep.add("[g] does not commute with N for g = " + G.names[g]);
  }
  return rep;
}

GaloisAction recognise_action(const std::vector<Mat2F>& mats) {
  bool constant = true, diagonal = true, scalar = true;
  for (const auto& m : mats) {
    constant = constant && m.a.is_constant() && m.b.is_constant() && m.c.is_constant() &&
               m.d.is_constant();
    diagonal = diagonal && m.b.is_zero() && m.c.is_zero();
    scalar = scalar && m.a == m.d;
  }
  if (!constant) return GaloisAction::explicit_cocycle(mats);
  std::vector<FieldElement> chi, psi;
  std::vector<Mat2> lambda;
  for (const auto& m : mats) {
    chi.push_back(m.a[0]);
    psi.push_back(m.d[0]);
    lambda.push_back(m.at(0));
  }
  if (!diagonal) return GaloisAction::homomorphism(std::move(lambda));
  if (scalar) return GaloisAction::scalar_char(std::move(chi));
  return GaloisAction::diag_chars(std::move(chi), std::move(psi));
}

namespace {

bool union_of_orbits(const IndexSet& S, const std::vector<std::vector<size_t>>& orbs) {
  for (const auto& o : orbs) {
    bool first = S.contains(o.front());
    for (size_t i : o)
      if (S.contains(i) != first) return false;
  }
  return true;
}

}  // namespace

FiltrationData build_stable_filtration(const ExtensionSpec& ext, const GaloisGroup& G,
                                       const GaloisAction& act, const WeightData& w,
                                       const std::vector<Seed>& seeds) {
  const int m = ext.m();
  if (w.m() != static_cast<size_t>(m)) fail(ErrorKind::InvalidInput, "weights must have length m");
  auto orbs = orbits(G, m);
  for (size_t r = 0; r < w.steps.size(); ++r)
    if (!union_of_orbits(w.steps[r], orbs))
      fail(ErrorKind::OrbitMismatch,
           "step " + std::to_string(r) + " (k >= " + std::to_string(w.jumps[r]) +
               ") is not a union of G-orbits");
  for (const auto& o : orbs)
    for (size_t i : o)
      if (w.lower[i] != w.lower[o.front()])
        fail(ErrorKind::OrbitMismatch, "lower jumps are not constant on G-orbits");
  if (seeds.size() != orbs.size())
    fail(ErrorKind::BadSeed, "expected " + std::to_string(orbs.size()) + " seeds, one per orbit");
  for (const auto& s : seeds)
    if (s.first.is_zero() && s.second.is_zero()) fail(ErrorKind::BadSeed, "seed (0, 0)");

  auto M = action_matrices(act, static_cast<size_t>(ext.f));
  if (M.size() != G.order()) fail(ErrorKind::InvalidInput, "action does not match the group");
  const FieldPtr& F = seeds.front().first.field();
  std::vector<FieldElement> x(m, FieldElement::zero(F)), y = x;
  for (size_t j = 0; j < orbs.size(); ++j) {
    size_t rep = orbs[j].front();
    for (size_t h = 0; h < G.order(); ++h) {
      Mat2 inv = M[h].at(rep % static_cast<size_t>(ext.f)).inverse();
      size_t l = static_cast<size_t>(G.pi[h][rep]);
      x[l] = inv.a * seeds[j].first + inv.b * seeds[j].second;
      y[l] = inv.c * seeds[j].first + inv.d * seeds[j].second;
    }
  }
  return {w, VecM(x), VecM(y)};
}

bool check_g_stable(const ExtensionSpec& ext, const GaloisGroup& G,
                    const std::vector<Mat2F>& mats, const FiltrationData& F) {
  const size_t m = F.weights.m();
  const size_t f = static_cast<size_t>(ext.f);
  for (size_t g = 0; g < G.order(); ++g) {
    for (size_t l = 0; l < m; ++l) {
      size_t j = static_cast<size_t>(G.pi[g][l]);
      if (F.weights.lower[j] != F.weights.lower[l]) return false;
      bool in_some_step = false;
      for (const auto& S : F.weights.steps) {
        if (!S.contains(j)) continue;
        if (!S.contains(l)) return false;
        in_some_step = true;
      }
      // Every step uses the same line, so one comparison covers them all.
      if (!in_some_step) continue;
      Mat2 A = mats[g].at(l % f);
      FieldElement u = A.a * F.x[j] + A.b * F.y[j];
      FieldElement v = A.c * F.x[j] + A.d * F.y[j];
      if (!proportional(u, v, F.x[l], F.y[l])) return false;
    }
  }
  return true;
}

}  // namespace phimod
