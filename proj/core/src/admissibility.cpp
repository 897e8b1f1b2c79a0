#include "phimod/admissibility.hpp"

#include <algorithm>

namespace phimod {

std::string Submodule::label() const {
  switch (kind) {
    case SubKind::Zero: return "0";
    case SubKind::D1: return "D1";
    case SubKind::D2: return "D2";
    case SubKind::Full: return "D";
    case SubKind::DTheta: return theta ? "D_theta(" + theta->to_string() + ")" : "D_theta(generic)";
  }
  return "";
}

bool Submodule::operator==(const Submodule& o) const {
  if (kind != o.kind || theta.has_value() != o.theta.has_value()) return false;
  return !theta || *theta == *o.theta;
}

std::string_view to_string(Reducibility r) {
  switch (r) {
    case Reducibility::Irreducible: return "irreducible";
    case Reducibility::NonSplitReducible: return "non_split_reducible";
    case Reducibility::SplitReducible: return "split_reducible";
  }
  return "";
}

std::string_view to_string(TypeLabel t) {
  switch (t) {
    case TypeLabel::Special: return "special";
    case TypeLabel::PrincipalSeries: return "principal_series";
    case TypeLabel::SupercuspidalOrPrincipal: return "supercuspidal_or_principal";
    case TypeLabel::NotLabeled: return "not_labeled";
  }
  return "";
}

namespace {

StandardShape require_shape(const FilteredModule& D) {
  auto s = standard_shape(D.phi);
  if (!s) fail(ErrorKind::NotCanonicalized, "module is not in a standard shape; normalize first");
  return *s;
}

// Line spanned by the constant vector w is G-stable.
bool line_stable(const FilteredModule& D, const FieldElement& w1, const FieldElement& w2) {
  for (const auto& M : action_matrices(D.action, static_cast<size_t>(D.ext().f))) {
    for (size_t j = 0; j < M.size(); ++j) {
      Mat2 A = M.at(j);
      if (!proportional(A.a * w1 + A.b * w2, A.c * w1 + A.d * w2, w1, w2)) return false;
    }
  }
  return true;
}

bool all_lines_stable(const FilteredModule& D) {
  for (const auto& M : action_matrices(D.action, static_cast<size_t>(D.ext().f)))
    for (size_t j = 0; j < M.size(); ++j)
      if (!M.at(j).is_scalar()) return false;
  return true;
}

// Distinct ratios y_i / x_i over J_x and J_y, in order of first appearance.
std::vector<FieldElement> ratio_constants(const FiltrationData& F) {
  std::vector<FieldElement> out;
  for (size_t i = 0; i < F.weights.m(); ++i) {
    if (F.x[i].is_zero() || F.y[i].is_zero()) continue;
    FieldElement c = F.y[i] / F.x[i];
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

Rational e_vp(const FilteredModule& D, const VecF& v) {
  return Rational(D.ext().e) * nm_phi(v)[0].vp();
}

long sum_where(const FiltrationData& F, bool (*pred)(const FieldElement&, const FieldElement&)) {
  long s = 0;
  for (size_t i = 0; i < F.weights.m(); ++i)
    if (pred(F.x[i], F.y[i])) s += F.weights.k[i];
  return s;
}

bool y_zero(const FieldElement&, const FieldElement& y) { return y.is_zero(); }
bool x_zero(const FieldElement& x, const FieldElement&) { return x.is_zero(); }

long k_of_ratio(const FiltrationData& F, const FieldElement& c) {
  long s = 0;
  for (size_t i = 0; i < F.weights.m(); ++i)
    if (!F.x[i].is_zero() && F.x[i] * c == F.y[i]) s += F.weights.k[i];
  return s;
}

}  // namespace

std::vector<Submodule> submodule_lattice(const FilteredModule& D) {
  StandardShape s = require_shape(D);
  const FieldPtr& F = D.field();
  FieldElement one = FieldElement::one(F), zero = FieldElement::zero(F);
  std::vector<Submodule> out{{SubKind::Zero, std::nullopt}};
  bool d1 = s.tag != CanonicalTag::NonFSemisimple && !s.monodromy;
  if (d1 && line_stable(D, one, zero)) out.push_back({SubKind::D1, std::nullopt});
  if (line_stable(D, zero, one)) out.push_back({SubKind::D2, std::nullopt});
  if (s.tag == CanonicalTag::FScalar) {
    for (const auto& c : ratio_constants(D.fil))
      if (line_stable(D, one, c)) out.push_back({SubKind::DTheta, c});
    if (all_lines_stable(D)) out.push_back({SubKind::DTheta, std::nullopt});
  }
  out.push_back({SubKind::Full, std::nullopt});
  return out;
}

long t_hodge(const FiltrationData& F, const Submodule& s) {
  const long S = F.weights.lower_total();
  switch (s.kind) {
    case SubKind::Zero: return 0;
    case SubKind::Full: return 2 * S + F.weights.total();
    case SubKind::D1: return S + sum_where(F, y_zero);
    case SubKind::D2: return S + sum_where(F, x_zero);
    case SubKind::DTheta: return S + (s.theta ? k_of_ratio(F, *s.theta) : 0);
  }
  return 0;
}

Rational t_newton(const FilteredModule& D, const Submodule& s) {
  StandardShape sh = require_shape(D);
  switch (s.kind) {
    case SubKind::Zero: return 0;
    case SubKind::Full: return e_vp(D, sh.alpha * sh.delta);
    case SubKind::D1:
    case SubKind::DTheta: return e_vp(D, sh.alpha);
    case SubKind::D2: return e_vp(D, sh.delta);
  }
  return 0;
}

WAReport check_wa(const FilteredModule& D) {
  StandardShape sh = require_shape(D);
  const FieldPtr& F = D.field();
  const FiltrationData& fil = D.fil;
  WAReport rep;
  rep.tag = sh.tag;
  rep.monodromy = sh.monodromy;
  const Rational S = fil.weights.lower_total();
  const Rational K = fil.weights.total();
  const Rational sy = sum_where(fil, y_zero), sx = sum_where(fil, x_zero);
  const Rational na = e_vp(D, sh.alpha), nd = e_vp(D, sh.delta);
  const Submodule d1{SubKind::D1, std::nullopt}, d2{SubKind::D2, std::nullopt};
  auto finish = [&rep]() {
    rep.weakly_admissible = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                                        [](const Condition& c) { return c.holds(); });
  };

  if (sh.tag == CanonicalTag::SplitDiag && !sh.monodromy) {
    rep.conditions = {{"e v(Nm alpha) + e v(Nm delta) = sum k", na + nd, K + 2 * S, true},
                      {"e v(Nm alpha) >= sum_{y_i=0} k_i", na, S + sy, false},
                      {"e v(Nm delta) >= sum_{x_i=0} k_i", nd, S + sx, false}};
    finish();
    if (!rep.weakly_admissible) return rep;
    bool t1 = rep.conditions[1].tight(), t2 = rep.conditions[2].tight();
    if (t1 && t2) {
      rep.reducibility = Reducibility::SplitReducible;
      rep.witnesses = {d1, d2};
    } else if (t1 || t2) {
      rep.reducibility = Reducibility::NonSplitReducible;
      rep.witnesses = {t1 ? d1 : d2};
    } else {
      rep.reducibility = Reducibility::Irreducible;
    }
    return rep;
  }

  if (sh.monodromy || sh.tag == CanonicalTag::NonFSemisimple) {
    // With N != 0, Nm(alpha) = p^f Nm(delta), so the first line reads
    // 2 e f v(delta) + e f = sum k for constant delta.
    const Rational& sub = sh.monodromy ? nd : na;
    rep.conditions = {{"t_N(D) = sum k", na + nd, K + 2 * S, true},
                      {"t_N(D2) >= sum_{x_i=0} k_i", sub, S + sx, false}};
    finish();
    if (!rep.weakly_admissible) return rep;
    if (rep.conditions[1].tight()) {
      rep.reducibility = Reducibility::NonSplitReducible;
      rep.witnesses = {d2};
    } else {
      rep.reducibility = Reducibility::Irreducible;
    }
    return rep;
  }

  // phi^f scalar: every line is phi-stable, only G-stable ones count.
  FieldElement one = FieldElement::one(F), zero = FieldElement::zero(F);
  bool s1 = line_stable(D, one, zero), s2 = line_stable(D, zero, one);
  std::vector<std::pair<FieldElement, long>> kc;
  for (const auto& c : ratio_constants(fil))
    if (line_stable(D, one, c)) kc.emplace_back(c, k_of_ratio(fil, c));
  long kmax = 0;
  for (const auto& [c, k] : kc) kmax = std::max(kmax, k);
  rep.conditions = {{"2 e f v(alpha) = sum k", 2 * na, K + 2 * S, true}};
  if (s1) rep.conditions.push_back({"e f v(alpha) >= sum_{y_i=0} k_i", na, S + sy, false});
  if (s2) rep.conditions.push_back({"e f v(alpha) >= sum_{x_i=0} k_i", na, S + sx, false});
  rep.conditions.push_back({"e f v(alpha) >= max_c k(c)", na, S + kmax, false});
  finish();
  if (!rep.weakly_admissible) return rep;

  std::vector<Submodule> tight;
  if (s1 && na == S + sy) tight.push_back(d1);
  if (s2 && na == S + sx) tight.push_back(d2);
  for (const auto& [c, k] : kc)
    if (na == S + k) tight.push_back({SubKind::DTheta, c});
  bool generic_tight = na == S && all_lines_stable(D);
  if (generic_tight) tight.push_back({SubKind::DTheta, std::nullopt});
  if (tight.empty()) {
    rep.reducibility = Reducibility::Irreducible;
  } else if (tight.size() == 1) {
    rep.reducibility = Reducibility::NonSplitReducible;
    rep.witnesses = tight;
  } else {
    rep.reducibility = Reducibility::SplitReducible;
    rep.witnesses = {tight[0], tight[1]};
  }
  return rep;
}

OracleVerdict wa_oracle(const FilteredModule& D) {
  StandardShape sh = require_shape(D);
  OracleVerdict out;
  auto lattice = submodule_lattice(D);
  bool ok = true, generic = false;
  for (const auto& s : lattice) {
    Rational th = t_hodge(D.fil, s), tn = t_newton(D, s);
    if (s.kind == SubKind::Full) {
      ok = ok && th == tn;
    } else if (s.kind != SubKind::Zero) {
      ok = ok && th <= tn;
      if (th == tn) {
        out.tight.push_back(s);
        generic = generic || (s.kind == SubKind::DTheta && !s.theta);
      }
    }
  }
  out.weakly_admissible = ok;
  if (!ok) return out;
  // Two distinct stable lines are complementary; only D1, D2 and the D_theta
  // can both be stable, and D1 never is when N != 0 or phi^f is not semisimple.
  bool complementary = out.tight.size() >= 2 || generic;
  if (sh.monodromy || sh.tag == CanonicalTag::NonFSemisimple) complementary = false;
  if (out.tight.empty())
    out.reducibility = Reducibility::Irreducible;
  else
    out.reducibility =
        complementary ? Reducibility::SplitReducible : Reducibility::NonSplitReducible;
  return out;
}

GaloisTypeLabel galois_type_label(const FilteredModule& D) {
  StandardShape sh = require_shape(D);
  GaloisTypeLabel out;
  if (sh.monodromy) {
    out.label = TypeLabel::Special;
  } else if (sh.tag != CanonicalTag::FScalar) {
    out.label = TypeLabel::PrincipalSeries;
  } else {
    out.label = TypeLabel::SupercuspidalOrPrincipal;
    auto mats = action_matrices(D.action, static_cast<size_t>(D.ext().f));
    bool abelian = true;
    for (const auto& a : mats)
      for (const auto& b : mats) abelian = abelian && a.at(0) * b.at(0) == b.at(0) * a.at(0);
    out.lambda_abelian = abelian;
  }
  if (D.ext().p == 2) {
    out.inner = out.label;
    out.label = TypeLabel::NotLabeled;
  }
  return out;
}

RankOneReport rank_one_wa(const RankOneModule& R) {
  RankOneReport rep;
  const int m = R.ext.m();
  if (R.weights.size() != static_cast<size_t>(m)) {
    rep.problems.push_back("weights must have length m");
    return rep;
  }
  long K = 0;
  for (long k : R.weights) K += k;
  rep.t_hodge = K;
  if (R.u.is_zero() || R.varpi.is_zero()) {
    rep.problems.push_back("u and varpi must be nonzero");
    return rep;
  }
  if (R.u.vp() != 0) rep.problems.push_back("v_p(u) must be 0");
  FieldElement pk = FieldElement(R.field, R.ext.p).pow(K);
  if (R.varpi.pow(m) != pk) rep.problems.push_back("varpi^m must equal p^(sum k)");
  for (const auto& o : orbits(R.group, m))
    for (size_t i : o)
      if (R.weights[i] != R.weights[o.front()]) {
        rep.problems.push_back("weights are not constant on G-orbits");
        break;
      }
  const size_t r = R.group.order();
  if (R.chi.size() != r) {
    rep.problems.push_back("chi needs one value per group element");
  } else {
    for (size_t a = 0; a < r; ++a) {
      if (R.chi[a].is_zero()) rep.problems.push_back("chi takes the value 0");
      for (size_t b = 0; b < r; ++b)
        if (R.chi[R.group.compose(static_cast<int>(a), static_cast<int>(b))] !=
            R.chi[a] * R.chi[b]) {
          rep.problems.push_back("chi is not a homomorphism");
          a = b = r;
        }
    }
  }
  rep.t_newton = Rational(R.ext.e * R.ext.f) * R.frobenius().vp();
  rep.weakly_admissible = rep.problems.empty() && rep.t_newton == rep.t_hodge;
  return rep;
}

RankOneModule rank_one_with_weights(const FieldPtr& F, const Extension& ext,
                                    const std::vector<long>& weights, const FieldElement& u,
                                    std::vector<FieldElement> chi,
                                    const std::vector<FieldElement>& witnesses) {
  long K = 0;
  for (long k : weights) K += k;
  FieldElement pk = FieldElement(F, ext.spec.p).pow(K);
  FieldElement varpi = nth_root(pk, ext.spec.m(), witnesses).root;
  return {F, ext.spec, ext.group, u, varpi, std::move(chi), weights};
}

FilteredModule twist_shift_weights(const FilteredModule& D, const RankOneModule& R) {
  if (!same_field(D.field(), R.field) || !(D.ext() == R.ext) || !(D.group == R.group))
    fail(ErrorKind::PreconditionMismatch, "twist needs the same field, extension and group");
  const size_t m = D.fil.weights.m();
  if (R.weights.size() != m || R.chi.size() != D.group.order())
    fail(ErrorKind::PreconditionMismatch, "rank-one data has the wrong size");
  std::vector<long> lower = D.fil.weights.lower;
  for (size_t i = 0; i < m; ++i) {
    lower[i] += R.weights[i];
    if (lower[i] < 0)
      fail(ErrorKind::ResultingNegativeWeight,
           "lower jump at embedding " + std::to_string(i) + " would become negative");
  }
  FilteredModule out = D;
  out.fil.weights = weight_profile(D.fil.weights.k, lower);
  out.phi.frob = R.frobenius() * D.phi.frob;
  auto mats = action_matrices(D.action, static_cast<size_t>(D.ext().f));
  for (size_t g = 0; g < mats.size(); ++g) mats[g] = R.chi[g] * mats[g];
  out.action = recognise_action(mats);
  return out;
}

}  // namespace phimod
