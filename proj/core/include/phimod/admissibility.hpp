#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phimod/module.hpp"

namespace phimod {

enum class SubKind { Zero, D1, D2, DTheta, Full };

/// A phi-, N- and G-stable E-submodule in standard coordinates. DTheta is
/// spanned by eta_1 + theta eta_2; an empty theta stands for a generic one.
struct Submodule {
  SubKind kind = SubKind::Zero;
  std::optional<FieldElement> theta;

  int rank() const { return kind == SubKind::Zero ? 0 : kind == SubKind::Full ? 2 : 1; }
  std::string label() const;
  bool operator==(const Submodule& o) const;
};

/// Candidates for the weak admissibility test: 0, the stable lines and D.
/// For phi^f scalar the lines D_theta use theta in {y_i / x_i : x_i y_i != 0}
/// plus one generic theta.
std::vector<Submodule> submodule_lattice(const FilteredModule& D);

/// Hodge invariant from the closed formulas.
long t_hodge(const FiltrationData& F, const Submodule& s);
/// Newton invariant e v_p of the norm of Frobenius on the submodule.
Rational t_newton(const FilteredModule& D, const Submodule& s);

enum class Reducibility { Irreducible, NonSplitReducible, SplitReducible };
std::string_view to_string(Reducibility r);

struct Condition {
  std::string name;
  Rational lhs;  // Newton side
  Rational rhs;  // Hodge side
  bool equality;  // true: lhs = rhs is required; false: lhs >= rhs
  bool holds() const { return equality ? lhs == rhs : lhs >= rhs; }
  bool tight() const { return lhs == rhs; }
};

struct WAReport {
  CanonicalTag tag;
  bool monodromy = false;
  bool weakly_admissible = false;
  std::vector<Condition> conditions;
  std::optional<Reducibility> reducibility;
  /// NonSplit: the unique wa submodule. Split: a complementary pair.
  std::vector<Submodule> witnesses;
};

/// Closed-form conditions for the four Frobenius/monodromy shapes.
/// Throws NotCanonicalized unless the module is in a standard shape.
WAReport check_wa(const FilteredModule& D);

struct OracleVerdict {
  bool weakly_admissible = false;
  std::optional<Reducibility> reducibility;
  std::vector<Submodule> tight;  // proper nonzero submodules with t_H = t_N
};

/// Direct evaluation of t_H <= t_N over the lattice.
OracleVerdict wa_oracle(const FilteredModule& D);

enum class TypeLabel { Special, PrincipalSeries, SupercuspidalOrPrincipal, NotLabeled };
std::string_view to_string(TypeLabel t);

struct GaloisTypeLabel {
  TypeLabel label;
  std::optional<TypeLabel> inner;  // label before the p = 2 caveat
  std::optional<bool> lambda_abelian;
};

GaloisTypeLabel galois_type_label(const FilteredModule& D);

/// phi(eta) = u varpi eta and g(eta) = chi(g) eta.
struct RankOneModule {
  FieldPtr field;
  ExtensionSpec ext;
  GaloisGroup group;
  FieldElement u;
  FieldElement varpi;
  std::vector<FieldElement> chi;
  std::vector<long> weights;

  FieldElement frobenius() const { return u * varpi; }
};

struct RankOneReport {
  bool weakly_admissible = false;
  std::vector<std::string> problems;
  Rational t_newton;
  long t_hodge = 0;
};

/// Checks v_p(u) = 0, varpi^m = p^{sum k}, weights constant on orbits and
/// chi a character, then compares t_N with t_H.
RankOneReport rank_one_wa(const RankOneModule& R);

/// Rank-one module with the given weights; varpi is an m-th root of
/// p^{sum k} found with nth_root (FieldTooSmall if E lacks one).
RankOneModule rank_one_with_weights(const FieldPtr& F, const Extension& ext,
                                    const std::vector<long>& weights, const FieldElement& u,
                                    std::vector<FieldElement> chi,
                                    const std::vector<FieldElement>& witnesses = {});

/// D (x) R. Frobenius and [g] are scaled; both filtration jumps move by the
/// weights of R. Throws ResultingNegativeWeight if a lower jump drops below 0.
FilteredModule twist_shift_weights(const FilteredModule& D, const RankOneModule& R);

}  // namespace phimod
