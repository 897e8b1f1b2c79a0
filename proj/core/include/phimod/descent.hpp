#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "phimod/filtration.hpp"
#include "phimod/phimodule.hpp"

namespace phimod {

enum class ActionVariant { DiagChars, ScalarChar, Homomorphism, Explicit };
std::string_view to_string(ActionVariant v);

/// Galois descent data in one of the standard shapes, or an explicit
/// cocycle g -> [g] when the basis is not standard.
///
/// [g] is the matrix of g on the basis, so g(eta v) = eta [g] g(v) and the
/// cocycle rule reads [g1 g2] = [g1] g1([g2]).
struct GaloisAction {
  ActionVariant variant = ActionVariant::DiagChars;
  std::vector<FieldElement> chi;
  std::vector<FieldElement> psi;
  std::vector<Mat2> lambda;
  std::vector<Mat2F> cocycle;

  static GaloisAction diag_chars(std::vector<FieldElement> chi, std::vector<FieldElement> psi);
  static GaloisAction scalar_char(std::vector<FieldElement> chi);
  static GaloisAction homomorphism(std::vector<Mat2> lambda);
  static GaloisAction explicit_cocycle(std::vector<Mat2F> mats);
  static GaloisAction trivial(const FieldPtr& F, size_t order);
};

/// [g] for every g, as f-coordinate matrices.
std::vector<Mat2F> action_matrices(const GaloisAction& act, size_t f);

/// Shape of the variant against the Frobenius class, cocycle rule,
/// [phi] phi([g]) = [g] g([phi]) and N [g] = [g] g(N).
ValidationReport validate_action(const PhiModule& D, const GaloisGroup& G,
                                 const GaloisAction& act);

/// Standard variant if every [g] is constant (diagonal, scalar or general).
GaloisAction recognise_action(const std::vector<Mat2F>& mats);

using Seed = std::pair<FieldElement, FieldElement>;

/// Propagates one seed per orbit: v_{pi(h)(i)} = [h]_i^{-1} v_i for the
/// orbit representative i (the smallest index). Throws OrbitMismatch when a
/// step set is not a union of orbits and BadSeed on malformed seeds.
FiltrationData build_stable_filtration(const ExtensionSpec& ext, const GaloisGroup& G,
                                       const GaloisAction& act, const WeightData& w,
                                       const std::vector<Seed>& seeds);

/// g(Fil^j) is contained in Fil^j for every g and every jump.
bool check_g_stable(const ExtensionSpec& ext, const GaloisGroup& G,
                    const std::vector<Mat2F>& mats, const FiltrationData& F);

}  // namespace phimod
