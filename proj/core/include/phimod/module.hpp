#pragma once

#include <optional>
#include <vector>

#include "phimod/descent.hpp"

namespace phimod {

/// Filtered (phi, N, Gal(L/K), E)-module of rank two with its basis.
struct FilteredModule {
  PhiModule phi;
  GaloisGroup group;
  GaloisAction action;
  FiltrationData fil;
  /// Optional root witnesses forwarded to canonicalisation.
  std::vector<FieldElement> hints;

  const FieldPtr& field() const { return phi.field; }
  const ExtensionSpec& ext() const { return phi.ext; }
};

/// Every structural check: phi-module, group, action, filtration, stability.
ValidationReport validate_module(const FilteredModule& D);

/// Same module in the basis with new coordinates P * old.
FilteredModule apply_basechange(const FilteredModule& D, const Mat2F& P);

/// Frobenius shape usable by the admissibility and isomorphism code.
///
/// SplitDiag also covers diag(alpha_vec, delta_vec) with nonconstant
/// diagonals and Nm(alpha) != Nm(delta); the other tags need constants.
struct StandardShape {
  CanonicalTag tag;
  VecF alpha;
  VecF delta;
  bool monodromy = false;  // N = ((0,0),(1,0)) and alpha = p delta
  bool is_constant() const { return alpha.is_constant() && delta.is_constant(); }
};

std::optional<StandardShape> standard_shape(const PhiModule& D);

struct NormalizedModule {
  FilteredModule module;
  StandardShape shape;
  Mat2F basechange;
  std::vector<RootSource> roots;
};

/// Canonical Frobenius, normalised monodromy and the induced Galois and
/// filtration data. Modules already in a standard shape are returned as is.
NormalizedModule normalize(const FilteredModule& D);

}  // namespace phimod
