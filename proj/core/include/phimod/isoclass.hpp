#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phimod/admissibility.hpp"

namespace phimod {

enum class IsoBranch {
  Direct,          // Q = diag(a, d)
  Swapped,         // Q = antidiag(b, c)
  Monodromy,       // Q = diag(a, d) pinned by N
  FScalar,         // Q = R (x) (1, mu, ..., mu^{f-1})
  NonFSemisimple,  // Q = ((a, 0), (c, mu a))
  ClassMismatch,
  LinearAlgebra,
};
std::string_view to_string(IsoBranch b);

struct IsoVerdict {
  bool isomorphic = false;
  IsoBranch branch = IsoBranch::ClassMismatch;
  /// Q with new = Q old from the first module's basis to the second's,
  /// both taken in the bases used by the caller.
  std::optional<Mat2F> witness;
  std::string reason;
};

/// Exact decision with an explicit witness. Both modules are normalised
/// first; the returned witness is expressed in the input bases.
/// Throws PreconditionMismatch for different fields, extensions or weights.
IsoVerdict decide_isomorphic(const FilteredModule& A, const FilteredModule& B);

/// Same question answered by solving the intertwining equations as one
/// linear system over E and searching the solution space for an invertible
/// point. Independent of the normal forms.
IsoVerdict isomorphic_by_linear_algebra(const FilteredModule& A, const FilteredModule& B);

/// Substitutes Q into all compatibility equations.
bool verify_isomorphism(const FilteredModule& A, const FilteredModule& B, const Mat2F& Q);

/// Cheap invariants; different fingerprints imply non-isomorphic modules.
struct Fingerprint {
  CanonicalTag tag;
  bool monodromy = false;
  FieldElement trace_phi_f;
  FieldElement det_phi_f;
  std::vector<std::vector<long>> orbit_weights;
  std::vector<std::vector<size_t>> line_data;
  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

Fingerprint iso_fingerprint(const FilteredModule& D);

/// Lower-left vector of the intertwiner in the non-semisimple case, from the
/// Frobenius equation read as c_{i+1} = (alpha1 c_i + d_i - a_{i+1}) / alpha2
/// with a = a0 (1, mu, ...), d = mu a, mu = alpha1 / alpha2.
VecF derive_jordan_c(const FieldElement& alpha1, const FieldElement& alpha2,
                     const FieldElement& a0, const FieldElement& c0, size_t f);

/// The closed form as printed for the same vector, kept for comparison.
VecF printed_jordan_c(const FieldElement& alpha1, const FieldElement& alpha2,
                      const FieldElement& a0, const FieldElement& c0, size_t f);

bool rank_one_iso(const RankOneModule& A, const RankOneModule& B);
/// Direct search for a 1x1 intertwiner.
bool rank_one_iso_oracle(const RankOneModule& A, const RankOneModule& B);

/// Crystalline family over K = L: Frobenius
/// diag((l_0, ..., l_{f-2}, eps0 / prod l), (m_0, ..., m_{f-2}, eps1 / prod m)),
/// N = 0, x = y = 1, where eps0, eps1 are the roots of X^2 - a X + pi^k.
struct FamilyParams {
  FieldPtr field;
  long p = 2;
  int e = 1;
  int f = 1;
  FieldElement a;   // in the maximal ideal, a^2 != 4 pi^k
  FieldElement pi;  // pi^e = p
  std::vector<long> weights;
  std::vector<FieldElement> witnesses;  // e.g. a square root of a^2 - 4 pi^k
};

struct FamilyMember {
  std::vector<FieldElement> lambda;
  std::vector<FieldElement> mu;
  FilteredModule module;
};

/// Roots (eps0, eps1); FieldTooSmall if the discriminant is not a square.
std::pair<FieldElement, FieldElement> family_roots(const FamilyParams& P);
FamilyMember family_member(const FamilyParams& P, std::vector<FieldElement> lambda,
                           std::vector<FieldElement> mu);
/// The first `count` representatives D(1, mu) with mu running through
/// vectors of small integers prime to p.
std::vector<FamilyMember> enumerate_family(const FamilyParams& P, size_t count);
/// lambda * mu' = lambda' * mu componentwise.
bool family_criterion(const FamilyMember& A, const FamilyMember& B);

}  // namespace phimod
