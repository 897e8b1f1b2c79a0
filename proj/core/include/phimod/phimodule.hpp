#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phimod/extension.hpp"

namespace phimod {

/// Rank-two (phi, N)-module over L0 (x) E in a chosen basis.
///
/// Base changes act by new = P old phi(P)^{-1} on Frobenius and by
/// P N P^{-1} on monodromy; P sends old coordinates to new ones.
struct PhiModule {
  FieldPtr field;
  ExtensionSpec ext;
  Mat2F frob;
  Mat2F mono;
};

/// Checks [phi] invertible, N^2 = 0 and N [phi] = p [phi] phi(N).
ValidationReport validate_phi_module(const PhiModule& D);

Mat2F change_basis(const Mat2F& frob, const Mat2F& P);
Mat2F change_basis_linear(const Mat2F& N, const Mat2F& P);

enum class FClass { SplitSemisimple, FScalar, NonFSemisimple };
std::string_view to_string(FClass c);

/// Coordinate 0 of Nm_phi([phi]), i.e. the matrix of phi^f on one factor.
Mat2 frobenius_power(const Mat2F& frob);

/// Semisimplicity class of phi^f. Throws FieldTooSmall if phi^f has
/// distinct eigenvalues outside E.
FClass f_class(const Mat2F& frob, const std::vector<FieldElement>& witnesses = {});

enum class CanonicalTag { SplitDiag, FScalar, NonFSemisimple };
std::string_view to_string(CanonicalTag t);

struct CanonicalForm {
  CanonicalTag tag;
  FieldElement alpha;
  FieldElement delta;  // equals alpha unless tag == SplitDiag
  Mat2F basechange;    // P with P [phi] phi(P)^{-1} = matrix()
  std::vector<RootSource> roots;

  Mat2F matrix(size_t f) const;
};

Mat2F canonical_matrix(CanonicalTag tag, const FieldElement& alpha, const FieldElement& delta,
                       size_t f);

/// Constructive reduction of [phi] to one of the three standard shapes.
/// Roots are taken from the witnesses, the entries of [phi], or searched.
CanonicalForm canonicalize(const Mat2F& frob, const std::vector<FieldElement>& witnesses = {});

/// Reads the tag off a matrix already in standard shape; nullopt otherwise.
std::optional<CanonicalForm> recognise_canonical(const Mat2F& frob);

/// For T = ((a, 0), (zeta, a)) with a = (alpha, 1, ..., 1) and
/// zeta_0 + alpha sum_{i>=1} zeta_i = 0, returns S = ((1, 0), (z, 1)) with
/// S T phi(S)^{-1} = diag(a, a).
Mat2F clear_scalar_lower_left(const Mat2F& T);

/// Vector z with ((alpha,0),(gamma,alpha)) phi(M*) = M* ((alpha,0),(1,alpha))
/// for M* = ((f, 0), (z, Tr(gamma))); see the ledger for the 1/alpha factor.
VecF jordan_offdiag_vector(const VecF& gamma, const FieldElement& alpha);

enum class MonodromyShape { Zero, Lower, Upper };

/// All N compatible with diag(alpha, delta): a line spanned by `generator`
/// placed in the lower (c) or upper (b) corner, or only N = 0.
struct MonodromyFamily {
  MonodromyShape shape = MonodromyShape::Zero;
  std::optional<VecF> generator;
  Mat2F member(const FieldElement& n) const;
};

MonodromyFamily monodromy_candidates(CanonicalTag tag, const FieldElement& alpha,
                                     const FieldElement& delta, long p, size_t f);

struct NormalizedMonodromy {
  Mat2F basechange;
  FieldElement alpha;  // = p * delta
  FieldElement delta;
  Mat2F frob;
  Mat2F mono;  // ((0, 0), (1, 0))
};

/// Moves a nonzero N on diag(alpha, delta) to ((0,0),(1,0)), swapping the
/// basis first when N is upper triangular.
NormalizedMonodromy normalize_monodromy(const FieldElement& alpha, const FieldElement& delta,
                                        const Mat2F& N, long p);

bool is_zero_monodromy(const Mat2F& N);

}  // namespace phimod
