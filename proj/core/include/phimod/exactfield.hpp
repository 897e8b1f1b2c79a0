#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phimod/error.hpp"

namespace phimod {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero rational.
long vp_rational(const Rational& q, long p);

/// Parses "a", "-a" or "a/b". Throws InvalidInput on malformed text.
Rational parse_rational(const std::string& text);
/// Always "num/den", den > 0, reduced.
std::string format_rational(const Rational& q);

enum class Certification {
  None,
  Rational,         // degree one, E = Q
  Eisenstein,       // m(x + a) is p-Eisenstein for some 0 <= a < p
  IrreducibleModP,  // m is irreducible over F_p, so p is inert
  Attested,         // caller vouches for a single prime above p
};

std::string_view to_string(Certification c);

/// Number field E = Q[x]/(m) with exactly one prime above p.
///
/// The polynomial is monic with integer coefficients, constant term first.
/// Construction runs `certify` and refuses uncertifiable data unless the
/// caller attests.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> make(long p, std::vector<Integer> min_poly,
                                               bool attested = false);
  static std::shared_ptr<const FieldSpec> rationals(long p);

  long p() const { return p_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  const std::vector<Integer>& min_poly() const { return poly_; }
  Certification certification() const { return cert_; }

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && poly_ == other.poly_;
  }

 private:
  FieldSpec(long p, std::vector<Integer> poly, Certification cert)
      : p_(p), poly_(std::move(poly)), cert_(cert) {}

  long p_;
  std::vector<Integer> poly_;
  Certification cert_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Decides how (if at all) the single-prime property can be certified.
Certification certify(long p, const std::vector<Integer>& min_poly, bool attested);

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of E, stored as rational coefficients of 1, theta, ..., theta^(d-1).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, const Rational& r);
  FieldElement(FieldPtr field, long r) : FieldElement(std::move(field), Rational(r)) {}
  /// Coefficients may be longer than d; they are reduced modulo m.
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement zero(const FieldPtr& field) { return {field, 0L}; }
  static FieldElement one(const FieldPtr& field) { return {field, 1L}; }
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& r);
  friend FieldElement operator*(const Rational& r, FieldElement a) { return std::move(a) * r; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  FieldElement pow(long n) const;

  /// N_{E/Q}, computed as the resultant Res(m, a) (m is monic).
  Rational norm() const;
  Rational trace() const;
  /// v_p normalised so that v_p(p) = 1. Throws ZeroElement on zero.
  Rational vp() const;

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

enum class RootSource { Witness, Zero, MonomialSearch, QuadraticTower };

struct RootResult {
  FieldElement root;
  RootSource source;
};

/// Finds r in E with r^n = a.
///
/// Tries the supplied witnesses, then c * theta^k with c rational and
/// 0 <= k <= d, then (for quadratic E and even n) square roots through the
/// trace/norm identity. Throws FieldTooSmall when all of these fail; this is
/// not a proof that no root exists.
RootResult nth_root(const FieldElement& a, long n,
                    const std::vector<FieldElement>& witnesses = {});

/// Rational n-th root if one exists.
std::optional<Rational> rational_nth_root(const Rational& q, long n);

}  // namespace phimod
