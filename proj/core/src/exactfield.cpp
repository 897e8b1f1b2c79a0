#include "phimod/exactfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace phimod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::UncertifiedField: return "UncertifiedField";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NotCanonicalized: return "NotCanonicalized";
    case ErrorKind::MonodromyMismatch: return "MonodromyMismatch";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::PreconditionMismatch: return "PreconditionMismatch";
    case ErrorKind::ResultingNegativeWeight: return "ResultingNegativeWeight";
  }
  return "Unknown";
}

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::None: return "none";
    case Certification::Rational: return "rational";
    case Certification::Eisenstein: return "eisenstein";
    case Certification::IrreducibleModP: return "irreducible_mod_p";
    case Certification::Attested: return "attested";
  }
  return "none";
}

long vp_rational(const Rational& q, long p) {
  if (q == 0) fail(ErrorKind::ZeroElement, "valuation of zero");
  Integer prime(p);
  auto count = [&](const Integer& z) {
    Integer t = abs(z);
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), prime.get_mpz_t()));
  };
  return count(q.get_num()) - count(q.get_den());
}

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos ||
      q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    fail(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
  if (q.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic integer polynomial m.
void reduce(QPoly& a, const std::vector<Integer>& m) {
  const size_t d = m.size() - 1;
  for (size_t top = a.size(); top-- > d;) {
    if (a[top] == 0) continue;
    Rational lead = a[top];
    for (size_t j = 0; j <= d; ++j) a[top - d + j] -= lead * m[j];
  }
  a.resize(d);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a = q * b + r over Q, b nonzero and trimmed.
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  r = a;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Rational det(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational result = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      result = -result;
    }
    result *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return result;
}

// ---- F_p polynomials for the inertness test ----

using PPoly = std::vector<long>;

long mulmod(long a, long b, long p) {
  return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& b, long p) {
  ptrim(a);
  long inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    long c = mulmod(a.back(), inv, p);
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = ((a[shift + j] - mulmod(c, b[j], p)) % p + p) % p;
    ptrim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return pmod(r, m, p);
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible_mod_p(const std::vector<Integer>& m, long p) {
  PPoly f(m.size());
  Integer P(p);
  for (size_t i = 0; i < m.size(); ++i) {
    Integer r = m[i] % P;
    if (r < 0) r += P;
    f[i] = r.get_si();
  }
  const size_t d = m.size() - 1;
  PPoly x{0, 1};
  PPoly h = pmod(x, f, p);
  for (size_t i = 1; i <= d / 2; ++i) {
    // h <- h^p mod f
    PPoly base = h, acc{1};
    for (long e = p; e > 0; e >>= 1) {
      if (e & 1) acc = pmulmod(acc, base, f, p);
      base = pmulmod(base, base, f, p);
    }
    h = acc;
    PPoly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    PPoly g = pgcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool eisenstein_after_shift(const std::vector<Integer>& m, long p) {
  Integer P(p), P2 = P * P;
  const size_t d = m.size() - 1;
  // Shifts only matter mod p; large p is capped to keep this cheap.
  for (long a = 0; a < std::min(p, 512L); ++a) {
    std::vector<Integer> g(1, Integer(0));
    for (size_t j = d + 1; j-- > 0;) {
      // g <- g * (x + a) + m_j
      std::vector<Integer> next(g.size() + 1, Integer(0));
      for (size_t i = 0; i < g.size(); ++i) {
        next[i + 1] += g[i];
        next[i] += g[i] * a;
      }
      next[0] += m[j];
      g = std::move(next);
    }
    g.resize(d + 1);
    bool ok = g[0] % P2 != 0;
    for (size_t i = 0; ok && i < d; ++i) ok = g[i] % P == 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace

Certification certify(long p, const std::vector<Integer>& m, bool attested) {
  if (m.size() == 2) return Certification::Rational;
  if (eisenstein_after_shift(m, p)) return Certification::Eisenstein;
  if (irreducible_mod_p(m, p)) return Certification::IrreducibleModP;
  return attested ? Certification::Attested : Certification::None;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(long p, std::vector<Integer> min_poly,
                                                 bool attested) {
  if (p < 2 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0)
    fail(ErrorKind::InvalidInput, "p = " + std::to_string(p) + " is not a prime");
  if (min_poly.size() < 2) fail(ErrorKind::InvalidInput, "defining polynomial must have degree >= 1");
  if (min_poly.back() != 1) fail(ErrorKind::InvalidInput, "defining polynomial must be monic");
  Certification c = certify(p, min_poly, attested);
  if (c == Certification::None)
    fail(ErrorKind::UncertifiedField,
         "cannot certify a single prime above " + std::to_string(p) +
             " (not Eisenstein after shift, reducible mod p); pass an attestation");
  return std::shared_ptr<const FieldSpec>(new FieldSpec(p, std::move(min_poly), c));
}

std::shared_ptr<const FieldSpec> FieldSpec::rationals(long p) {
  return make(p, {Integer(0), Integer(1)});
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, const Rational& r) : field_(std::move(field)) {
  if (!field_) fail(ErrorKind::InvalidInput, "element without a field");
  c_.assign(field_->degree(), Rational(0));
  c_[0] = r;
  c_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) fail(ErrorKind::InvalidInput, "element without a field");
  for (auto& q : c_) q.canonicalize();
  if (c_.size() < static_cast<size_t>(field_->degree()))
    c_.resize(field_->degree(), Rational(0));
  else
    reduce(c_, field_->min_poly());
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, QPoly{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElement::is_one() const { return is_rational() && c_[0] == 1; }

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) fail(ErrorKind::SpecMismatch, "elements of different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  c_ = poly_mul(c_, o.c_);
  reduce(c_, field_->min_poly());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement operator*(FieldElement a, const Rational& r) {
  for (auto& x : a.c_) x *= r;
  return a;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return c_ == o.c_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid on (m, a): s*a + t*m = g, g a nonzero constant.
  QPoly m(field_->min_poly().begin(), field_->min_poly().end());
  QPoly r0 = m, r1 = c_, s0{Rational(0)}, s1{Rational(1)};
  trim(r1);
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because m is irreducible.
  Rational g = r1[0];
  for (auto& x : s1) x /= g;
  return FieldElement(field_, s1);
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement result = one(field_), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Rational FieldElement::norm() const {
  const int d = field_->degree();
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d));
  FieldElement col = *this, theta = generator(field_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) mat[i][j] = col.c_[i];
    col *= theta;
  }
  return det(std::move(mat));
}

Rational FieldElement::trace() const {
  const int d = field_->degree();
  Rational t = 0;
  FieldElement col = *this, theta = generator(field_);
  for (int j = 0; j < d; ++j) {
    t += col.c_[j];
    col *= theta;
  }
  return t;
}

Rational FieldElement::vp() const {
  if (is_zero()) fail(ErrorKind::ZeroElement, "v_p of zero");
  Rational v(vp_rational(norm(), field_->p()), field_->degree());
  v.canonicalize();
  return v;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

std::optional<Rational> rational_nth_root(const Rational& q, long n) {
  if (n <= 0) return std::nullopt;
  if (q == 0) return Rational(0);
  bool neg = q < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  auto iroot = [n](const Integer& z) -> std::optional<Integer> {
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n)) == 0)
      return std::nullopt;
    return r;
  };
  auto num = iroot(abs(q.get_num()));
  auto den = iroot(q.get_den());
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return neg ? -r : r;
}

namespace {

std::optional<FieldElement> monomial_root(const FieldElement& a, long n) {
  const FieldPtr& F = a.field();
  FieldElement theta = FieldElement::generator(F);
  if (theta.is_zero()) {
    if (auto c = rational_nth_root(a.rational_part(), n); c && a.is_rational())
      return FieldElement(F, *c);
    return std::nullopt;
  }
  FieldElement theta_n = theta.pow(n), t = FieldElement::one(F), tk = t;
  for (int k = 0; k <= F->degree(); ++k) {
    FieldElement b = a / t;
    if (b.is_rational())
      if (auto c = rational_nth_root(b.rational_part(), n)) return tk * *c;
    t *= theta_n;
    tk *= theta;
  }
  return std::nullopt;
}

// Square root in a quadratic field: r = (a + n)/t with n^2 = N(a), t^2 = Tr(a) + 2n.
std::optional<FieldElement> quadratic_sqrt(const FieldElement& a) {
  auto n0 = rational_nth_root(a.norm(), 2);
  if (!n0) return std::nullopt;
  for (const Rational& n : {*n0, Rational(-*n0)}) {
    auto t = rational_nth_root(a.trace() + 2 * n, 2);
    if (!t || *t == 0) continue;
    FieldElement r = (a + FieldElement(a.field(), n)) * Rational(Rational(1) / *t);
    if (r * r == a) return r;
  }
  return std::nullopt;
}

std::optional<FieldElement> find_root(const FieldElement& a, long n, RootSource& src) {
  if (n == 1) {
    src = RootSource::MonomialSearch;
    return a;
  }
  if (auto r = monomial_root(a, n)) {
    src = RootSource::MonomialSearch;
    return r;
  }
  if (a.field()->degree() == 2 && n % 2 == 0) {
    if (auto s = quadratic_sqrt(a)) {
      for (const FieldElement& c : {*s, -*s}) {
        RootSource inner;
        if (auto r = find_root(c, n / 2, inner)) {
          src = RootSource::QuadraticTower;
          return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RootResult nth_root(const FieldElement& a, long n, const std::vector<FieldElement>& witnesses) {
  if (n <= 0) fail(ErrorKind::InvalidInput, "root order must be positive");
  for (const auto& w : witnesses)
    if (same_field(w.field(), a.field()) && w.pow(n) == a) return {w, RootSource::Witness};
  if (a.is_zero()) return {a, RootSource::Zero};
  RootSource src;
  if (auto r = find_root(a, n, src)) return {*r, src};
  std::string what = "E does not visibly contain a root of X^" + std::to_string(n) + " - " +
                     a.to_string();
  throw FieldTooSmall(what, "supply a witness r with r^" + std::to_string(n) + " = " +
                                a.to_string() + " or enlarge E");
}

}  // namespace phimod
