#pragma once

#include <string>
#include <vector>

#include "phimod/productring.hpp"

namespace phimod {

/// Numerical data of L/Q_p and of K inside it.
struct ExtensionSpec {
  long p = 2;
  int f = 1;   // residue degree of L
  int e = 1;   // ramification index of L
  int nu = 1;  // number of orbits of G on embeddings, [K:Q_p]
  int m() const { return e * f; }
  bool operator==(const ExtensionSpec& o) const {
    return p == o.p && f == o.f && e == o.e && nu == o.nu;
  }
};

/// G = Gal(L/K) by multiplication table, with its action on the m
/// embeddings (pi) and on Gal(L0/Q_p) (n, taken mod f).
///
/// Element 0 is the identity. g acts on the right of indices by
/// i.g = pi[g][i], so pi[g1 g2] = pi[g2] o pi[g1].
struct GaloisGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;
  std::vector<std::vector<int>> pi;
  std::vector<int> n;

  size_t order() const { return names.size(); }
  int compose(int g, int h) const { return mult[g][h]; }
  int inverse(int g) const;
  bool operator==(const GaloisGroup& o) const {
    return names == o.names && mult == o.mult && pi == o.pi && n == o.n;
  }
};

struct Extension {
  ExtensionSpec spec;
  GaloisGroup group;
  bool operator==(const Extension& o) const { return spec == o.spec && group == o.group; }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  void add(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

/// Group axioms, |G| = m / nu, pi a free faithful action compatible with
/// the block structure (pi(g)(f i + j) = j + n(g) mod f), n a homomorphism.
ValidationReport validate_group(const ExtensionSpec& ext, const GaloisGroup& G);

/// g(x)_i = x_{pi(g)(i)}.
VecM act_vecm(const GaloisGroup& G, int g, const VecM& x);
/// g(a)_j = a_{j + n(g)}.
VecF act_vecf(const GaloisGroup& G, int g, const VecF& a);
Mat2F act_mat(const GaloisGroup& G, int g, const Mat2F& M);

/// Orbits of G on {0, ..., m-1}, each sorted, ordered by smallest member.
std::vector<std::vector<size_t>> orbits(const GaloisGroup& G, int m);

Extension trivial_extension(long p, int f, int e);
/// Cyclic G of order r | f acting through the residue field: the generator
/// shifts each f-block by f/r.
Extension unramified_cyclic(long p, int f, int e, int r);
/// Cyclic G of order r | e with f = 1 and n = 0: the generator shifts the
/// embeddings by e/r.
Extension ramified_cyclic(long p, int e, int r);

}  // namespace phimod
