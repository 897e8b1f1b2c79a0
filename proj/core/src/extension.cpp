#include "phimod/extension.hpp"

#include <algorithm>

namespace phimod {

int GaloisGroup::inverse(int g) const {
  for (int h = 0; h < static_cast<int>(order()); ++h)
    if (mult[g][h] == 0) return h;
  fail(ErrorKind::InvalidGroup, "element " + names.at(g) + " has no inverse");
}

ValidationReport validate_group(const ExtensionSpec& ext, const GaloisGroup& G) {
  ValidationReport rep;
  const int r = static_cast<int>(G.order());
  const int m = ext.m(), f = ext.f;
  if (ext.f < 1 || ext.e < 1 || ext.nu < 1) rep.add("f, e and nu must be positive");
  if (r == 0) {
    rep.add("group is empty");
    return rep;
  }
  if (G.mult.size() != static_cast<size_t>(r) || G.pi.size() != static_cast<size_t>(r) ||
      G.n.size() != static_cast<size_t>(r)) {
    rep.add("mult, pi and n must have one entry per element");
    return rep;
  }
  for (const auto& row : G.mult) {
    if (row.size() != static_cast<size_t>(r)) {
      rep.add("multiplication table is not square");
      return rep;
    }
    for (int x : row)
      if (x < 0 || x >= r) {
        rep.add("multiplication table entry out of range");
        return rep;
      }
  }
  for (int g = 0; g < r; ++g)
    if (G.mult[0][g] != g || G.mult[g][0] != g) rep.add("element 0 is not the identity");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (G.mult[G.mult[a][b]][c] != G.mult[a][G.mult[b][c]]) {
          rep.add("multiplication is not associative");
          a = b = c = r;
        }
  for (int g = 0; g < r; ++g)
    if (std::count(G.mult[g].begin(), G.mult[g].end(), 0) != 1)
      rep.add("element " + G.names[g] + " has no unique inverse");
  if (r * ext.nu != m) rep.add("|G| * nu must equal m = e f");
  if (!rep.ok) return rep;

  for (int g = 0; g < r; ++g) {
    const auto& p = G.pi[g];
    if (p.size() != static_cast<size_t>(m)) {
      rep.add("pi(" + G.names[g] + ") must permute m indices");
      return rep;
    }
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i)
      if (sorted[i] != i) {
        rep.add("pi(" + G.names[g] + ") is not a permutation");
        return rep;
      }
  }
  for (int i = 0; i < m; ++i)
    if (G.pi[0][i] != i) rep.add("pi(identity) is not the identity");
  for (int g = 0; g < r; ++g)
    for (int h = 0; h < r; ++h)
      for (int i = 0; i < m; ++i)
        if (G.pi[G.mult[g][h]][i] != G.pi[h][G.pi[g][i]]) {
          rep.add("pi is not compatible with the multiplication (i.(gh) != (i.g).h)");
          g = h = r;
          break;
        }
  for (int g = 1; g < r; ++g)
    for (int i = 0; i < m; ++i)
      if (G.pi[g][i] == i) {
        rep.add("action is not free: " + G.names[g] + " fixes index " + std::to_string(i));
        break;
      }
  auto mod = [f](long x) { return static_cast<int>(((x % f) + f) % f); };
  if (mod(G.n[0]) != 0) rep.add("n(identity) must be 0 mod f");
  for (int g = 0; g < r; ++g)
    for (int h = 0; h < r; ++h)
      if (mod(G.n[G.mult[g][h]]) != mod(static_cast<long>(G.n[g]) + G.n[h])) {
        rep.add("n is not a homomorphism to Z/f");
        g = h = r;
      }
  for (int g = 0; g < r; ++g)
    for (int s = 0; s < m; ++s)
      if (mod(G.pi[g][s]) != mod(static_cast<long>(s % f) + G.n[g])) {
        rep.add("pi(" + G.names[g] + ") breaks the block constraint at index " +
                std::to_string(s));
        break;
      }
  return rep;
}

VecM act_vecm(const GaloisGroup& G, int g, const VecM& x) {
  std::vector<FieldElement> out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(x[static_cast<size_t>(G.pi[g][i])]);
  return VecM(std::move(out));
}

VecF act_vecf(const GaloisGroup& G, int g, const VecF& a) { return phi_shift(a, G.n[g]); }

Mat2F act_mat(const GaloisGroup& G, int g, const Mat2F& M) { return phi_shift(M, G.n[g]); }

std::vector<std::vector<size_t>> orbits(const GaloisGroup& G, int m) {
  std::vector<bool> seen(m, false);
  std::vector<std::vector<size_t>> out;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::vector<size_t> orb;
    for (size_t g = 0; g < G.order(); ++g) {
      int j = G.pi[g][i];
      if (!seen[j]) {
        seen[j] = true;
        orb.push_back(static_cast<size_t>(j));
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

namespace {

GaloisGroup cyclic(int r, int m, int f, int step, int nstep) {
  GaloisGroup G;
  for (int k = 0; k < r; ++k) {
    G.names.push_back(k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k));
    std::vector<int> row;
    for (int l = 0; l < r; ++l) row.push_back((k + l) % r);
    G.mult.push_back(row);
    std::vector<int> p(m);
    for (int s = 0; s < m; ++s) {
      int block = s / f, j = s % f;
      p[s] = f == 1 ? (s + k * step) % m : block * f + (j + k * step) % f;
    }
    G.pi.push_back(p);
    G.n.push_back((k * nstep) % f);
  }
  return G;
}

}  // namespace

Extension trivial_extension(long p, int f, int e) {
  return {{p, f, e, e * f}, cyclic(1, e * f, f, 0, 0)};
}

Extension unramified_cyclic(long p, int f, int e, int r) {
  if (r < 1 || f % r != 0) fail(ErrorKind::InvalidGroup, "order must divide f");
  return {{p, f, e, e * f / r}, cyclic(r, e * f, f, f / r, f / r)};
}

Extension ramified_cyclic(long p, int e, int r) {
  if (r < 1 || e % r != 0) fail(ErrorKind::InvalidGroup, "order must divide e");
  return {{p, 1, e, e / r}, cyclic(r, e, 1, e / r, 0)};
}

}  // namespace phimod
