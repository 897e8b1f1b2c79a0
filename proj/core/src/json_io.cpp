#include "phimod/json_io.hpp"

#include <map>

namespace phimod::io {

namespace {

std::string member(const std::string& path, const std::string& key) { return path + "." + key; }
std::string index(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(member(path, key), "missing");
  return *it;
}

const json& require_array(const json& j, const std::string& path, size_t n = SIZE_MAX) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (n != SIZE_MAX && j.size() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " entries, got " +
                                std::to_string(j.size()));
  return j;
}

long as_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

int as_int(const json& j, const std::string& path) { return static_cast<int>(as_long(j, path)); }

std::vector<long> long_array(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<long> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as_long(j[i], index(path, i)));
  return out;
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a rational as integer or \"num/den\" string");
}

// Wraps domain errors raised while building an object so the report names
// where the data came from.
template <class Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const FieldTooSmall&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

std::map<std::string, int> element_index(const GaloisGroup& G) {
  std::map<std::string, int> idx;
  for (size_t g = 0; g < G.order(); ++g) idx[G.names[g]] = static_cast<int>(g);
  return idx;
}

// Per-element values, given as {name: value} or as an array in element order.
template <class T, class Read>
std::vector<T> per_element(const json& j, const GaloisGroup& G, const std::string& path,
                           Read read) {
  std::vector<T> out;
  if (j.is_array()) {
    require_array(j, path, G.order());
    for (size_t g = 0; g < G.order(); ++g) out.push_back(read(j[g], index(path, g)));
    return out;
  }
  if (!j.is_object()) throw SchemaError(path, "expected an object keyed by group element");
  for (size_t g = 0; g < G.order(); ++g) {
    const std::string& name = G.names[g];
    out.push_back(read(require(j, name, path), member(path, name)));
  }
  if (j.size() != G.order()) throw SchemaError(path, "unknown group element name");
  return out;
}

template <class T>
json keyed(const GaloisGroup& G, const std::vector<T>& values) {
  json out = json::object();
  for (size_t g = 0; g < values.size(); ++g) out[G.names[g]] = to_json(values[g]);
  return out;
}

void ensure_valid(const ValidationReport& rep, const std::string& path) {
  if (!rep.ok) throw SchemaError(path, rep.problems.front());
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

FieldPtr field_from_json(const json& j) {
  const std::string path = "$.field";
  long p = as_long(require(j, "p", path), member(path, "p"));
  const json& poly = require_array(require(j, "min_poly", path), member(path, "min_poly"));
  std::vector<Integer> coeffs;
  for (size_t i = 0; i < poly.size(); ++i) {
    Rational c = rational_from_json(poly[i], index(member(path, "min_poly"), i));
    if (c.get_den() != 1) throw SchemaError(index(member(path, "min_poly"), i), "not an integer");
    coeffs.push_back(c.get_num());
  }
  bool attested = false;
  if (auto it = j.find("certified"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError(member(path, "certified"), "expected a boolean");
    attested = it->get<bool>();
  }
  return at_path(path, [&] { return FieldSpec::make(p, coeffs, attested); });
}

json to_json(const FieldPtr& F) {
  json poly = json::array();
  for (const auto& c : F->min_poly()) poly.push_back(c.get_str());
  return {{"p", F->p()},
          {"min_poly", poly},
          {"certified", F->certification() != Certification::None},
          {"certification", std::string(to_string(F->certification()))}};
}

json to_json(const Rational& q) { return format_rational(q); }

FieldElement element_from_json(const json& j, const FieldPtr& F, const std::string& path) {
  if (!j.is_array()) return FieldElement(F, rational_from_json(j, path));
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < j.size(); ++i) coeffs.push_back(rational_from_json(j[i], index(path, i)));
  if (coeffs.size() > static_cast<size_t>(F->degree()))
    throw SchemaError(path, "more coefficients than the field degree");
  if (coeffs.empty()) return FieldElement::zero(F);
  return FieldElement(F, std::move(coeffs));
}

json to_json(const FieldElement& a) {
  json out = json::array();
  for (const auto& c : a.coeffs()) out.push_back(format_rational(c));
  return out;
}

namespace {
template <class V>
V vec_from_json(const json& j, const FieldPtr& F, size_t n, const std::string& path) {
  require_array(j, path, n);
  std::vector<FieldElement> v;
  for (size_t i = 0; i < n; ++i) v.push_back(element_from_json(j[i], F, index(path, i)));
  return V(std::move(v));
}
template <class V>
json vec_to_json(const V& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}
}  // namespace

VecF vecf_from_json(const json& j, const FieldPtr& F, size_t n, const std::string& path) {
  return vec_from_json<VecF>(j, F, n, path);
}
VecM vecm_from_json(const json& j, const FieldPtr& F, size_t n, const std::string& path) {
  return vec_from_json<VecM>(j, F, n, path);
}
json to_json(const VecF& v) { return vec_to_json(v); }
json to_json(const VecM& v) { return vec_to_json(v); }
json to_json(const IndexSet& s) { return s.elements(); }

Mat2 mat2_from_json(const json& j, const FieldPtr& F, const std::string& path) {
  auto entry = [&](const char* k) { return element_from_json(require(j, k, path), F, member(path, k)); };
  return {entry("a"), entry("b"), entry("c"), entry("d")};
}

Mat2F mat2f_from_json(const json& j, const FieldPtr& F, size_t f, const std::string& path) {
  auto entry = [&](const char* k) {
    return vecf_from_json(require(j, k, path), F, f, member(path, k));
  };
  return {entry("a"), entry("b"), entry("c"), entry("d")};
}

json to_json(const Mat2& M) {
  return {{"a", to_json(M.a)}, {"b", to_json(M.b)}, {"c", to_json(M.c)}, {"d", to_json(M.d)}};
}

json to_json(const Mat2F& M) {
  return {{"a", to_json(M.a)}, {"b", to_json(M.b)}, {"c", to_json(M.c)}, {"d", to_json(M.d)}};
}

Extension extension_from_json(const json& j) {
  const std::string path = "$.extension";
  Extension ext;
  long p = as_long(require(j, "p", path), member(path, "p"));
  if (auto it = j.find("builtin"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(member(path, "builtin"), "expected a string");
    const std::string kind = it->get<std::string>();
    auto opt = [&](const char* key, int dflt) {
      auto f = j.find(key);
      return f == j.end() ? dflt : as_int(*f, member(path, key));
    };
    int f = opt("f", 1), e = opt("e", 1), r = opt("r", 0);
    ext = at_path(path, [&] {
      if (kind == "trivial") return trivial_extension(p, f, e);
      if (kind == "unramified_cyclic") return unramified_cyclic(p, f, e, r ? r : f);
      if (kind == "ramified_cyclic") return ramified_cyclic(p, e, r ? r : e);
      throw SchemaError(member(path, "builtin"), "unknown builtin '" + kind + "'");
    });
  } else {
    ext.spec.p = p;
    ext.spec.f = as_int(require(j, "f", path), member(path, "f"));
    ext.spec.e = as_int(require(j, "e", path), member(path, "e"));
    ext.spec.nu = as_int(require(j, "nu", path), member(path, "nu"));
    const json& names = require_array(require(j, "elements", path), member(path, "elements"));
    for (size_t g = 0; g < names.size(); ++g) {
      if (!names[g].is_string())
        throw SchemaError(index(member(path, "elements"), g), "expected a name");
      ext.group.names.push_back(names[g].get<std::string>());
    }
    auto idx = element_index(ext.group);
    if (idx.size() != ext.group.order())
      throw SchemaError(member(path, "elements"), "duplicate element names");
    const size_t r = ext.group.order();
    const std::string mpath = member(path, "mult");
    const json& mult = require_array(require(j, "mult", path), mpath, r);
    for (size_t a = 0; a < r; ++a) {
      require_array(mult[a], index(mpath, a), r);
      std::vector<int> row;
      for (size_t b = 0; b < r; ++b) {
        const json& cell = mult[a][b];
        const std::string cpath = index(index(mpath, a), b);
        if (cell.is_string()) {
          auto f = idx.find(cell.get<std::string>());
          if (f == idx.end()) throw SchemaError(cpath, "unknown group element");
          row.push_back(f->second);
        } else {
          row.push_back(as_int(cell, cpath));
        }
      }
      ext.group.mult.push_back(row);
    }
    ext.group.pi = per_element<std::vector<int>>(
        require(j, "pi", path), ext.group, member(path, "pi"),
        [](const json& v, const std::string& p2) {
          std::vector<int> perm;
          for (long x : long_array(v, p2)) perm.push_back(static_cast<int>(x));
          return perm;
        });
    ext.group.n = per_element<int>(require(j, "n", path), ext.group, member(path, "n"),
                                   [](const json& v, const std::string& p2) { return as_int(v, p2); });
  }
  ensure_valid(validate_group(ext.spec, ext.group), path);
  return ext;
}

json to_json(const Extension& ext) {
  json pi = json::object(), n = json::object();
  for (size_t g = 0; g < ext.group.order(); ++g) {
    pi[ext.group.names[g]] = ext.group.pi[g];
    n[ext.group.names[g]] = ext.group.n[g];
  }
  return {{"p", ext.spec.p},     {"f", ext.spec.f},         {"e", ext.spec.e},
          {"nu", ext.spec.nu},   {"elements", ext.group.names}, {"mult", ext.group.mult},
          {"pi", pi},            {"n", n}};
}

GaloisAction action_from_json(const json& j, const FieldPtr& F, const GaloisGroup& G, size_t f) {
  const std::string path = "$.action";
  const json& v = require(j, "variant", path);
  if (!v.is_string()) throw SchemaError(member(path, "variant"), "expected a string");
  const std::string variant = v.get<std::string>();
  auto elems = [&](const char* key) {
    return per_element<FieldElement>(require(j, key, path), G, member(path, key),
                                     [&](const json& x, const std::string& p2) {
                                       return element_from_json(x, F, p2);
                                     });
  };
  if (variant == "diag_chars") return GaloisAction::diag_chars(elems("chi"), elems("psi"));
  if (variant == "scalar_char") return GaloisAction::scalar_char(elems("chi"));
  if (variant == "homomorphism")
    return GaloisAction::homomorphism(per_element<Mat2>(
        require(j, "lambda", path), G, member(path, "lambda"),
        [&](const json& x, const std::string& p2) { return mat2_from_json(x, F, p2); }));
  if (variant == "explicit")
    return GaloisAction::explicit_cocycle(per_element<Mat2F>(
        require(j, "cocycle", path), G, member(path, "cocycle"),
        [&](const json& x, const std::string& p2) { return mat2f_from_json(x, F, f, p2); }));
  throw SchemaError(member(path, "variant"), "unknown variant '" + variant + "'");
}

json to_json(const GaloisAction& act, const GaloisGroup& G) {
  json out = {{"variant", std::string(to_string(act.variant))}};
  switch (act.variant) {
    case ActionVariant::DiagChars:
      out["chi"] = keyed(G, act.chi);
      out["psi"] = keyed(G, act.psi);
      break;
    case ActionVariant::ScalarChar: out["chi"] = keyed(G, act.chi); break;
    case ActionVariant::Homomorphism: out["lambda"] = keyed(G, act.lambda); break;
    case ActionVariant::Explicit: out["cocycle"] = keyed(G, act.cocycle); break;
  }
  return out;
}

namespace {

std::vector<FieldElement> element_list(const json& j, const FieldPtr& F, const std::string& path) {
  require_array(j, path);
  std::vector<FieldElement> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(element_from_json(j[i], F, index(path, i)));
  return out;
}

std::vector<FieldElement> optional_hints(const json& j, const FieldPtr& F, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return {};
  return element_list(*it, F, member("$", key));
}

}  // namespace

FilteredModule module_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected a module document");
  FieldPtr F = field_from_json(require(j, "field", "$"));
  Extension ext = extension_from_json(require(j, "extension", "$"));
  const size_t f = static_cast<size_t>(ext.spec.f), m = static_cast<size_t>(ext.spec.m());

  FilteredModule D;
  D.group = ext.group;
  D.phi.field = F;
  D.phi.ext = ext.spec;
  D.phi.frob = mat2f_from_json(require(j, "frobenius", "$"), F, f, "$.frobenius");
  if (auto it = j.find("monodromy"); it != j.end())
    D.phi.mono = mat2f_from_json(*it, F, f, "$.monodromy");
  else
    D.phi.mono = Mat2F::zero(F, f);
  if (auto it = j.find("action"); it != j.end())
    D.action = action_from_json(*it, F, ext.group, f);
  else
    D.action = GaloisAction::trivial(F, ext.group.order());
  D.hints = optional_hints(j, F, "hints");

  std::vector<long> k = long_array(require(j, "weights", "$"), "$.weights");
  if (k.size() != m) throw SchemaError("$.weights", "expected m = e f = " + std::to_string(m) + " entries");
  std::vector<long> lower;
  if (auto it = j.find("lower"); it != j.end()) lower = long_array(*it, "$.lower");
  WeightData w = at_path("$.weights", [&] { return weight_profile(k, lower); });

  const json& fil = require(j, "filtration", "$");
  if (fil.contains("seeds")) {
    const std::string sp = "$.filtration.seeds";
    const json& seeds = require_array(fil["seeds"], sp);
    std::vector<Seed> sv;
    for (size_t i = 0; i < seeds.size(); ++i) {
      require_array(seeds[i], index(sp, i), 2);
      sv.emplace_back(element_from_json(seeds[i][0], F, index(index(sp, i), 0)),
                      element_from_json(seeds[i][1], F, index(index(sp, i), 1)));
    }
    D.fil = at_path(sp, [&] { return build_stable_filtration(ext.spec, ext.group, D.action, w, sv); });
  } else {
    D.fil = {w, vecm_from_json(require(fil, "x", "$.filtration"), F, m, "$.filtration.x"),
             vecm_from_json(require(fil, "y", "$.filtration"), F, m, "$.filtration.y")};
  }
  ensure_valid(validate_module(D), "$");
  return D;
}

json to_json(const FilteredModule& D) {
  Extension ext{D.ext(), D.group};
  json out = {{"field", to_json(D.field())},
              {"extension", to_json(ext)},
              {"frobenius", to_json(D.phi.frob)},
              {"monodromy", to_json(D.phi.mono)},
              {"action", to_json(D.action, D.group)},
              {"weights", D.fil.weights.k},
              {"filtration", {{"x", to_json(D.fil.x)}, {"y", to_json(D.fil.y)}}}};
  bool shifted = false;
  for (long l : D.fil.weights.lower) shifted = shifted || l != 0;
  if (shifted) out["lower"] = D.fil.weights.lower;
  if (!D.hints.empty()) {
    json h = json::array();
    for (const auto& x : D.hints) h.push_back(to_json(x));
    out["hints"] = h;
  }
  return out;
}

RankOneModule rank_one_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected a rank-one document");
  FieldPtr F = field_from_json(require(j, "field", "$"));
  Extension ext = extension_from_json(require(j, "extension", "$"));
  const size_t m = static_cast<size_t>(ext.spec.m());
  std::vector<long> k = long_array(require(j, "weights", "$"), "$.weights");
  if (k.size() != m) throw SchemaError("$.weights", "expected m = e f entries");
  FieldElement u = element_from_json(require(j, "u", "$"), F, "$.u");
  std::vector<FieldElement> chi(ext.group.order(), FieldElement::one(F));
  if (auto it = j.find("chi"); it != j.end())
    chi = per_element<FieldElement>(*it, ext.group, "$.chi",
                                    [&](const json& x, const std::string& p2) {
                                      return element_from_json(x, F, p2);
                                    });
  if (auto it = j.find("pi_power"); it != j.end())
    return {F, ext.spec, ext.group, u, element_from_json(*it, F, "$.pi_power"), chi, k};
  return rank_one_with_weights(F, ext, k, u, chi, optional_hints(j, F, "witnesses"));
}

json to_json(const RankOneModule& R) {
  return {{"field", to_json(R.field)},
          {"extension", to_json(Extension{R.ext, R.group})},
          {"u", to_json(R.u)},
          {"pi_power", to_json(R.varpi)},
          {"weights", R.weights},
          {"chi", keyed(R.group, R.chi)}};
}

FamilyParams family_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected a family parameter document");
  FamilyParams P;
  P.field = field_from_json(require(j, "field", "$"));
  P.p = as_long(require(j, "p", "$"), "$.p");
  if (P.p != P.field->p()) throw SchemaError("$.p", "differs from the field prime");
  P.e = as_int(require(j, "e", "$"), "$.e");
  P.f = as_int(require(j, "f", "$"), "$.f");
  if (P.e < 1) throw SchemaError("$.e", "must be positive");
  if (P.f < 2) throw SchemaError("$.f", "families need f >= 2");
  P.a = element_from_json(require(j, "alpha", "$"), P.field, "$.alpha");
  P.pi = element_from_json(require(j, "pi", "$"), P.field, "$.pi");
  P.weights = long_array(require(j, "weights", "$"), "$.weights");
  P.witnesses = optional_hints(j, P.field, "witnesses");
  if (P.a.is_zero() || P.a.vp() <= 0) throw SchemaError("$.alpha", "alpha must lie in the maximal ideal");
  return P;
}

json to_json(const CanonicalForm& form) {
  json roots = json::array();
  for (auto r : form.roots) {
    switch (r) {
      case RootSource::Witness: roots.push_back("witness"); break;
      case RootSource::Zero: roots.push_back("zero"); break;
      case RootSource::MonomialSearch: roots.push_back("monomial_search"); break;
      case RootSource::QuadraticTower: roots.push_back("quadratic"); break;
    }
  }
  json out = {{"tag", std::string(to_string(form.tag))},
              {"alpha", to_json(form.alpha)},
              {"basechange", to_json(form.basechange)},
              {"roots", roots}};
  if (form.tag == CanonicalTag::SplitDiag) out["delta"] = to_json(form.delta);
  return out;
}

json to_json(const NormalizedModule& n) {
  return {{"module", to_json(n.module)},
          {"tag", std::string(to_string(n.shape.tag))},
          {"alpha", to_json(n.shape.alpha)},
          {"delta", to_json(n.shape.delta)},
          {"monodromy", n.shape.monodromy},
          {"basechange", to_json(n.basechange)}};
}

namespace {
json submodules(const std::vector<Submodule>& subs) {
  json out = json::array();
  for (const auto& s : subs) out.push_back(s.label());
  return out;
}
}  // namespace

json to_json(const WAReport& rep) {
  json conds = json::array();
  for (const auto& c : rep.conditions)
    conds.push_back({{"name", c.name},
                     {"newton", to_json(c.lhs)},
                     {"hodge", to_json(c.rhs)},
                     {"relation", c.equality ? "=" : ">="},
                     {"holds", c.holds()},
                     {"tight", c.tight()}});
  json out = {{"tag", std::string(to_string(rep.tag))},
              {"monodromy", rep.monodromy},
              {"weakly_admissible", rep.weakly_admissible},
              {"conditions", conds},
              {"witnesses", submodules(rep.witnesses)}};
  out["reducibility"] =
      rep.reducibility ? json(std::string(to_string(*rep.reducibility))) : json(nullptr);
  return out;
}

json to_json(const OracleVerdict& v) {
  json out = {{"weakly_admissible", v.weakly_admissible}, {"tight", submodules(v.tight)}};
  out["reducibility"] =
      v.reducibility ? json(std::string(to_string(*v.reducibility))) : json(nullptr);
  return out;
}

json to_json(const GaloisTypeLabel& t) {
  json out = {{"label", std::string(to_string(t.label))}};
  if (t.inner) out["inner"] = std::string(to_string(*t.inner));
  if (t.lambda_abelian) out["lambda_abelian"] = *t.lambda_abelian;
  return out;
}

json to_json(const IsoVerdict& v) {
  json out = {{"isomorphic", v.isomorphic}, {"branch", std::string(to_string(v.branch))}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

json to_json(const Fingerprint& fp) {
  return {{"tag", std::string(to_string(fp.tag))},
          {"monodromy", fp.monodromy},
          {"trace_phi_f", to_json(fp.trace_phi_f)},
          {"det_phi_f", to_json(fp.det_phi_f)},
          {"orbit_weights", fp.orbit_weights},
          {"line_data", fp.line_data}};
}

json to_json(const RankOneReport& rep) {
  return {{"weakly_admissible", rep.weakly_admissible},
          {"problems", rep.problems},
          {"t_newton", to_json(rep.t_newton)},
          {"t_hodge", format_rational(Rational(rep.t_hodge))}};
}

json to_json(const ValidationReport& rep) {
  return {{"ok", rep.ok}, {"problems", rep.problems}};
}

}  // namespace phimod::io
