#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "phimod/isoclass.hpp"

namespace phimod::io {

// std::map-backed objects, so dumps have sorted keys.
using json = nlohmann::json;

/// Schema violation; `path()` points at the offending member.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(ErrorKind::InvalidInput, path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// { "p", "min_poly": [constant first], "certified"? }. "certified": true
// attests the single prime above p when no test succeeds.
FieldPtr field_from_json(const json& j);
json to_json(const FieldPtr& F);

// Elements are arrays of rationals, constant first. Rationals are
// "num/den" strings on output; integers and "a" strings are accepted.
FieldElement element_from_json(const json& j, const FieldPtr& F, const std::string& path = "$");
json to_json(const FieldElement& a);
json to_json(const Rational& q);

VecF vecf_from_json(const json& j, const FieldPtr& F, size_t n, const std::string& path);
VecM vecm_from_json(const json& j, const FieldPtr& F, size_t n, const std::string& path);
json to_json(const VecF& v);
json to_json(const VecM& v);
json to_json(const IndexSet& s);

Mat2 mat2_from_json(const json& j, const FieldPtr& F, const std::string& path);
Mat2F mat2f_from_json(const json& j, const FieldPtr& F, size_t f, const std::string& path);
json to_json(const Mat2& M);
json to_json(const Mat2F& M);

// Either the explicit table form
//   { "p", "f", "e", "nu", "elements", "mult", "pi": {g: perm}, "n": {g: int} }
// or { "builtin": "trivial" | "unramified_cyclic" | "ramified_cyclic", "p", "f", "e", "r"? }.
// The group is validated before it is returned.
Extension extension_from_json(const json& j);
json to_json(const Extension& ext);

GaloisAction action_from_json(const json& j, const FieldPtr& F, const GaloisGroup& G, size_t f);
json to_json(const GaloisAction& act, const GaloisGroup& G);

// Self-contained module document:
//   { "field", "extension", "frobenius", "monodromy"?, "action"?, "weights",
//     "lower"?, "filtration": {"x", "y"} | {"seeds": [[x, y], ...]}, "hints"? }
// Everything is validated, including G-stability of the filtration.
FilteredModule module_from_json(const json& j);
json to_json(const FilteredModule& D);

// { "field", "extension", "u", "pi_power"?, "weights", "chi"? }. Without
// "pi_power" an m-th root of p^{sum k} is looked up in E.
RankOneModule rank_one_from_json(const json& j);
json to_json(const RankOneModule& R);

// { "field", "p", "e", "f", "alpha", "pi", "weights", "witnesses"? }
FamilyParams family_from_json(const json& j);

json to_json(const CanonicalForm& form);
json to_json(const NormalizedModule& n);
json to_json(const WAReport& rep);
json to_json(const OracleVerdict& v);
json to_json(const GaloisTypeLabel& t);
json to_json(const IsoVerdict& v);
json to_json(const Fingerprint& fp);
json to_json(const RankOneReport& rep);
json to_json(const ValidationReport& rep);

/// Parses text, mapping syntax errors to SchemaError.
json parse(const std::string& text);

}  // namespace phimod::io
