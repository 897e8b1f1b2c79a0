#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "phimod/json_io.hpp"

namespace phimod::cli {

namespace {

using io::json;

struct Options {
  std::string format = "json";
  std::string out_path;
  bool oracle = false;
};

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::SchemaError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

std::string rational_text(const Rational& q) { return format_rational(q); }

// Table output: one "path: value" line per scalar leaf.
void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(),
                                         [](const json& x) { return x.is_structured(); })) {
    bool elements = std::all_of(j.begin(), j.end(), [](const json& x) {
      return x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_string(); });
    });
    if (elements) {
      os << prefix << ": " << j.dump() << "\n";
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& doc, const Options& opt, std::ostream& out) {
  std::ostringstream text;
  if (opt.format == "table")
    flatten(doc, "", text);
  else
    text << doc.dump(2) << "\n";
  if (opt.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw io::SchemaError(opt.out_path, "cannot write output file");
    f << text.str();
  }
}

json wa_summary(const FilteredModule& D) {
  NormalizedModule n = normalize(D);
  WAReport rep = check_wa(n.module);
  json out = io::to_json(rep);
  const Submodule full{SubKind::Full, std::nullopt};
  out["t_newton"] = rational_text(t_newton(n.module, full));
  out["t_hodge"] = rational_text(Rational(t_hodge(n.module.fil, full)));
  return out;
}

json oracle_block(const FilteredModule& D, const WAReport& rep) {
  OracleVerdict v = wa_oracle(normalize(D).module);
  json out = io::to_json(v);
  out["agrees"] = v.weakly_admissible == rep.weakly_admissible && v.reducibility == rep.reducibility;
  return out;
}

json cmd_normalize(const std::string& file) {
  return io::to_json(normalize(io::module_from_json(read_document(file))));
}

json cmd_check(const std::string& file, const Options& opt) {
  FilteredModule D = io::module_from_json(read_document(file));
  json out = {{"validation", io::to_json(validate_module(D))}, {"wa", wa_summary(D)}};
  if (opt.oracle) out["oracle"] = oracle_block(D, check_wa(normalize(D).module));
  return out;
}

json cmd_classify(const std::string& file, const Options& opt) {
  FilteredModule D = io::module_from_json(read_document(file));
  NormalizedModule n = normalize(D);
  WAReport rep = check_wa(n.module);
  json out = {{"f_class", std::string(to_string(f_class(D.phi.frob, D.hints)))},
              {"tag", std::string(to_string(n.shape.tag))},
              {"monodromy", n.shape.monodromy},
              {"weakly_admissible", rep.weakly_admissible},
              {"galois_type", io::to_json(galois_type_label(n.module))}};
  out["reducibility"] =
      rep.reducibility ? json(std::string(to_string(*rep.reducibility))) : json(nullptr);
  if (opt.oracle) out["oracle"] = oracle_block(D, rep);
  return out;
}

json cmd_isomorphic(const std::string& a, const std::string& b, const Options& opt) {
  FilteredModule A = io::module_from_json(read_document(a));
  FilteredModule B = io::module_from_json(read_document(b));
  IsoVerdict v = decide_isomorphic(A, B);
  json out = io::to_json(v);
  if (opt.oracle) {
    IsoVerdict w = isomorphic_by_linear_algebra(A, B);
    out["oracle"] = {{"isomorphic", w.isomorphic}, {"agrees", w.isomorphic == v.isomorphic}};
  }
  return out;
}

json cmd_enumerate(const std::string& file, size_t count, const Options& opt) {
  FamilyParams P = io::family_from_json(read_document(file));
  std::vector<FamilyMember> members = enumerate_family(P, count);
  json list = json::array();
  for (const auto& mem : members) {
    WAReport rep = check_wa(mem.module);
    json entry = {{"lambda", json::array()},
                  {"mu", json::array()},
                  {"weakly_admissible", rep.weakly_admissible}};
    for (const auto& x : mem.lambda) entry["lambda"].push_back(io::to_json(x));
    for (const auto& x : mem.mu) entry["mu"].push_back(io::to_json(x));
    entry["reducibility"] =
        rep.reducibility ? json(std::string(to_string(*rep.reducibility))) : json(nullptr);
    list.push_back(entry);
  }
  json pairs = json::array();
  bool agree = true;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      bool crit = family_criterion(members[i], members[j]);
      bool dec = decide_isomorphic(members[i].module, members[j].module).isomorphic;
      json pr = {{"pair", {i, j}}, {"criterion", crit}, {"decided", dec}};
      if (opt.oracle)
        pr["oracle"] = isomorphic_by_linear_algebra(members[i].module, members[j].module).isomorphic;
      agree = agree && crit == dec;
      pairs.push_back(pr);
    }
  auto [e0, e1] = family_roots(P);
  return {{"members", list},
          {"pairs", pairs},
          {"criterion_agrees", agree},
          {"roots", {io::to_json(e0), io::to_json(e1)}}};
}

json cmd_rank1(const std::string& mode, const std::vector<std::string>& files, const Options& opt) {
  if (mode == "wa") {
    if (files.size() != 1) throw io::SchemaError("rank1 wa", "expects exactly one file");
    return io::to_json(rank_one_wa(io::rank_one_from_json(read_document(files[0]))));
  }
  if (files.size() != 2) throw io::SchemaError("rank1 iso", "expects exactly two files");
  RankOneModule A = io::rank_one_from_json(read_document(files[0]));
  RankOneModule B = io::rank_one_from_json(read_document(files[1]));
  if (!same_field(A.field, B.field) || !(A.ext == B.ext) || !(A.group == B.group))
    fail(ErrorKind::PreconditionMismatch, "rank-one modules live over different data");
  json out = {{"isomorphic", rank_one_iso(A, B)}};
  if (opt.oracle) out["oracle"] = rank_one_iso_oracle(A, B);
  return out;
}

json cmd_invariants(const std::string& file) {
  FilteredModule D = io::module_from_json(read_document(file));
  NormalizedModule n = normalize(D);
  json subs = json::array();
  for (const auto& s : submodule_lattice(n.module))
    subs.push_back({{"submodule", s.label()},
                    {"rank", s.rank()},
                    {"t_hodge", rational_text(Rational(t_hodge(n.module.fil, s)))},
                    {"t_newton", rational_text(t_newton(n.module, s))}});
  return {{"fingerprint", io::to_json(iso_fingerprint(D))}, {"submodules", subs}};
}

json error_document(const Error& e) {
  json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (auto* small = dynamic_cast<const FieldTooSmall*>(&e)) err["hint"] = small->hint();
  if (auto* schema = dynamic_cast<const io::SchemaError*>(&e)) err["path"] = schema->path();
  return {{"error", err}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-two filtered phi-modules: normal forms, weak admissibility, isomorphism"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", opt.out_path, "Write the report to PATH");
  app.add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracles");
  app.fallthrough();

  std::string file, file2, mode;
  std::vector<std::string> files;
  size_t count = 5;
  auto* normalize_cmd = app.add_subcommand("normalize", "Canonical Frobenius and monodromy");
  normalize_cmd->add_option("file", file)->required();
  auto* check_cmd = app.add_subcommand("check", "Validation and weak admissibility");
  check_cmd->add_option("file", file)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Frobenius class, reducibility, type label");
  classify_cmd->add_option("file", file)->required();
  auto* iso_cmd = app.add_subcommand("isomorphic", "Decide isomorphism of two modules");
  iso_cmd->add_option("file1", file)->required();
  iso_cmd->add_option("file2", file2)->required();
  auto* enum_cmd = app.add_subcommand("enumerate", "Members of a crystalline family");
  enum_cmd->add_option("params", file)->required();
  enum_cmd->add_option("--count", count, "Number of members")->check(CLI::PositiveNumber);
  auto* rank1_cmd = app.add_subcommand("rank1", "Rank-one modules");
  rank1_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"wa", "iso"}));
  rank1_cmd->add_option("files", files)->required();
  auto* inv_cmd = app.add_subcommand("invariants", "Fingerprint and submodule invariants");
  inv_cmd->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return ValidationFailure;
  }

  try {
    json doc;
    if (*normalize_cmd) doc = cmd_normalize(file);
    else if (*check_cmd) doc = cmd_check(file, opt);
    else if (*classify_cmd) doc = cmd_classify(file, opt);
    else if (*iso_cmd) doc = cmd_isomorphic(file, file2, opt);
    else if (*enum_cmd) doc = cmd_enumerate(file, count, opt);
    else if (*rank1_cmd) doc = cmd_rank1(mode, files, opt);
    else doc = cmd_invariants(file);
    emit(doc, opt, out);
    return Ok;
  } catch (const Error& e) {
    json doc = error_document(e);
    try {
      emit(doc, opt, out);
    } catch (const Error&) {
      out << doc.dump(2) << "\n";
    }
    return e.kind() == ErrorKind::FieldTooSmall ? FieldTooSmallExit : ValidationFailure;
  } catch (const std::exception& e) {
    json doc = {{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    out << doc.dump(2) << "\n";
    return ValidationFailure;
  }
}

}  // namespace phimod::cli
