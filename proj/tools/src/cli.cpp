#include "frs_tools/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "frs/catalog.hpp"
#include "frs/error.hpp"
#include "frs/liealg.hpp"
#include "frs/matrixmodel.hpp"
#include "frs/rootsystem.hpp"
#include "frs_tools/io.hpp"

namespace frs::cli {

namespace {

using io::json;
using io::to_json;

struct Outcome {
  json inputs = json::object();
  json results = json::object();
  int code = pass;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint64_t env_cap(std::uint64_t fallback) {
  const char* v = std::getenv("FRS_CAP");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  errno = 0;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || cap == 0) throw InputError(std::string("FRS_CAP must be a positive integer, got ") + v);
  return cap;
}

struct Source {
  std::string type;
  std::string input;

  void add(CLI::App* cmd) {
    cmd->add_option("--type", type, "catalog tag, e.g. II:2");
    cmd->add_option("--input", input, "frs-1 JSON file");
  }

  RootSystem load(json& inputs) const {
    if (type.empty() == input.empty()) throw InputError("exactly one of --type and --input is required");
    if (!type.empty()) {
      inputs["type"] = CatalogTag::parse(type).to_string();
      return make(CatalogTag::parse(type));
    }
    inputs["input"] = input;
    return io::read_system_file(input);
  }
};

json axiom_json(const AxiomResult& a) {
  json j{{"axiom", a.axiom}, {"passed", a.passed}};
  if (!a.passed) {
    j["message"] = a.message;
    j["witness"] = to_json(a.witness);
  }
  return j;
}

Outcome cmd_verify(const Source& src) {
  Outcome o;
  auto sys = src.load(o.inputs);
  auto report = verify(sys);
  auto& r = o.results;
  r["orders"] = sys.group().orders();
  r["modulus"] = sys.group().exponent();
  r["roots"] = sys.size();
  r["axioms"] = json::array();
  for (const auto& a : report.axioms) r["axioms"].push_back(axiom_json(a));
  r["passed"] = report.passed();
  auto rad = radical(sys.beta());
  r["radical_order"] = rad.size();
  r["reduced"] = rad.size() == 1;
  if (report.passed()) {
    r["components"] = root_components(sys).size();
    r["irreducible"] = is_irreducible(sys);
    if (rad.size() > 1) {
      auto red = reduce(sys);
      r["quotient"] = json{{"orders", red.system.group().orders()},
                           {"invariant_factors", red.system.group().invariant_factors()},
                           {"roots", red.system.size()},
                           {"passed", verify(red.system).passed()}};
    }
  }
  o.code = report.passed() ? pass : failure;
  return o;
}

Outcome cmd_build(const Source& src, const std::string& checks) {
  Outcome o;
  auto sys = src.load(o.inputs);
  auto wanted = split_list(checks);
  o.inputs["checks"] = wanted;
  auto L = build_root(sys);
  auto& r = o.results;
  r["dimension"] = L.dimension();
  r["modulus"] = L.modulus();
  r["nonzero_brackets"] = L.bracket_table().size();
  r["checks"] = json::object();
  bool ok = true;
  for (const auto& c : wanted) {
    if (c == "jacobi") {
      auto j = check_jacobi(L);
      json e{{"passed", j.holds}, {"triples", j.triples}};
      if (!j.holds) {
        e["witness"] = to_json(j.witness);
        e["residual"] = to_json(*j.residual);
      }
      ok = ok && j.holds;
      r["checks"]["jacobi"] = e;
    } else if (c == "killing") {
      auto k = killing(L);
      json values = json::array();
      for (const auto& e : k.entries)
        values.push_back(json{{"root", to_json(e.root)},
                              {"trace", to_json(e.trace)},
                              {"sum_formula", to_json(*e.sum_formula)},
                              {"twist", to_json(*e.twist)}});
      r["checks"]["killing"] = json{{"passed", k.nondegenerate},
                                    {"nondegenerate", k.nondegenerate},
                                    {"trace_equals_twist_times_sum", true},
                                    {"sum_formula_equals_trace", k.formula_equals_trace},
                                    {"sum_formula_positive", k.formula_positive},
                                    {"trace_positive", k.trace_positive},
                                    {"values", values}};
      ok = ok && k.nondegenerate;
    } else if (c == "center") {
      auto z = center(L);
      auto d = derived(L);
      auto rad = radical(sys.beta());
      std::vector<GroupElement> rad_support, rest;
      for (const auto& a : L.support())
        (std::binary_search(rad.begin(), rad.end(), a) ? rad_support : rest).push_back(a);
      bool passed = z == rad_support && d == rest;
      r["checks"]["center"] = json{{"passed", passed},
                                   {"center", to_json(z)},
                                   {"derived_dimension", d.size()},
                                   {"radical_in_support", to_json(rad_support)}};
      ok = ok && passed;
    } else {
      throw InputError("unknown check \"" + c + "\" (jacobi, killing, center)");
    }
  }
  r["passed"] = ok;
  o.code = ok ? pass : failure;
  return o;
}

Outcome cmd_weyl(const Source& src, std::uint64_t cap) {
  Outcome o;
  auto sys = src.load(o.inputs);
  o.inputs["cap"] = cap;
  WeylEnumerator e(sys);
  auto status = e.run(static_cast<std::size_t>(cap));
  auto& r = o.results;
  r["status"] = status == EnumerationStatus::Complete ? "complete" : "cap_exceeded";
  r["order"] = e.size();
  r["generators"] = e.generators().size();
  bool matches = true;
  if (!src.type.empty()) {
    auto exp = expected(CatalogTag::parse(src.type));
    r["expected_label"] = exp.weyl_label;
    if (exp.weyl_order) {
      r["expected_order"] = *exp.weyl_order;
      if (status == EnumerationStatus::Complete) {
        matches = e.size() == *exp.weyl_order;
        r["matches_expected"] = matches;
      }
    } else {
      r["expected_order"] = nullptr;
    }
  }
  o.code = !matches ? failure : status == EnumerationStatus::Complete ? pass : exhausted;
  return o;
}

Outcome cmd_iso(const std::string& left, const std::string& right, std::uint64_t budget) {
  Outcome o;
  auto lt = CatalogTag::parse(left), rt = CatalogTag::parse(right);
  o.inputs["left"] = lt.to_string();
  o.inputs["right"] = rt.to_string();
  o.inputs["budget"] = budget;
  auto res = find_isomorphism(make(lt), make(rt), budget);
  auto& r = o.results;
  r["status"] = to_string(res.status);
  r["reason"] = res.reason;
  r["nodes"] = res.nodes;
  if (res.map) r["map"] = json{{"matrix", to_json(res.map->matrix())}, {"certified", true}};
  bool matches = true;
  for (const auto& c : coincidences()) {
    if ((c.left == lt && c.right == rt) || (c.left == rt && c.right == lt)) {
      r["expected"] = c.isomorphic ? "isomorphic" : "not_isomorphic";
      if (res.status != IsomorphismStatus::BudgetExceeded) {
        matches = (res.status == IsomorphismStatus::Found) == c.isomorphic;
        r["matches_expected"] = matches;
      }
    }
  }
  o.code = !matches ? failure : res.status == IsomorphismStatus::BudgetExceeded ? exhausted : pass;
  return o;
}

Outcome cmd_catalog(std::size_t max_dim, bool weyl, std::uint64_t cap) {
  Outcome o;
  o.inputs["max_dim"] = max_dim;
  o.inputs["weyl"] = weyl;
  if (weyl) o.inputs["cap"] = cap;
  json entries = json::array();
  bool all = true, capped = false;
  for (const auto& tag : enumerate(max_dim)) {
    auto exp = expected(tag);
    auto sys = make(tag);
    bool verified = verify(sys).passed();
    auto rad = radical(sys.beta());
    bool irreducible = verified && is_irreducible(sys);
    json computed{{"orders", sys.group().orders()},
                  {"roots", sys.size()},
                  {"dimension", sys.size()},
                  {"verified", verified},
                  {"reduced", rad.size() == 1},
                  {"irreducible", irreducible}};
    bool match = verified && exp.group_orders == sys.group().orders() && exp.root_count == sys.size() &&
                 exp.dimension == sys.size() && exp.reduced == (rad.size() == 1) && exp.irreducible == irreducible;
    if (weyl) {
      WeylEnumerator e(sys);
      auto st = e.run(static_cast<std::size_t>(cap));
      if (st == EnumerationStatus::Complete) {
        computed["weyl_order"] = e.size();
        if (exp.weyl_order) match = match && e.size() == *exp.weyl_order;
      } else {
        computed["weyl_order"] = "cap_exceeded";
        capped = true;
      }
    }
    json expj{{"orders", exp.group_orders},
              {"roots", exp.root_count},
              {"dimension", exp.dimension},
              {"lie_type", exp.lie_type},
              {"reduced", exp.reduced},
              {"irreducible", exp.irreducible},
              {"weyl_label", exp.weyl_label}};
    expj["weyl_order"] = exp.weyl_order ? json(*exp.weyl_order) : json(nullptr);
    entries.push_back(json{{"type", tag.to_string()},
                           {"display", tag.display()},
                           {"expected", expj},
                           {"computed", computed},
                           {"matches", match}});
    all = all && match;
  }
  o.results["count"] = entries.size();
  o.results["entries"] = entries;
  o.results["all_match"] = all;
  o.code = !all ? failure : capped ? exhausted : pass;
  return o;
}

// chi in {0,1}^rank with sign(a) = (-1)^{chi . a} on the roots, if any
json sign_character(const MatrixModel& m) {
  const auto& roots = m.algebra.support();
  const std::size_t rank = m.algebra.group().rank();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < roots.size() && ok; ++i) {
      Int dot = 0;
      for (std::size_t j = 0; j < rank; ++j)
        if (mask >> j & 1) dot += roots[i].coords[j];
      ok = (*m.transpose_signs)[i] == (dot % 2 == 0 ? 1 : -1);
    }
    if (ok) {
      std::vector<int> chi;
      for (std::size_t j = 0; j < rank; ++j) chi.push_back(static_cast<int>(mask >> j & 1));
      return chi;
    }
  }
  return nullptr;
}

json support_check(const MatrixModel& m) {
  const auto& L = m.algebra;
  bool passed = true;
  json j = json::object();
  switch (m.tag.family) {
    case Family::I:
    case Family::Iprime: {
      bool traceless = true;
      for (const auto& a : m.images) traceless = traceless && m.grading.matrix(a).trace().is_zero();
      bool covers = m.grading.size() + 1 == m.grading.group().order() && L.dimension() == m.grading.size();
      j["rule"] = "support = G \\ {0}, traceless";
      j["traceless"] = traceless;
      j["covers"] = covers;
      passed = traceless && covers;
      if (m.transpose_signs) {
        json signs = json::array();
        for (std::size_t i = 0; i < L.dimension(); ++i)
          signs.push_back(json{{"root", to_json(L.support()[i])}, {"sign", (*m.transpose_signs)[i]}});
        j["transpose_signs"] = signs;
        j["sign_character"] = sign_character(m);
      }
      break;
    }
    case Family::II:
    case Family::IVprime:
    case Family::IV: {
      bool skew = true;
      for (const auto& a : m.images) {
        const auto& x = m.grading.matrix(a);
        skew = skew && x.transpose() == -x;
      }
      const std::size_t n = m.grading.matrix_size();
      bool covers = L.dimension() == n * (n - 1) / 2;
      j["rule"] = "2(E_ij - E_ji), one per pair i < j";
      j["skew_symmetric"] = skew;
      j["covers"] = covers;
      passed = skew && covers;
      break;
    }
    case Family::III:
    case Family::V: {
      bool use_f = m.tag.family == Family::III;
      bool anti = true;
      for (const auto& a : m.images) {
        const auto& x = m.grading.matrix(a);
        anti = anti && m.involution->apply(x) == -x;
      }
      std::vector<GroupElement> level;
      for (const auto& a : L.group().elements())
        if ((use_f ? quadratic_f(a) : quadratic_g(a)) == 1) level.push_back(a);
      bool equal = level == L.support();
      j["rule"] = use_f ? "K(M,*) = {f = 1}" : "K(M,*) = {g = 1}";
      j["form"] = m.involution->symmetric() ? "symmetric" : "skew";
      j["anti_fixed"] = anti;
      j["matches_quadratic_form"] = equal;
      j["size"] = level.size();
      passed = anti && equal;
      break;
    }
  }
  json out{{"passed", passed}};
  out.update(j);
  return out;
}

Outcome cmd_matrix(const std::string& type, const std::string& checks) {
  Outcome o;
  auto tag = CatalogTag::parse(type);
  auto wanted = split_list(checks);
  o.inputs["type"] = tag.to_string();
  o.inputs["verify"] = wanted;
  auto m = matrix_model(tag);
  auto& r = o.results;
  r["target"] = m.target;
  r["matrix_size"] = m.grading.matrix_size();
  r["dimension"] = m.algebra.dimension();
  r["checks"] = json::object();
  bool ok = true;
  for (const auto& c : wanted) {
    if (c == "iso") {
      auto iso = verify_iso(m.algebra, m.grading, m.images, m.scalars);
      json e{{"passed", iso.holds}, {"pairs", iso.pairs}};
      if (!iso.holds) {
        e["witness"] = to_json(iso.witness);
        e["message"] = iso.message;
      }
      bool trivial = std::all_of(m.scalars.begin(), m.scalars.end(), [](const CyclotomicNumber& s) {
        return s == CyclotomicNumber::integer(s.modulus(), 1);
      });
      e["unit_scalars"] = trivial;
      ok = ok && iso.holds;
      r["checks"]["iso"] = e;
    } else if (c == "action") {
      auto d = verify_dual_action(m.grading, m.generators);
      json e{{"passed", d.holds && d.separates},
             {"generators", m.generators.size()},
             {"preserves_components", d.holds},
             {"separates", d.separates}};
      if (!d.message.empty()) {
        e["message"] = d.message;
        e["witness"] = to_json(d.witness);
      }
      ok = ok && d.holds && d.separates;
      r["checks"]["action"] = e;
    } else if (c == "support") {
      auto e = support_check(m);
      ok = ok && e["passed"].get<bool>();
      r["checks"]["support"] = e;
    } else {
      throw InputError("unknown check \"" + c + "\" (iso, action, support)");
    }
  }
  r["passed"] = ok;
  o.code = ok ? pass : failure;
  return o;
}

json cmd_dump(const Source& src, const std::string& what) {
  json inputs;
  if (what == "system") return io::system_document(src.load(inputs));
  if (what == "brackets") return io::bracket_document(build_root(src.load(inputs)));
  if (what == "matrices") {
    if (src.type.empty()) throw InputError("matrix dumps need --type");
    return io::model_document(matrix_model(CatalogTag::parse(src.type)));
  }
  throw InputError("unknown dump \"" + what + "\" (system, brackets, matrices)");
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_object() || (x.is_array() && !flat_array(x))) return false;
  return true;
}

void flatten(const json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array() && !flat_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << scalar_text(v) << "\n";
  }
}

void catalog_table(const json& results, std::ostream& out) {
  out << std::left << std::setw(10) << "type" << std::setw(12) << "lie" << std::setw(7) << "|R|" << std::setw(9)
      << "reduced" << std::setw(12) << "irreducible" << std::setw(14) << "weyl" << std::setw(10) << "order"
      << "match\n";
  for (const auto& e : results["entries"]) {
    const auto& x = e["expected"];
    const auto& c = e["computed"];
    std::string order = x["weyl_order"].is_null() ? "-" : x["weyl_order"].dump();
    if (c.contains("weyl_order")) order = scalar_text(c["weyl_order"]) + "/" + order;
    out << std::setw(10) << e["display"].get<std::string>() << std::setw(12) << x["lie_type"].get<std::string>()
        << std::setw(7) << c["roots"].dump() << std::setw(9) << c["reduced"].dump() << std::setw(12)
        << c["irreducible"].dump() << std::setw(14) << x["weyl_label"].get<std::string>() << std::setw(10) << order
        << (e["matches"].get<bool>() ? "yes" : "NO") << "\n";
  }
  out << "all_match: " << results["all_match"].dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite root systems over symplectic abelian groups", "frs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  add_format(&app);

  Source src;
  std::string checks, left, right, what = "system";
  std::uint64_t cap = 0, budget = 0;
  std::size_t max_dim = 63;
  bool weyl = false;

  auto* verify_cmd = app.add_subcommand("verify", "check the FRS axioms");
  src.add(verify_cmd);
  add_format(verify_cmd);

  auto* build_cmd = app.add_subcommand("build", "build L(R) and run checks");
  src.add(build_cmd);
  checks = "jacobi,killing,center";
  build_cmd->add_option("--check", checks, "comma list of jacobi, killing, center");
  add_format(build_cmd);

  auto* weyl_cmd = app.add_subcommand("weyl", "enumerate W(R)");
  src.add(weyl_cmd);
  weyl_cmd->add_option("--cap", cap, "element cap");
  add_format(weyl_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two catalog entries");
  iso_cmd->add_option("--left", left)->required();
  iso_cmd->add_option("--right", right)->required();
  iso_cmd->add_option("--budget", budget, "search node budget");
  add_format(iso_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "expected-vs-computed table");
  catalog_cmd->add_option("--max-dim", max_dim, "largest dim L(R)");
  catalog_cmd->add_flag("--weyl", weyl, "also enumerate Weyl groups");
  catalog_cmd->add_option("--cap", cap, "element cap per Weyl group");
  add_format(catalog_cmd);

  std::string matrix_checks = "iso,action,support";
  auto* matrix_cmd = app.add_subcommand("matrix", "verify a matrix realization");
  matrix_cmd->add_option("--type", src.type, "catalog tag")->required();
  matrix_cmd->add_option("--verify", matrix_checks, "comma list of iso, action, support");
  add_format(matrix_cmd);

  auto* dump_cmd = app.add_subcommand("dump", "print a system, bracket table or matrices as JSON");
  src.add(dump_cmd);
  dump_cmd->add_option("--what", what, "system, brackets or matrices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? pass : bad_input;
  }

  auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "dump") {
      out << cmd_dump(src, what).dump(2) << "\n";
      return pass;
    }
    if (command == "verify") {
      o = cmd_verify(src);
    } else if (command == "build") {
      o = cmd_build(src, checks);
    } else if (command == "weyl") {
      o = cmd_weyl(src, cap ? cap : env_cap(default_weyl_cap));
    } else if (command == "iso") {
      o = cmd_iso(left, right, budget ? budget : env_cap(default_isomorphism_budget));
    } else if (command == "catalog") {
      o = cmd_catalog(max_dim, weyl, cap ? cap : env_cap(default_weyl_cap));
    } else if (command == "matrix") {
      o = cmd_matrix(src.type, matrix_checks);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const BadParameters& e) {
    err << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const InvalidBicharacter& e) {
    err << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const InvalidElement& e) {
    err << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report{{"schema", report_schema},
              {"tool_version", tool_version},
              {"command", command},
              {"inputs", o.inputs},
              {"results", o.results},
              {"timings", {{"total_ms", std::round(ms * 1000) / 1000}}},
              {"exit_code", o.code}};
  if (format == "table") {
    if (command == "catalog") {
      catalog_table(o.results, out);
    } else {
      flatten(json{{"command", command}, {"inputs", o.inputs}, {"results", o.results}}, "", out);
    }
    out << "total_ms: " << report["timings"]["total_ms"].dump() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace frs::cli
