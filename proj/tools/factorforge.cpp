// factorforge command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 input or validation error,
// 3 proven nonexistence, 4 node budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "factorforge/catalog.hpp"
#include "factorforge/combinators.hpp"
#include "factorforge/error.hpp"
#include "factorforge/numeric.hpp"
#include "factorforge/report.hpp"
#include "factorforge/ring.hpp"
#include "factorforge/search.hpp"
#include "factorforge/structure.hpp"
#include "factorforge/suite.hpp"

namespace ff = factorforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNone = 3;
constexpr int kExitBudget = 4;

struct Loaded {
  ff::GroupTable table;
  std::optional<ff::CatalogRecord> record;
  std::string id;
};

Loaded load_group(const std::string& name, const std::string& catalog_path, int cap) {
  if (!catalog_path.empty()) {
    const ff::Catalog cat = ff::Catalog::load(catalog_path);
    if (const auto* r = cat.find(name)) return {cat.build(*r, cap), *r, name};
  }
  const ff::Catalog& reg = ff::Catalog::bundled();
  if (const auto* r = reg.find(name)) return {reg.build(*r, cap), *r, name};
  return {ff::named_group(name, cap), std::nullopt, name};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FACTORFORGE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ff::Error(ff::ErrorCode::ParseError, "FACTORFORGE_BUDGET must be a number");
    }
  }
  return 0;
}

json labels_json(const ff::GroupTable& g, const ff::ElementSet& s) {
  json out = json::array();
  s.for_each([&](int x) { out.push_back(g.label(static_cast<ff::Elem>(x))); });
  return out;
}

json factorization_json(const ff::GroupTable& g, const ff::Factorization& f) {
  json out = json::array();
  for (const auto& factor : f.factors) out.push_back(labels_json(g, factor));
  return out;
}

void print_factorization(const ff::GroupTable& g, const ff::Factorization& f) {
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    std::cout << "  A" << i + 1 << " = {";
    bool first = true;
    f.factors[i].for_each([&](int x) {
      std::cout << (first ? "" : ", ") << g.label(static_cast<ff::Elem>(x));
      first = false;
    });
    std::cout << "}\n";
  }
}

struct Common {
  std::string group;
  std::string catalog;
  int cap = ff::kDefaultOrderCap;
  bool json = false;
};

void add_group_options(CLI::App* cmd, Common& c, bool positional = true) {
  if (positional) cmd->add_option("group", c.group, "registry id, catalog id or family name (C12, S4, D5, G(8))")->required();
  cmd->add_option("--catalog", c.catalog, "JSON-lines catalog to resolve ids against");
  cmd->add_option("--cap", c.cap, "largest order to construct")->check(CLI::Range(1, ff::kMaxOrder));
  cmd->add_flag("--json", c.json, "machine-readable output");
}

int cmd_construct(const Common& c, const std::string& dump) {
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const ff::GroupTable& g = l.table;
  if (c.json) {
    json out{{"group", l.id}, {"order", g.order()}, {"labels", g.labels()}};
    json gens = json::object();
    for (const auto& gen : g.generators()) gens[gen.name] = g.label(gen.element);
    out["generators"] = gens;
    if (dump == "table") out["table"] = g.table();
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << l.id << ": order " << g.order() << '\n';
  for (const auto& gen : g.generators()) std::cout << "  " << gen.name << " = " << g.label(gen.element) << '\n';
  if (dump == "labels") {
    for (int x = 0; x < g.order(); ++x) std::cout << x << ' ' << g.label(static_cast<ff::Elem>(x)) << '\n';
  } else if (dump == "table") {
    for (int x = 0; x < g.order(); ++x) {
      for (int y = 0; y < g.order(); ++y)
        std::cout << (y ? " " : "") << g.mul(static_cast<ff::Elem>(x), static_cast<ff::Elem>(y));
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_info(const Common& c) {
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const ff::GroupTable& g = l.table;
  std::vector<int> class_sizes;
  for (const auto& cls : ff::conjugacy_classes(g)) class_sizes.push_back(static_cast<int>(cls.size()));
  json sylow = json::object();
  for (int p : ff::prime_factors(g.order()))
    if (!sylow.contains(std::to_string(p))) sylow[std::to_string(p)] = ff::sylow(g, p).count();
  json out{{"group", l.id},
           {"order", g.order()},
           {"class_sizes", class_sizes},
           {"center_order", ff::center(g).count()},
           {"sylow_orders", sylow},
           {"supersolvable", ff::is_supersolvable(g)},
           {"clt", ff::is_clt(g)}};
  if (g.order() % 2 == 0) {
    const auto ic = ff::involution_criterion(g);
    out["involution_criterion"] = {{"holds", ic.holds()},
                                   {"sylow2_elementary_abelian", ic.sylow2_elementary_abelian},
                                   {"involutions_conjugate", ic.involutions_conjugate},
                                   {"centralizer_splits", ic.centralizer_splits}};
  } else {
    out["involution_criterion"] = nullptr;
  }
  if (c.json) {
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << l.id << ": order " << g.order() << "\n  class sizes:";
  for (int s : class_sizes) std::cout << ' ' << s;
  std::cout << "\n  center order: " << out["center_order"] << "\n  sylow orders:";
  for (const auto& [p, n] : sylow.items()) std::cout << ' ' << p << "->" << n;
  std::cout << "\n  supersolvable: " << (out["supersolvable"].get<bool>() ? "yes" : "no")
            << "\n  CLT: " << (out["clt"].get<bool>() ? "yes" : "no") << "\n  involution criterion: ";
  if (out["involution_criterion"].is_null()) std::cout << "n/a (odd order)\n";
  else std::cout << (out["involution_criterion"]["holds"].get<bool>() ? "holds" : "fails") << '\n';
  return kExitOk;
}

int cmd_factorize(const Common& c, const std::string& shape_text, ff::SearchOptions opts) {
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const ff::FactorShape shape = ff::FactorShape::parse(shape_text);
  const auto r = ff::find_factorization(l.table, shape, opts);
  if (c.json) {
    json out{{"group", l.id},
             {"order", l.table.order()},
             {"shape", shape_text},
             {"verdict", ff::to_string(r.verdict)},
             {"method", r.method},
             {"witness", r.witness ? factorization_json(l.table, *r.witness) : json(nullptr)},
             {"digest", r.witness ? json(ff::digest(*r.witness)) : json(nullptr)},
             {"stats", ff::stats_json(r.stats)}};
    std::cout << out.dump(2) << '\n';
  } else if (r.verdict == ff::Verdict::Found) {
    std::cout << "(" << shape.to_string() << ")-factorization of " << l.id << " [" << r.method << "]\n";
    print_factorization(l.table, *r.witness);
  } else if (r.verdict == ff::Verdict::None) {
    std::cout << "no (" << shape.to_string() << ")-factorization of " << l.id << " (complete search, "
              << r.stats.nodes << " nodes)\n";
  } else {
    std::cout << "undecided: node budget of " << opts.node_budget << " exhausted\n";
  }
  return r.verdict == ff::Verdict::Found ? kExitOk : r.verdict == ff::Verdict::None ? kExitNone : kExitBudget;
}

int cmd_multifold(const Common& c, const ff::SearchOptions& opts) {
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const auto r = ff::is_multifold(l.table, opts);
  if (c.json) {
    json w = json::array();
    for (const auto& [shape, f] : r.witnesses)
      w.push_back({{"shape", shape.to_string()}, {"digest", ff::digest(f)}, {"factors", factorization_json(l.table, f)}});
    json out{{"group", l.id},
             {"order", l.table.order()},
             {"multifold", r.verdict == ff::Verdict::Found ? "yes" : r.verdict == ff::Verdict::None ? "no" : "undecided"},
             {"failing_shape", r.failing_shape ? json(r.failing_shape->to_string()) : json(nullptr)},
             {"failing_proof", r.failing_shape ? json(r.failing_proof) : json(nullptr)},
             {"witnesses", w},
             {"stats", ff::stats_json(r.stats)}};
    std::cout << out.dump(2) << '\n';
  } else if (r.verdict == ff::Verdict::Found) {
    std::cout << l.id << " is multifold-factorizable\n";
    for (const auto& [shape, f] : r.witnesses) {
      std::cout << " (" << shape.to_string() << ")\n";
      print_factorization(l.table, f);
    }
  } else if (r.verdict == ff::Verdict::None) {
    std::cout << l.id << " is not multifold-factorizable: no (" << r.failing_shape->to_string()
              << ")-factorization [" << r.failing_proof << "]\n";
  } else {
    std::cout << l.id << ": undecided within the node budget\n";
  }
  return r.verdict == ff::Verdict::Found ? kExitOk : r.verdict == ff::Verdict::None ? kExitNone : kExitBudget;
}

int cmd_dcoset(const Common& c, const std::string& a_spec, const std::string& b_spec) {
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const ff::CatalogRecord* rec = l.record ? &*l.record : nullptr;
  const ff::ElementSet a = ff::resolve_subgroup_spec(l.table, a_spec, rec);
  const ff::ElementSet b = ff::resolve_subgroup_spec(l.table, b_spec, rec);
  const auto r = ff::double_coset_factorization(l.table, a, b);
  if (c.json) {
    json out{{"group", l.id},
             {"a", labels_json(l.table, a)},
             {"b", labels_json(l.table, b)},
             {"refused", !r.factorization.has_value()}};
    if (r.factorization) {
      out["shape"] = r.factorization->shape().to_string();
      out["transversal"] = labels_json(l.table, r.factorization->factors[1]);
    } else {
      out["violating"] = l.table.label(*r.violating);
    }
    std::cout << out.dump(2) << '\n';
  } else if (r.factorization) {
    std::cout << "(" << r.factorization->shape().to_string() << ")-factorization A . T . B\n";
    print_factorization(l.table, *r.factorization);
  } else {
    std::cout << "refused: |A x B| < |A||B| for x = " << l.table.label(*r.violating) << '\n';
  }
  return r.factorization ? kExitOk : kExitNone;
}

int cmd_algebra(Common c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ff::Error(ff::ErrorCode::ParseError, "cannot open identity file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (c.group.empty()) {
    // Fall back to the "# group:" header.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.rfind("# group:", 0) == 0) {
        c.group = line.substr(8);
        c.group.erase(0, c.group.find_first_not_of(' '));
        c.group.erase(c.group.find_last_not_of(" \r") + 1);
      }
    if (c.group.empty()) throw ff::Error(ff::ErrorCode::ParseError, "no group given and no '# group:' header");
  }
  const Loaded l = load_group(c.group, c.catalog, c.cap);
  const ff::FormalProduct p = ff::parse_identity(l.table, text);
  const auto check = ff::verify_identity(l.table, p);
  std::optional<ff::Factorization> f;
  if (check.holds) f = ff::identity_to_factorization(l.table, p);
  if (c.json) {
    json out{{"group", l.id}, {"factors", p.factors.size()}, {"holds", check.holds}};
    if (check.mismatch) out["mismatch"] = {{"element", l.table.label(*check.mismatch)}, {"coefficient", check.mismatch_coeff}};
    if (f) {
      out["shape"] = f->shape().to_string();
      out["verified"] = ff::verify_factorization(l.table, *f);
      out["witness"] = factorization_json(l.table, *f);
    }
    std::cout << out.dump(2) << '\n';
  } else if (f) {
    std::cout << "identity holds in " << l.id << "; (" << f->shape().to_string() << ")-factorization\n";
    print_factorization(l.table, *f);
  } else if (check.mismatch) {
    std::cout << "identity fails: coefficient " << check.mismatch_coeff << " at " << l.table.label(*check.mismatch) << '\n';
  } else {
    std::cout << "identity fails: a factor has a coefficient above 1\n";
  }
  return check.holds ? kExitOk : kExitInput;
}

int cmd_verify_paper(const std::string& claims, std::uint64_t budget, bool as_json) {
  const auto results = ff::run_suite(ff::select_claims(claims), budget);
  if (as_json) std::cout << ff::suite_json(results).dump(2) << '\n';
  else std::cout << ff::suite_text(results);
  bool budget_hit = false;
  for (const auto& r : results) {
    if (r.outcome == ff::ClaimOutcome::Fail) return kExitInput;
    budget_hit = budget_hit || r.outcome == ff::ClaimOutcome::Budget;
  }
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_classify(const std::string& catalog, int max_order, int jobs, const std::string& out_path,
                 const std::string& format, const ff::SearchOptions& opts) {
  const ff::Catalog cat = catalog.empty() ? ff::Catalog::bundled() : ff::Catalog::load(catalog);
  const auto entries = ff::classify(cat, max_order, jobs, opts);
  const std::string text = ff::emit_report(entries, ff::parse_report_format(format));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ff::Error(ff::ErrorCode::ParseError, "cannot write '" + out_path + "'");
    out << text;
    int non = 0;
    int undecided = 0;
    for (const auto& e : entries) {
      non += e.multifold == "no";
      undecided += e.multifold == "undecided";
    }
    std::cout << entries.size() << " groups classified, " << non << " not multifold, " << undecided
              << " undecided; report written to " << out_path << '\n';
  }
  for (const auto& e : entries)
    if (e.multifold == "undecided") return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorforge: exact factorizations of finite groups"};
  app.require_subcommand(1);

  Common common;
  std::string dump;
  std::string shape;
  std::string a_spec;
  std::string b_spec;
  std::string identity;
  std::string claims = "quick";
  std::string out_path;
  std::string format = "json";
  int max_order = 100;
  int jobs = 1;
  std::uint64_t budget = 0;
  bool no_fast = false;

  auto* construct = app.add_subcommand("construct", "build a group and print its generators");
  add_group_options(construct, common);
  construct->add_option("--dump", dump, "also print the Cayley table or element labels")
      ->check(CLI::IsMember({"table", "labels"}));

  auto* info = app.add_subcommand("info", "structural summary");
  add_group_options(info, common);

  auto* factorize = app.add_subcommand("factorize", "decide one factorization shape");
  add_group_options(factorize, common);
  factorize->add_option("--shape", shape, "factor sizes, e.g. 2,3,2")->required();
  factorize->add_option("--budget", budget, "node budget (0: none; default FACTORFORGE_BUDGET)");
  factorize->add_option("--jobs", jobs, "worker threads (0: all cores)");
  factorize->add_flag("--no-fast", no_fast, "skip structural shortcuts and search directly");

  auto* multifold = app.add_subcommand("multifold", "test every prime shape");
  add_group_options(multifold, common);
  multifold->add_option("--budget", budget, "node budget per search");
  multifold->add_option("--jobs", jobs, "worker threads per search");

  auto* dcoset = app.add_subcommand("dcoset", "double-coset factorization A . T . B");
  add_group_options(dcoset, common);
  dcoset->add_option("--a", a_spec, "subgroup spec: sylow:p, gen:x,y,..., named:X")->required();
  dcoset->add_option("--b", b_spec, "subgroup spec")->required();

  auto* algebra = app.add_subcommand("algebra", "verify a group-ring identity");
  add_group_options(algebra, common, false);
  algebra->add_option("group", common.group, "group (default: the file's '# group:' header)");
  algebra->add_option("--identity", identity, "identity file, one factor per line")->required();

  bool suite_json_flag = false;
  auto* verify = app.add_subcommand("verify-paper", "re-derive the bundled claims");
  verify->add_option("--claims", claims, "quick (default), all, or comma-separated claim ids");
  verify->add_option("--budget", budget, "node budget per search");
  verify->add_flag("--json", suite_json_flag, "machine-readable output");

  std::string classify_catalog;
  auto* classify = app.add_subcommand("classify", "classify every group of a catalog");
  classify->add_option("--catalog", classify_catalog, "JSON-lines catalog (default: bundled registry)");
  classify->add_option("--max-order", max_order, "skip larger groups");
  classify->add_option("--jobs", jobs, "groups classified in parallel (0: all cores)");
  classify->add_option("--out", out_path, "write the report here instead of stdout");
  classify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  classify->add_option("--budget", budget, "node budget per search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (budget == 0) budget = default_budget();
    ff::SearchOptions opts;
    opts.node_budget = budget;
    opts.jobs = jobs;
    opts.fast_paths = !no_fast;
    if (*construct) return cmd_construct(common, dump);
    if (*info) return cmd_info(common);
    if (*factorize) return cmd_factorize(common, shape, opts);
    if (*multifold) return cmd_multifold(common, opts);
    if (*dcoset) return cmd_dcoset(common, a_spec, b_spec);
    if (*algebra) return cmd_algebra(common, identity);
    if (*verify) return cmd_verify_paper(claims, budget, suite_json_flag);
    if (*classify) return cmd_classify(classify_catalog, max_order, jobs, out_path, format, opts);
  } catch (const ff::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 1;
}
