#include "factorforge/suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "factorforge/catalog.hpp"
#include "factorforge/combinators.hpp"
#include "factorforge/error.hpp"
#include "factorforge/ring.hpp"
#include "factorforge/search.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

std::string to_string(ClaimOutcome o) {
  switch (o) {
    case ClaimOutcome::Pass: return "pass";
    case ClaimOutcome::Fail: return "fail";
    case ClaimOutcome::Budget: return "budget";
  }
  return "?";
}

namespace {

// Collects check lines; one failed check fails the claim, an undecided
// search marks it over budget.
struct Ctx {
  std::uint64_t budget = 0;
  std::vector<std::string> details;
  bool failed = false;
  bool over_budget = false;

  bool check(bool cond, const std::string& what) {
    details.push_back((cond ? "ok: " : "FAILED: ") + what);
    if (!cond) failed = true;
    return cond;
  }
  // True for a decided verdict equal to `want`.
  bool expect(Verdict got, Verdict want, const std::string& what) {
    if (got == Verdict::Undecided) {
      details.push_back("budget: " + what);
      over_budget = true;
      return false;
    }
    return check(got == want, what + " (" + to_string(got) + ")");
  }
  SearchOptions opts() const {
    SearchOptions o;
    o.node_budget = budget;
    return o;
  }
};

Factorization sets(std::initializer_list<ElementSet> s) { return Factorization{std::vector<ElementSet>(s)}; }

ElementSet elements(const GroupTable& g, std::initializer_list<const char*> names) {
  ElementSet s;
  for (const char* n : names) {
    auto x = resolve_element(g, n);
    if (!x) throw Error(ErrorCode::UnknownName, std::string("element ") + n);
    s.set(*x);
  }
  return s;
}

const char* kNonMultifold[] = {"A4", "C2^2:C9", "C3xA4", "C2^3:C7", "A5", "C5xA4", "C7xA4", "C7:A4"};

void bergman_a4(Ctx& c) {
  const GroupTable g = named_group("A4");
  const FactorShape shape = FactorShape::parse("2,3,2");
  c.expect(find_factorization(g, shape, c.opts()).verdict, Verdict::None, "A4 has no (2,3,2)-factorization by search");
  c.expect(brute_force_oracle(g, shape).verdict, Verdict::None, "brute force agrees on A4 (2,3,2)");
  const ElementSet a = elements(g, {"e", "(14)(23)"});
  const ElementSet b = elements(g, {"e", "(132)"});
  const ElementSet cc = elements(g, {"e", "(124)", "(142)"});
  c.check(verify_factorization(g, sets({a, b, cc})), "A4 = {e,(14)(23)} . {e,(132)} . {e,(124),(142)}");
  const int gen = generated_subgroup(g, b).count();
  c.check(gen == 3 && gen % b.count() != 0, "|<B>| = " + std::to_string(gen) + " is not a multiple of |B| = 2");
}

void brunault_a5(Ctx& c) {
  SearchOptions o = c.opts();
  o.fast_paths = false;
  const auto r = find_factorization(named_group("A5"), FactorShape::parse("2,3,5,2"), o);
  c.expect(r.verdict, Verdict::None,
           "A5 has no (2,3,5,2)-factorization (complete search, " + std::to_string(r.stats.nodes) + " nodes)");
}

void non_multifold_eight(Ctx& c) {
  for (const char* id : kNonMultifold) {
    const GroupTable g = named_group(id);
    c.check(involution_criterion(g).holds(), std::string(id) + " meets the involution criterion");
    const auto r = prove_no_2m2(g, c.budget);
    if (!r.complete) {
      c.details.push_back(std::string("budget: ") + id + " (2, n/4, 2) cover search");
      c.over_budget = true;
      continue;
    }
    c.check(!r.exists, std::string(id) + " has no (2," + std::to_string(g.order() / 4) + ",2)-factorization (" +
                           std::to_string(r.pairs_checked) + " pairs)");
  }
}

void group_ring_identities(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  for (const auto& [name, text] : bundled_identities()) {
    std::string group_id;
    std::string shape;
    {
      // Header comments name the group and the expected shape.
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        if (line.rfind("# group:", 0) == 0) group_id = line.substr(8);
        if (line.rfind("# shape:", 0) == 0) shape = line.substr(8);
      }
      auto trim = [](std::string& s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(" \r") + 1);
      };
      trim(group_id);
      trim(shape);
    }
    const GroupTable g = cat.build(group_id);
    const FormalProduct p = parse_identity(g, text);
    const IdentityCheck check = verify_identity(g, p);
    if (!c.check(check.holds, name + ": product of factors equals f(G) in " + group_id)) continue;
    const Factorization f = identity_to_factorization(g, p);
    c.check(verify_factorization(g, f) && f.shape().to_string() == shape,
            name + ": supports give a (" + f.shape().to_string() + ")-factorization");
  }

  // The partial expansion quoted for the order-48 group.
  const GroupTable g48 = cat.build("C4^2:C3");
  const RingVector lhs = ring_mul(parse_ring_element(g48, "e + t"), parse_ring_element(g48, "e + b*t + a^2*b^2*t^2"));
  const RingVector rhs = parse_ring_element(g48, "e + b^2 + t + b*t + a*t^2 + a*a*b^2*t^2");
  c.check(lhs == rhs, "(e+t)(e+bt+a^2b^2t^2) = (e+b^2)+(e+b)t+a(e+ab^2)t^2");

  // Order 36: <a> . <t> . <ab> by double cosets, then <t> = {e,t^2}{e,t}.
  const CatalogRecord& rec = *cat.find("C3^2:C4");
  const GroupTable g36 = cat.build(rec);
  const ElementSet a = named_subgroup(g36, rec, "A");
  const ElementSet t = named_subgroup(g36, rec, "T");
  const ElementSet cc = named_subgroup(g36, rec, "C");
  const auto dc = double_coset_factorization(g36, a, cc);
  c.check(dc.factorization && dc.double_cosets == 4, "<a> and <ab> give 4 double cosets with trivial intersections");
  const Factorization route = sets({a, t, cc});
  c.check(verify_factorization(g36, route), "<a> . <t> . <ab> is a (3,4,3)-factorization");
  const Factorization split = sets({elements(g36, {"e", "t^2"}), elements(g36, {"e", "t"})});
  const Factorization refined = refine_factor(g36, route, 1, split);
  c.check(verify_factorization(g36, refined) && refined.shape().to_string() == "3,2,2,3",
          "refining <t> = {e,t^2}{e,t} gives a (3,2,2,3)-factorization");
}

void s5_table(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  const CatalogRecord& rec = *cat.find("S5");
  const GroupTable g = cat.build(rec);
  auto sub = [&](const char* name) { return named_subgroup(g, rec, name); };
  const ElementSet p2 = sylow(g, 2);
  const ElementSet p3 = sylow(g, 3);
  const ElementSet v = sub("V");
  const ElementSet a4 = sub("A4");
  const ElementSet s3 = sub("S3");
  const ElementSet d5 = sub("D5");
  const ElementSet c2 = sub("C2");
  const ElementSet c3 = sub("C3");
  const ElementSet c5 = sub("C5");
  const ElementSet r = sub("R");
  const ElementSet v1 = sub("V1");
  const ElementSet v2 = sub("V2");

  // Quoted splittings, each checked as an exact product.
  const Factorization v_split = sets({v1, v2});
  const Factorization s3_up = sets({c2, c3});
  const Factorization s3_down = sets({c3, c2});
  const Factorization d5_up = sets({c5, r});
  const Factorization d5_down = sets({r, c5});
  c.check(verify_factorization(g, v_split, v), "V = {e,(12)(34)} . {e,(14)(23)}");
  c.check(verify_factorization(g, s3_up, s3) && verify_factorization(g, s3_down, s3), "S3 = <(12)><(123)> = <(123)><(12)>");
  c.check(verify_factorization(g, d5_up, d5) && verify_factorization(g, d5_down, d5),
          "D5 = <(12345)><(15)(24)> = <(15)(24)><(12345)>");
  const auto p2_split = chain_factorization(g, p2, FactorShape::parse("2,2,2"));
  c.check(p2_split.has_value(), "Sylow 2-subgroup splits as (2,2,2) along a subgroup chain");
  const Factorization a4_split = refine_factor(g, sets({v, c3}), 0, v_split);
  c.check(verify_factorization(g, a4_split, a4), "A4 = V . <(123)> with V split as above");

  struct Row {
    const char* shape;
    ElementSet a;
    ElementSet b;
    Factorization a_parts;
    Factorization b_parts;
  };
  const std::vector<Row> rows{
      {"2,2,2,5,3", p2, p3, p2_split.value_or(Factorization{}), sets({p3})},
      {"2,2,5,2,3", v, s3, v_split, s3_up},
      {"2,2,5,3,2", v, s3, v_split, s3_down},
      {"2,3,2,5,2", s3, d5, s3_up, d5_up},
      {"2,5,2,2,3", d5, s3, d5_down, s3_up},
      {"2,2,3,5,2", a4, c2, a4_split, sets({c2})},
  };
  for (const auto& row : rows) {
    const auto dc = double_coset_factorization(g, row.a, row.b);
    if (!c.check(dc.factorization.has_value(), std::string("(") + row.shape + "): A^x meets B trivially for all x"))
      continue;
    const int s = g.order() / (row.a.count() * row.b.count());
    c.check(dc.double_cosets == s, std::string("(") + row.shape + "): " + std::to_string(dc.double_cosets) +
                                       " double cosets = |G|/(|A||B|) = " + std::to_string(s));
    Factorization f = refine_factor(g, *dc.factorization, 2, row.b_parts);
    f = refine_factor(g, f, 0, row.a_parts);
    c.check(verify_factorization(g, f) && f.shape().to_string() == row.shape,
            std::string("(") + row.shape + ") assembled and verified");
  }
}

void s4_multifold(Ctx& c) {
  const GroupTable s4 = named_group("S4");
  const auto r = is_multifold(s4, c.opts());
  c.expect(r.verdict, Verdict::Found, "S4 has all four prime-shape factorizations");
  for (const auto& [shape, f] : r.witnesses) c.check(verify_factorization(s4, f), "S4 (" + shape.to_string() + ") witness");
  c.check(!is_clt(named_group("A4")), "A4 has no subgroup of order 6");
  c.check(is_clt(s4), "S4 has subgroups of every order dividing 24");
}

void supersolvable_multifold(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  int groups = 0;
  int shapes = 0;
  bool all_ok = true;
  for (const auto& rec : cat.records()) {
    const GroupTable g = cat.build(rec);
    if (!is_supersolvable(g)) continue;
    ++groups;
    for (const auto& [shape, f] : supersolvable_witness(g)) {
      ++shapes;
      if (!verify_factorization(g, f)) {
        all_ok = false;
        c.check(false, rec.id + " (" + shape.to_string() + ") chain witness");
      }
    }
  }
  c.check(all_ok && groups > 0, std::to_string(groups) + " supersolvable registry groups, " + std::to_string(shapes) +
                                    " chain witnesses verified");
  const CatalogRecord& rec = *cat.find("C3^2:C4");
  const GroupTable g36 = cat.build(rec);
  const Subgroup h = subgroup_table(g36, named_subgroup(g36, rec, "H"));
  c.check(h.table.order() == 18 && is_supersolvable(h.table), "<a, b, t^2> has order 18 and is supersolvable");
  const auto w = supersolvable_witness(h.table);
  bool ok = w.size() == prime_shapes(18).size();
  for (const auto& [shape, f] : w) ok = ok && verify_factorization(h.table, f);
  c.check(ok, "every prime shape of 18 is witnessed in <a, b, t^2>");
}

// Ordered factorizations of n into at most three sizes >= 2.
std::vector<FactorShape> short_shapes(int n) {
  std::vector<FactorShape> out{FactorShape{{n}}};
  for (int a = 2; a < n; ++a) {
    if (n % a) continue;
    out.push_back(FactorShape{{a, n / a}});
    for (int b = 2; b < n / a; ++b)
      if ((n / a) % b == 0) out.push_back(FactorShape{{a, b, n / a / b}});
  }
  return out;
}

void oracle_equivalence(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  int cases = 0;
  int found = 0;
  bool agree = true;
  for (const auto& rec : cat.records()) {
    if (rec.expected_order > 12) continue;
    const GroupTable g = cat.build(rec);
    for (const auto& shape : short_shapes(g.order())) {
      SearchOptions plain;
      plain.fast_paths = false;
      const Verdict oracle = brute_force_oracle(g, shape).verdict;
      const Verdict unrestricted = brute_force_oracle(g, shape, false).verdict;
      const Verdict search = find_factorization(g, shape, plain).verdict;
      const Verdict fast = find_factorization(g, shape).verdict;
      ++cases;
      if (oracle == Verdict::Found) ++found;
      if (search != oracle || fast != oracle || unrestricted != oracle) {
        agree = false;
        c.check(false, rec.id + " (" + shape.to_string() + ") verdicts disagree");
      }
    }
  }
  c.check(agree, std::to_string(cases) + " (group, shape) cases agree with brute force, " + std::to_string(found) +
                     " factorizable; unrestricted tuples give the same verdicts");
}

void affine_family(Ctx& c) {
  const GroupTable g4 = affine_gf2s(2);
  c.check(find_isomorphism(g4, named_group("A4")).has_value(), "G(4) is isomorphic to A4");
  const GroupTable g8 = affine_gf2s(3);
  c.check(g8.order() == 56, "G(8) has order 56");
  const InvolutionCriterion ic = involution_criterion(g8);
  c.check(ic.involutions_conjugate, "G(8) has one class of involutions");
  c.check(ic.sylow2_elementary_abelian, "G(8) has an elementary abelian Sylow 2-subgroup");
  const auto r = prove_no_2m2(g8, c.budget);
  if (!r.complete) {
    c.details.push_back("budget: G(8) cover search");
    c.over_budget = true;
  } else {
    c.check(!r.exists, "G(8) has no (2,14,2)-factorization");
  }
}

void quotient_lift_48(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  const CatalogRecord& rec = *cat.find("C2xS4");
  const GroupTable g = cat.build(rec);
  const ElementSet z = named_subgroup(g, rec, "Z");
  const Quotient q = quotient(g, z);
  const auto fq = find_factorization(q.table, FactorShape::parse("2,2,3,2"), c.opts());
  if (!c.expect(fq.verdict, Verdict::Found, "the quotient by the centre has a (2,2,3,2)-factorization")) return;
  const Factorization f = lift_by_normal_quotient(g, z, *fq.witness, 4);
  c.check(verify_factorization(g, f) && f.shape().to_string() == "2,2,3,2,2",
          "inserting the centre last lifts it to (2,2,3,2,2)");
}

void double_coset_examples(Ctx& c) {
  const Catalog& cat = Catalog::bundled();
  {
    const CatalogRecord& rec = *cat.find("C5^2:C3");
    const GroupTable g = cat.build(rec);
    const auto dc = double_coset_factorization(g, named_subgroup(g, rec, "A"), named_subgroup(g, rec, "B"));
    c.check(dc.factorization && verify_factorization(g, *dc.factorization) &&
                dc.factorization->shape().to_string() == "5,3,5",
            "order 75: two non-conjugate subgroups of order 5 give a (5,3,5)-factorization");
  }
  {
    const CatalogRecord& rec = *cat.find("C2^4:C3");
    const GroupTable g = cat.build(rec);
    const ElementSet a = named_subgroup(g, rec, "A");
    const ElementSet b = named_subgroup(g, rec, "B");
    const auto dc = double_coset_factorization(g, a, b);
    if (!c.check(dc.factorization && dc.factorization->shape().to_string() == "4,3,4",
                 "order 48: <a1,a2> . {e,t,t^2} . <b1,b2> is a (4,3,4)-factorization"))
      return;
    Factorization f = refine_factor(g, *dc.factorization, 2, *chain_factorization(g, b, FactorShape::parse("2,2")));
    f = refine_factor(g, f, 0, *chain_factorization(g, a, FactorShape::parse("2,2")));
    c.check(verify_factorization(g, f) && f.shape().to_string() == "2,2,3,2,2", "splitting both ends gives (2,2,3,2,2)");
  }
  {
    const GroupTable s4 = named_group("S4");
    const ElementSet a4 = generated_subgroup(s4, elements(s4, {"(123)", "(12)(34)"}));
    const auto dc = double_coset_factorization(s4, a4, a4);
    c.check(!dc.factorization && dc.violating.has_value(), "A4 twice in S4 is refused with a witness");
  }
}

struct ClaimDef {
  ClaimInfo info;
  std::function<void(Ctx&)> run;
};

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> claims{
      {{"bergman-a4", "A4 has no (2,3,2)-factorization, and a factor of a 2-fold split need not have size dividing |<B>|",
        true},
       bergman_a4},
      {{"brunault-a5", "A5 has no (2,3,5,2)-factorization", false}, brunault_a5},
      {{"non-multifold-eight",
        "the eight groups meet the involution criterion and have no (2, n/4, 2)-factorization", true},
       non_multifold_eight},
      {{"group-ring-identities", "the explicit group-ring identities expand to f(G) and give the named shapes", true},
       group_ring_identities},
      {{"s5-table1", "S5 has all six remaining shapes via double cosets and the quoted splittings", true}, s5_table},
      {{"s4-multifold", "S4 is multifold-factorizable; A4 is not CLT while S4 is", true}, s4_multifold},
      {{"supersolvable-multifold", "supersolvable groups are multifold-factorizable via subgroup chains", true},
       supersolvable_multifold},
      {{"oracle-equivalence", "pruned search matches brute force on every group of order at most 12", true},
       oracle_equivalence},
      {{"gq-family", "G(4) is A4 and G(8) has no (2,14,2)-factorization", true}, affine_family},
      {{"quotient-lift-48", "a normal subgroup inserted into a lifted quotient factorization", true}, quotient_lift_48},
      {{"double-coset-examples", "double-coset factorizations of the order-75 and order-48 groups", true},
       double_coset_examples},
  };
  return claims;
}

}  // namespace

const std::vector<ClaimInfo>& suite_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> select_claims(const std::string& selection) {
  std::vector<std::string> out;
  if (selection == "quick" || selection == "all") {
    for (const auto& c : suite_claims())
      if (selection == "all" || c.quick) out.push_back(c.id);
    return out;
  }
  std::string token;
  std::istringstream in(selection);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    bool known = false;
    for (const auto& c : suite_claims()) known = known || c.id == token;
    if (!known) throw Error(ErrorCode::UnknownClaimId, "'" + token + "'");
    out.push_back(token);
  }
  return out;
}

std::vector<ClaimResult> run_suite(const std::vector<std::string>& ids, std::uint64_t budget) {
  std::vector<const ClaimDef*> todo;
  for (const auto& id : ids) {
    const ClaimDef* def = nullptr;
    for (const auto& c : registry())
      if (c.info.id == id) def = &c;
    if (!def) throw Error(ErrorCode::UnknownClaimId, "'" + id + "'");
    todo.push_back(def);
  }
  std::vector<ClaimResult> out;
  for (const ClaimDef* def : todo) {
    Ctx ctx;
    ctx.budget = budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      def->run(ctx);
    } catch (const Error& e) {
      ctx.check(false, std::string("error: ") + e.what());
    }
    ClaimResult r;
    r.id = def->info.id;
    r.statement = def->info.statement;
    r.outcome = ctx.failed ? ClaimOutcome::Fail : ctx.over_budget ? ClaimOutcome::Budget : ClaimOutcome::Pass;
    r.details = std::move(ctx.details);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json suite_json(const std::vector<ClaimResult>& results) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& r : results)
    claims.push_back({{"id", r.id},
                      {"statement", r.statement},
                      {"outcome", to_string(r.outcome)},
                      {"details", r.details},
                      {"millis", static_cast<long long>(r.millis)}});
  return {{"schema", "factorforge.suite/1"}, {"claims", claims}};
}

std::string suite_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << to_string(r.outcome) << "  " << r.id << "  (" << static_cast<long long>(r.millis) << " ms)  " << r.statement
        << '\n';
    for (const auto& d : r.details) out << "    " << d << '\n';
  }
  return out.str();
}

}  // namespace factorforge
