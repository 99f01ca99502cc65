#include <doctest.h>

#include <bit>
#include <set>

#include "factorforge/combinators.hpp"
#include "factorforge/numeric.hpp"
#include "factorforge/search.hpp"
#include "factorforge/structure.hpp"
#include "helpers.hpp"

using namespace fft;

namespace {

std::vector<const CatalogRecord*> registry_up_to(int max_order) {
  std::vector<const CatalogRecord*> out;
  for (const auto& r : Catalog::bundled().records())
    if (r.expected_order <= max_order) out.push_back(&r);
  return out;
}

// All ordered shapes of length <= 3 whose entries are >= 2 and multiply to n.
std::vector<FactorShape> short_shapes(int n) {
  std::vector<FactorShape> out;
  out.push_back(FactorShape{{n}});
  for (int a : divisors(n)) {
    if (a < 2 || a == n) continue;
    out.push_back(FactorShape{{a, n / a}});
    for (int b : divisors(n / a))
      if (b >= 2 && b < n / a) out.push_back(FactorShape{{a, b, n / a / b}});
  }
  return out;
}

std::vector<ElementSet> cyclic_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> seen;
  std::vector<ElementSet> out;
  for (int x = 0; x < g.order(); ++x) {
    const Elem gen[] = {static_cast<Elem>(x)};
    const auto h = generated_subgroup(g, gen);
    if (seen.insert(h.elements()).second) out.push_back(h);
  }
  return out;
}

}  // namespace

TEST_CASE("shapes") {
  const auto s = FactorShape::parse("(2, 3,2)");
  CHECK(s.sizes == std::vector<int>{2, 3, 2});
  CHECK(s.product() == 12);
  CHECK(s.to_string() == "2,3,2");
  CHECK(FactorShape::parse("2,3,5").reversed().to_string() == "5,3,2");
  CHECK_THROWS_AS(FactorShape::parse("2,,3"), Error);
  CHECK_THROWS_AS(FactorShape::parse("2,0"), Error);
  CHECK_THROWS_AS(FactorShape::parse(""), Error);
  CHECK(prime_shapes(12).size() == 3);
  CHECK(prime_shapes(1).size() == 1);
  CHECK(prime_shapes(120).size() == 20);
  for (const auto& sh : prime_shapes(60)) CHECK(sh.product() == 60);
}

TEST_CASE("verify_factorization") {
  const auto a4 = named_group("A4");
  const Factorization abc{{set_of(a4, {"e", "(14)(23)"}), set_of(a4, {"e", "(132)"}), set_of(a4, {"e", "(124)", "(142)"})}};
  CHECK(verify_factorization(a4, abc));
  CHECK(verify_factorization(a4, Factorization{{a4.all()}}));

  const auto c6 = cyclic(6);
  CHECK(verify_factorization(c6, Factorization{{indices({0, 3}), indices({0, 1, 2})}}));
  CHECK_FALSE(verify_factorization(c6, Factorization{{indices({0, 3}), indices({0, 1, 3})}}));
  // Right size, but the middle product overlaps.
  CHECK_FALSE(verify_factorization(c6, Factorization{{indices({0, 1}), indices({0, 1, 2})}}));
  CHECK(set_product(c6, indices({0, 3}), indices({0, 1, 2})) == c6.all());
}

TEST_CASE("find_factorization basics") {
  const auto a4 = named_group("A4");
  const auto r = find_factorization(a4, FactorShape::parse("2,3,2"));
  CHECK(r.verdict == Verdict::None);
  CHECK_FALSE(r.witness.has_value());
  CHECK(to_string(r.verdict) == "none");

  const auto whole = find_factorization(a4, FactorShape{{12}});
  REQUIRE(whole.verdict == Verdict::Found);
  CHECK(whole.witness->factors.size() == 1);
  CHECK(whole.witness->factors[0] == a4.all());

  const auto c6 = cyclic(6);
  const auto w = find_factorization(c6, FactorShape::parse("2,3"));
  REQUIRE(w.verdict == Verdict::Found);
  CHECK(verify_factorization(c6, *w.witness));
  CHECK(w.witness->shape().to_string() == "2,3");

  CHECK_THROWS_AS(find_factorization(c6, FactorShape::parse("2,2")), Error);
  CHECK(find_factorization(cyclic(1), FactorShape{{1}}).verdict == Verdict::Found);
}

TEST_CASE("oracle agrees with the search on small groups") {
  int cases = 0;
  for (const auto* rec : registry_up_to(12)) {
    const auto g = Catalog::bundled().build(*rec);
    for (const auto& shape : short_shapes(g.order())) {
      CAPTURE(rec->id);
      CAPTURE(shape.to_string());
      const auto oracle = brute_force_oracle(g, shape);
      const auto plain = brute_force_oracle(g, shape, false);
      CHECK(oracle.verdict == plain.verdict);
      for (bool fast : {true, false}) {
        SearchOptions opts;
        opts.fast_paths = fast;
        const auto found = find_factorization(g, shape, opts);
        CHECK(found.verdict == oracle.verdict);
        if (found.witness) CHECK(verify_factorization(g, *found.witness));
      }
      if (oracle.witness) CHECK(verify_factorization(g, *oracle.witness));
      ++cases;
    }
  }
  CHECK(cases > 60);
  CHECK_THROWS_AS(brute_force_oracle(named_group("S4"), FactorShape::parse("2,12")), Error);
}

TEST_CASE("oracle examples") {
  CHECK(brute_force_oracle(named_group("A4"), FactorShape::parse("2,3,2")).verdict == Verdict::None);
  CHECK(brute_force_oracle(cyclic(8), FactorShape::parse("2,2,2")).verdict == Verdict::Found);
  CHECK(brute_force_oracle(cyclic(12), FactorShape::parse("2,3,2")).verdict == Verdict::Found);
}

TEST_CASE("pruning switches do not change verdicts") {
  for (const char* id : {"A4", "S4", "Dic3", "C2^4:C3"}) {
    const auto g = named_group(id);
    for (const auto& shape : prime_shapes(g.order())) {
      CAPTURE(id);
      CAPTURE(shape.to_string());
      SearchOptions base;
      base.fast_paths = false;
      const auto want = find_factorization(g, shape, base).verdict;
      SearchOptions bare = base;
      bare.symmetry = false;
      bare.memo = false;
      bare.divisibility = false;
      CHECK(find_factorization(g, shape, bare).verdict == want);
    }
  }
}

TEST_CASE("reversal symmetry") {
  for (const auto* rec : registry_up_to(60)) {
    const auto g = Catalog::bundled().build(*rec);
    if (g.order() > 48 && rec->id != "C5xA4") continue;  // keep A5's long searches out of the unit tests
    for (const auto& shape : prime_shapes(g.order())) {
      CAPTURE(rec->id);
      CAPTURE(shape.to_string());
      const auto fwd = find_factorization(g, shape);
      const auto back = find_factorization(g, shape.reversed());
      CHECK(fwd.verdict == back.verdict);
      if (fwd.witness) {
        const auto rev = reverse_factorization(g, *fwd.witness);
        CHECK(rev.shape() == shape.reversed());
        CHECK(verify_factorization(g, rev));
      }
    }
  }
}

TEST_CASE("reverse_factorization examples") {
  const auto a4 = named_group("A4");
  const Factorization abc{{set_of(a4, {"e", "(14)(23)"}), set_of(a4, {"e", "(132)"}), set_of(a4, {"e", "(124)", "(142)"})}};
  const auto rev = reverse_factorization(a4, abc);
  CHECK(rev.shape().to_string() == "3,2,2");
  CHECK(verify_factorization(a4, rev));
  CHECK(rev.factors[0] == inverse_set(a4, abc.factors[2]));
  const Factorization whole{{a4.all()}};
  CHECK(reverse_factorization(a4, whole).factors == whole.factors);
}

TEST_CASE("grouping consecutive factors") {
  const auto s4 = named_group("S4");
  const auto r = find_factorization(s4, FactorShape::parse("2,3,2,2"));
  REQUIRE(r.witness);
  for (const char* coarse : {"6,2,2", "2,6,2", "2,3,4", "6,4", "2,12", "24"}) {
    const auto grouped = group_factors(s4, *r.witness, FactorShape::parse(coarse));
    CHECK(grouped.shape() == FactorShape::parse(coarse));
    CHECK(verify_factorization(s4, grouped));
  }
  CHECK_THROWS_AS(group_factors(s4, *r.witness, FactorShape::parse("4,6")), Error);
}

TEST_CASE("2m2 nonexistence agrees with the search") {
  for (const auto* rec : registry_up_to(24)) {
    const auto g = Catalog::bundled().build(*rec);
    if (g.order() % 4 != 0) {
      CHECK_THROWS_AS(prove_no_2m2(g), Error);
      continue;
    }
    if (g.order() == 4) continue;
    CAPTURE(rec->id);
    const FactorShape shape{{2, g.order() / 4, 2}};
    SearchOptions opts;
    opts.fast_paths = false;
    const auto searched = find_factorization(g, shape, opts);
    const auto proof = prove_no_2m2(g);
    CHECK(proof.complete);
    CHECK(proof.exists == (searched.verdict == Verdict::Found));
    if (proof.witness) CHECK(verify_factorization(g, *proof.witness));
  }
  CHECK_FALSE(prove_no_2m2(named_group("A4")).exists);
  CHECK_FALSE(prove_no_2m2(named_group("C5xA4")).exists);
  const auto s4 = prove_no_2m2(named_group("S4"));
  CHECK(s4.exists);
  REQUIRE(s4.witness);
  CHECK(s4.witness->shape().to_string() == "2,6,2");
}

TEST_CASE("multifold examples") {
  const auto c6 = is_multifold(cyclic(6));
  CHECK(c6.verdict == Verdict::Found);
  CHECK(c6.witnesses.size() == 2);
  const auto a4 = is_multifold(named_group("A4"));
  CHECK(a4.verdict == Verdict::None);
  REQUIRE(a4.failing_shape);
  CHECK(a4.failing_shape->to_string() == "2,3,2");
  const auto s4 = is_multifold(named_group("S4"));
  CHECK(s4.verdict == Verdict::Found);
  CHECK(s4.witnesses.size() == prime_shapes(24).size());
  for (const auto& [shape, f] : s4.witnesses) {
    CHECK(f.shape() == shape);
    CHECK(verify_factorization(named_group("S4"), f));
  }
}

TEST_CASE("parallel search is deterministic") {
  for (const char* id : {"S4", "C2^4:C3", "C3^2:C4"}) {
    const auto g = named_group(id);
    for (const auto& shape : prime_shapes(g.order())) {
      SearchOptions one;
      one.fast_paths = false;
      SearchOptions four = one;
      four.jobs = 4;
      const auto a = find_factorization(g, shape, one);
      const auto b = find_factorization(g, shape, four);
      CAPTURE(id);
      CAPTURE(shape.to_string());
      CHECK(a.verdict == b.verdict);
      if (a.witness && b.witness) CHECK(digest(*a.witness) == digest(*b.witness));
    }
  }
  SearchOptions four;
  four.jobs = 4;
  CHECK(find_factorization(named_group("A4"), FactorShape::parse("2,3,2"), four).verdict == Verdict::None);
}

TEST_CASE("node budget yields undecided") {
  SearchOptions opts;
  opts.fast_paths = false;
  opts.node_budget = 1000;
  const auto r = find_factorization(named_group("A5"), FactorShape::parse("2,3,5,2"), opts);
  CHECK(r.verdict == Verdict::Undecided);
  CHECK_FALSE(r.witness.has_value());
  CHECK(to_string(r.verdict) == "undecided");
  const auto m = is_multifold(named_group("A5"), opts);
  CHECK(m.verdict != Verdict::Found);
}

TEST_CASE("coset transversals and lifts") {
  const auto c6 = cyclic(6);
  const auto c3 = indices({0, 2, 4});
  const auto lifted = lift_by_transversal(c6, c3, Factorization{{c3}}, Side::Right);
  CHECK(lifted.shape().to_string() == "3,2");
  CHECK(verify_factorization(c6, lifted));
  const auto left = lift_by_transversal(c6, c3, Factorization{{c3}}, Side::Left);
  CHECK(left.shape().to_string() == "2,3");
  CHECK(verify_factorization(c6, left));
  // H = G: nothing to add.
  CHECK(lift_by_transversal(c6, c6.all(), Factorization{{c6.all()}}, Side::Left).factors.size() == 1);
  CHECK_THROWS_AS(lift_by_transversal(c6, indices({0, 1}), Factorization{{indices({0, 1})}}, Side::Left), Error);

  const auto s5 = named_group("S5");
  const auto s4 = resolve_subgroup_spec(s5, "named:S4", Catalog::bundled().find("S5"));
  const auto sub = subgroup_table(s5, s4);
  const auto w = find_factorization(sub.table, FactorShape::parse("2,3,2,2"));
  REQUIRE(w.witness);
  Factorization in_s5;
  for (const auto& f : w.witness->factors) {
    ElementSet mapped;
    f.for_each([&](int x) { mapped.set(sub.to_parent[x]); });
    in_s5.factors.push_back(mapped);
  }
  CHECK(verify_factorization(s5, in_s5, s4));
  const auto end5 = lift_by_transversal(s5, s4, in_s5, Side::Right);
  CHECK(end5.shape().to_string() == "2,3,2,2,5");
  CHECK(verify_factorization(s5, end5));
  const auto start5 = lift_by_transversal(s5, s4, in_s5, Side::Left);
  CHECK(start5.shape().to_string() == "5,2,3,2,2");
  CHECK(verify_factorization(s5, start5));
}

TEST_CASE("normal quotient lifts") {
  const auto& cat = Catalog::bundled();
  const auto g = cat.build("C2xS4");
  const auto z = resolve_subgroup_spec(g, "named:Z", cat.find("C2xS4"));
  CHECK(z.count() == 2);
  const auto q = quotient(g, z);
  const auto fq = find_factorization(q.table, FactorShape::parse("2,2,3,2"));
  REQUIRE(fq.witness);
  for (std::size_t pos = 0; pos <= 4; ++pos) {
    const auto lifted = lift_by_normal_quotient(g, z, *fq.witness, pos);
    CHECK(lifted.factors.size() == 5);
    CHECK(lifted.factors[pos] == z);
    CHECK(verify_factorization(g, lifted));
  }
  const auto trivial = lift_by_normal_quotient(g, indices({0}), Factorization{{g.all()}}, 0);
  CHECK(trivial.factors.size() == 1);
  CHECK_THROWS_AS(lift_by_normal_quotient(g, z, *fq.witness, 9), Error);
}

TEST_CASE("double coset factorizations") {
  const auto s5 = named_group("S5");
  const auto dc = double_coset_factorization(s5, sylow(s5, 2), sylow(s5, 3));
  REQUIRE(dc.factorization);
  CHECK(dc.factorization->shape().to_string() == "8,5,3");
  CHECK(verify_factorization(s5, *dc.factorization));

  const auto a4 = named_group("A4");
  const auto trivial = double_coset_factorization(a4, indices({0}), indices({0}));
  REQUIRE(trivial.factorization);
  CHECK(trivial.factorization->factors[1] == a4.all());

  const auto& cat = Catalog::bundled();
  const auto g75 = cat.build("C5^2:C3");
  const auto* rec = cat.find("C5^2:C3");
  const auto a = resolve_subgroup_spec(g75, "named:A", rec);
  const auto b = resolve_subgroup_spec(g75, "named:B", rec);
  const auto d75 = double_coset_factorization(g75, a, b);
  REQUIRE(d75.factorization);
  CHECK(d75.factorization->shape().to_string() == "5,3,5");
  CHECK(verify_factorization(g75, *d75.factorization));

  CHECK_THROWS_AS(double_coset_factorization(a4, indices({0, 1}), indices({0})), Error);
}

TEST_CASE("double coset criterion matches exhaustive search") {
  for (const char* id : {"S3", "A4", "D4", "Dic3"}) {
    const auto g = named_group(id);
    const int n = g.order();
    const auto subs = cyclic_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        const int s = n / (a.count() * b.count());
        bool all_full = true;
        for (int x = 0; x < n; ++x)
          all_full = all_full && set_product(g, set_product(g, a, ElementSet::single(x)), b).count() == a.count() * b.count();
        bool any_t = false;
        if (n % (a.count() * b.count()) == 0) {
          for (std::uint32_t mask = 0; mask < (1u << n) && !any_t; ++mask) {
            if (std::popcount(mask) != s) continue;
            ElementSet t;
            for (int x = 0; x < n; ++x)
              if (mask >> x & 1U) t.set(x);
            any_t = verify_factorization(g, Factorization{{a, t, b}});
          }
        }
        const auto dc = double_coset_factorization(g, a, b);
        CAPTURE(id);
        CHECK(all_full == any_t);
        CHECK(dc.factorization.has_value() == all_full);
        if (dc.violating) CHECK(set_product(g, set_product(g, a, ElementSet::single(*dc.violating)), b).count() < a.count() * b.count());
      }
  }
}

TEST_CASE("refinement and chains") {
  const auto c12 = cyclic(12);
  const auto chain = chain_factorization(c12, c12.all(), FactorShape::parse("2,3,2"));
  REQUIRE(chain);
  CHECK(verify_factorization(c12, *chain));
  CHECK(chain_factorization(cyclic(7), cyclic(7).all(), FactorShape{{7}})->factors.size() == 1);
  CHECK_FALSE(chain_factorization(named_group("A4"), named_group("A4").all(), FactorShape::parse("2,2,3")));

  const auto coarse = group_factors(c12, *chain, FactorShape::parse("6,2"));
  const Factorization parts{{chain->factors[0], chain->factors[1]}};
  const auto refined = refine_factor(c12, coarse, 0, parts);
  CHECK(refined.shape().to_string() == "2,3,2");
  CHECK(verify_factorization(c12, refined));
  CHECK_THROWS_AS(refine_factor(c12, coarse, 1, parts), Error);
}

TEST_CASE("supersolvable witnesses") {
  for (const char* id : {"C12", "D6", "Dic3", "D4", "C6xC2", "D9"}) {
    const auto g = named_group(id);
    const auto ws = supersolvable_witness(g);
    CHECK(ws.size() == prime_shapes(g.order()).size());
    for (const auto& [shape, f] : ws) {
      CHECK(f.shape() == shape);
      CHECK(verify_factorization(g, f));
    }
  }
  CHECK(supersolvable_witness(cyclic(5)).size() == 1);
  CHECK_THROWS_AS(supersolvable_witness(named_group("A4")), Error);
}

TEST_CASE("fast paths return verified witnesses") {
  for (const char* id : {"S4", "C4^2:C3", "C2^4:C3", "S5"}) {
    const auto g = named_group(id);
    for (const auto& shape : prime_shapes(g.order())) {
      const auto f = fast_factorization(g, shape);
      if (f) CHECK(verify_factorization(g, *f));
    }
  }
}
