#include <doctest.h>

#include <algorithm>

#include "factorforge/numeric.hpp"
#include "factorforge/structure.hpp"
#include "helpers.hpp"

using namespace fft;

namespace {

std::vector<int> class_sizes(const GroupTable& g) {
  std::vector<int> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("conjugacy classes and centers") {
  const auto a4 = named_group("A4");
  CHECK(class_sizes(a4) == std::vector<int>{1, 3, 4, 4});
  CHECK(center(a4).count() == 1);
  CHECK(class_sizes(named_group("S4")) == std::vector<int>{1, 3, 6, 6, 8});
  CHECK(center(cyclic(7)).count() == 7);
  CHECK(center(named_group("Q8")).count() == 2);
  // Class equation.
  for (const char* id : {"D6", "Dic3", "S4", "C3^2:C4", "A5"}) {
    const auto g = named_group(id);
    int total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      CHECK(g.order() % static_cast<int>(c.size()) == 0);
      CHECK(static_cast<int>(c.size()) * centralizer(g, c.front()).count() == g.order());
      total += static_cast<int>(c.size());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("subgroups, normalizers, cosets") {
  const auto a4 = named_group("A4");
  const auto p3 = sylow(a4, 3);
  CHECK(p3.count() == 3);
  CHECK(normalizer(a4, p3) == p3);
  CHECK(is_subgroup(a4, p3));
  CHECK_FALSE(is_normal(a4, p3));
  const auto v = sylow(a4, 2);
  CHECK(v.count() == 4);
  CHECK(is_normal(a4, v));
  CHECK(normalizer(a4, v) == a4.all());
  for (int x = 1; x < 12; ++x) CHECK(is_subgroup(a4, indices({0, x})) == (element_order(a4, static_cast<Elem>(x)) == 2));
  CHECK(generated_subgroup(a4, std::vector<Elem>{}).count() == 1);
  CHECK(inverse_set(a4, p3) == p3);
}

TEST_CASE("Sylow subgroups") {
  const auto s4 = named_group("S4");
  CHECK(sylow(s4, 2).count() == 8);
  CHECK(sylow(s4, 3).count() == 3);
  CHECK_THROWS_AS(sylow(s4, 5), Error);
  const auto g8 = named_group("G(8)");
  CHECK(g8.order() == 56);
  CHECK(sylow(g8, 2).count() == 8);
  CHECK(is_normal(g8, sylow(g8, 2)));
  CHECK(sylow(g8, 7).count() == 7);
  CHECK_THROWS_AS(sylow(s4, 4), Error);
  for (const char* id : {"C3^2:C8", "C2^4:C5", "C7:A4", "S5"}) {
    const auto g = named_group(id);
    for (int p : prime_factors(g.order())) {
      CAPTURE(id);
      CAPTURE(p);
      const auto s = sylow(g, p);
      CHECK(is_subgroup(g, s));
      CHECK(s.count() == p_part(g.order(), p));
    }
  }
}

TEST_CASE("quotients") {
  const auto a4 = named_group("A4");
  const auto q = quotient(a4, sylow(a4, 2));
  CHECK(q.table.order() == 3);
  CHECK(find_isomorphism(q.table, cyclic(3)).has_value());
  const auto g48 = named_group("C4^2:C3");
  const auto v = resolve_subgroup_spec(g48, "named:V", Catalog::bundled().find("C4^2:C3"));
  CHECK(v.count() == 4);
  const auto q48 = quotient(g48, v);
  CHECK(q48.table.order() == 12);
  CHECK_FALSE(audit(q48.table).has_value());
  // The coset map is a homomorphism.
  for (int x = 0; x < 48; ++x)
    for (int y = 0; y < 48; ++y)
      CHECK(q48.coset_of[g48.mul(static_cast<Elem>(x), static_cast<Elem>(y))] ==
            q48.table.mul(q48.coset_of[x], q48.coset_of[y]));
  CHECK_THROWS_AS(quotient(a4, sylow(a4, 3)), Error);
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(cyclic(6)).size() == 4);
  CHECK(normal_subgroups(named_group("A4")).size() == 3);
  CHECK(normal_subgroups(named_group("A5")).size() == 2);
  CHECK(normal_subgroups(named_group("S4")).size() == 4);
  for (const auto& n : normal_subgroups(named_group("D6"))) CHECK(is_normal(named_group("D6"), n));
}

TEST_CASE("subgroups of a given order") {
  CHECK_FALSE(subgroup_of_order(named_group("A4"), 6).has_value());
  const auto s5 = named_group("S5");
  const auto h20 = subgroup_of_order(s5, 20);
  REQUIRE(h20.has_value());
  CHECK(is_subgroup(s5, *h20));
  CHECK(h20->count() == 20);
  CHECK_FALSE(subgroup_of_order(named_group("A5"), 15).has_value());
  CHECK_FALSE(subgroup_of_order(named_group("A5"), 30).has_value());
  CHECK(subgroup_of_order(named_group("A5"), 12).has_value());
}

TEST_CASE("supersolvability and CLT") {
  CHECK(is_supersolvable(cyclic(12)));
  CHECK(is_supersolvable(named_group("D4")));
  CHECK(is_supersolvable(named_group("Dic3")));
  CHECK_FALSE(is_supersolvable(named_group("A4")));
  CHECK_FALSE(is_supersolvable(named_group("S4")));
  CHECK_FALSE(is_supersolvable(named_group("C3^2:C4")));
  CHECK_FALSE(is_clt(named_group("A4")));
  CHECK(is_clt(named_group("S4")));
  CHECK_FALSE(is_clt(named_group("A5")));
  // Supersolvable groups are CLT.
  for (const auto& r : Catalog::bundled().records()) {
    const auto g = Catalog::bundled().build(r);
    CHECK(is_supersolvable(g) == r.has_tag("supersolvable"));
    if (is_supersolvable(g)) {
      CAPTURE(r.id);
      CHECK(is_clt(g));
    }
  }
}

TEST_CASE("groups of order 2 p^n are supersolvable") {
  for (const char* id : {"C2", "C6", "S3", "C10", "D5", "C3xC3", "D6"}) CHECK(is_supersolvable(named_group(id)));
  CHECK(is_supersolvable(named_group("D9")));
  CHECK(is_supersolvable(named_group("D25")));
}

TEST_CASE("subgroup chains") {
  const auto s4 = named_group("S4");
  const std::vector<int> idx{2, 3, 2, 2};
  const auto chain = subgroup_chain(s4, s4.all(), idx);
  REQUIRE(chain.has_value());
  CHECK(chain->groups.size() == 5);
  CHECK(chain->groups.back().count() == 1);
  for (std::size_t i = 0; i + 1 < chain->groups.size(); ++i) {
    CHECK(chain->groups[i + 1].is_subset_of(chain->groups[i]));
    CHECK(chain->groups[i].count() == chain->groups[i + 1].count() * idx[i]);
  }
  // A4 has no subgroup of index 2.
  const std::vector<int> bad{2, 2, 3};
  CHECK_FALSE(subgroup_chain(named_group("A4"), named_group("A4").all(), bad).has_value());
}

TEST_CASE("involution criterion") {
  CHECK(involution_criterion(named_group("A4")).holds());
  CHECK_FALSE(involution_criterion(named_group("S4")).holds());
  CHECK(involution_criterion(named_group("C2^3:C7")).holds());
  CHECK(involution_criterion(named_group("A5")).holds());
  CHECK_FALSE(involution_criterion(named_group("C2^4:C3")).holds());
  const auto q8 = involution_criterion(named_group("Q8"));
  CHECK_FALSE(q8.sylow2_elementary_abelian);
  CHECK_THROWS_AS(involution_criterion(cyclic(9)), Error);
  // The tag marks the groups of order divisible by 4 that meet all three conditions.
  for (const auto& r : Catalog::bundled().records()) {
    if (r.expected_order % 4 != 0) continue;
    CAPTURE(r.id);
    const auto g = Catalog::bundled().build(r);
    CHECK(involution_criterion(g).holds() == r.has_tag("involution-criterion"));
  }
}

TEST_CASE("Sylow p-part property") {
  for (int n : {12, 24, 36, 56, 60, 80, 120}) {
    int prod = 1;
    for (int p : prime_factors(n)) {
      if (prod % p != 0) prod *= p_part(n, p);
    }
    CHECK(prod == n);
  }
  CHECK(p_part(120, 2) == 8);
  CHECK(p_part(120, 7) == 1);
  CHECK(is_power_of(27, 3));
  CHECK_FALSE(is_power_of(12, 2));
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}
