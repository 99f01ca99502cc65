#include "factorforge/structure.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "factorforge/error.hpp"
#include "factorforge/numeric.hpp"

namespace factorforge {

namespace {

// Closure of `start` (already a subgroup, or {e}) under right
// multiplication by `gens`.
ElementSet close_under(const GroupTable& g, ElementSet start, std::span<const Elem> gens) {
  std::vector<Elem> queue;
  start.for_each([&](int x) { queue.push_back(static_cast<Elem>(x)); });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : gens) {
      const Elem z = g.mul(queue[head], s);
      if (!start.test(z)) {
        start.set(z);
        queue.push_back(z);
      }
    }
  }
  return start;
}

}  // namespace

ElementSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens) {
  return close_under(g, ElementSet::single(0), gens);
}

ElementSet generated_subgroup(const GroupTable& g, const ElementSet& gens) {
  std::vector<Elem> list;
  gens.for_each([&](int x) { list.push_back(static_cast<Elem>(x)); });
  return generated_subgroup(g, list);
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.test(0)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    s.for_each([&](int b) {
      if (ok && !s.test(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) ok = false;
    });
  });
  return ok;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (int x = 0; x < g.order(); ++x)
    if (!(conjugate_set(g, s, static_cast<Elem>(x)) == s)) return false;
  return true;
}

ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, Elem x) {
  ElementSet out;
  const Elem xi = g.inv(x);
  s.for_each([&](int a) { out.set(g.mul(g.mul(xi, static_cast<Elem>(a)), x)); });
  return out;
}

ElementSet inverse_set(const GroupTable& g, const ElementSet& s) {
  ElementSet out;
  s.for_each([&](int a) { out.set(g.inv(static_cast<Elem>(a))); });
  return out;
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g) {
  const int n = g.order();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Elem>> classes;
  for (int x = 0; x < n; ++x) {
    if (done[static_cast<std::size_t>(x)]) continue;
    ElementSet cls;
    for (int y = 0; y < n; ++y) cls.set(g.conj(static_cast<Elem>(y), static_cast<Elem>(x)));
    std::vector<Elem> members;
    cls.for_each([&](int c) {
      members.push_back(static_cast<Elem>(c));
      done[static_cast<std::size_t>(c)] = 1;
    });
    classes.push_back(std::move(members));
  }
  return classes;
}

ElementSet centralizer(const GroupTable& g, Elem x) {
  ElementSet out;
  for (int y = 0; y < g.order(); ++y) {
    const auto e = static_cast<Elem>(y);
    if (g.mul(e, x) == g.mul(x, e)) out.set(y);
  }
  return out;
}

ElementSet normalizer(const GroupTable& g, const ElementSet& s) {
  ElementSet out;
  for (int y = 0; y < g.order(); ++y)
    if (conjugate_set(g, s, static_cast<Elem>(y)) == s) out.set(y);
  return out;
}

ElementSet center(const GroupTable& g) {
  ElementSet out = g.all();
  for (int x = 0; x < g.order(); ++x) out &= centralizer(g, static_cast<Elem>(x));
  return out;
}

ElementSet sylow(const GroupTable& g, int p) {
  const int n = g.order();
  if (!is_prime(p) || n % p != 0)
    throw Error(ErrorCode::NotPrimeDivisor, std::to_string(p) + " is not a prime divisor of " + std::to_string(n));
  const int target = p_part(n, p);
  ElementSet current = ElementSet::single(0);
  std::vector<Elem> gens;
  while (current.count() < target) {
    // Some p-element of N(P) \ P always exists while P is not Sylow.
    const ElementSet norm = normalizer(g, current);
    int pick = -1;
    for (int x = norm.first(); x >= 0; x = norm.next(x)) {
      if (current.test(x)) continue;
      if (is_power_of(element_order(g, static_cast<Elem>(x)), p)) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw Error(ErrorCode::InvalidTable, "no p-element in the normalizer; table is not a group");
    gens.push_back(static_cast<Elem>(pick));
    current = close_under(g, current, gens);
  }
  return current;
}

Quotient quotient(const GroupTable& g, const ElementSet& normal) {
  if (!is_subgroup(g, normal)) throw Error(ErrorCode::NotASubgroup, "quotient by a non-subgroup");
  if (!is_normal(g, normal)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const int n = g.order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const auto idx = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    normal.for_each([&](int h) { coset[g.mul(static_cast<Elem>(x), static_cast<Elem>(h))] = idx; });
  }
  const auto m = reps.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mul[a * m + b] = static_cast<Elem>(coset[g.mul(reps[a], reps[b])]);
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(r == 0 ? "e" : "[" + g.label(r) + "]");
  std::vector<NamedGenerator> gens;
  for (const auto& gen : g.generators()) gens.push_back({gen.name, static_cast<Elem>(coset[gen.element])});
  Quotient q{GroupTable(static_cast<int>(m), std::move(mul), std::move(labels), std::move(gens)), {}, reps};
  q.coset_of.reserve(static_cast<std::size_t>(n));
  for (int c : coset) q.coset_of.push_back(static_cast<Elem>(c));
  return q;
}

Subgroup subgroup_table(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, "subgroup_table on a non-subgroup");
  std::vector<Elem> members;
  h.for_each([&](int x) { members.push_back(static_cast<Elem>(x)); });
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  const auto m = members.size();
  std::vector<Elem> mul(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(g.label(members[a]));
    for (std::size_t b = 0; b < m; ++b)
      mul[a * m + b] = static_cast<Elem>(local[g.mul(members[a], members[b])]);
  }
  std::vector<NamedGenerator> gens;
  for (const auto& gen : g.generators())
    if (h.test(gen.element)) gens.push_back({gen.name, static_cast<Elem>(local[gen.element])});
  return Subgroup{GroupTable(static_cast<int>(m), std::move(mul), std::move(labels), std::move(gens)),
                  std::move(members)};
}

std::vector<ElementSet> normal_subgroups(const GroupTable& g) {
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet, BitsetHash<ElementSet::kWords>> seen;
  auto add = [&](const ElementSet& s) {
    if (seen.insert(s).second) found.push_back(s);
  };
  for (const auto& cls : conjugacy_classes(g)) add(generated_subgroup(g, cls));
  // Joins of normal subgroups are normal; close the family under joins.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(generated_subgroup(g, found[i] | found[j]));
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return lex_less(a, b);
  });
  return found;
}

namespace {

struct SubgroupSearch {
  const GroupTable& g;
  ElementSet within;
  int m;
  bool collect_all;
  std::vector<ElementSet> results;
  std::unordered_set<ElementSet, BitsetHash<ElementSet::kWords>> visited;
  std::vector<char> order_ok;

  void run() {
    order_ok.assign(static_cast<std::size_t>(g.order()), 0);
    within.for_each([&](int x) {
      order_ok[static_cast<std::size_t>(x)] = m % element_order(g, static_cast<Elem>(x)) == 0;
    });
    std::vector<Elem> gens;
    dfs(ElementSet::single(0), gens);
  }

  // Returns true to stop.
  bool dfs(const ElementSet& h, std::vector<Elem>& gens) {
    if (!visited.insert(h).second) return false;
    if (h.count() == m) {
      results.push_back(h);
      return !collect_all;
    }
    for (int x = within.first(); x >= 0; x = within.next(x)) {
      if (h.test(x) || !order_ok[static_cast<std::size_t>(x)]) continue;
      gens.push_back(static_cast<Elem>(x));
      const ElementSet next = close_under(g, h, gens);
      const int c = next.count();
      const bool stop = (m % c == 0) && dfs(next, gens);
      gens.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<ElementSet> subgroup_of_order(const GroupTable& g, int m) {
  return subgroup_of_order(g, g.all(), m);
}

std::optional<ElementSet> subgroup_of_order(const GroupTable& g, const ElementSet& within, int m) {
  const int n = within.count();
  if (m < 1 || n % m != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  SubgroupSearch search{g, within, m, false, {}, {}, {}};
  search.run();
  if (search.results.empty()) return std::nullopt;
  return search.results.front();
}

std::vector<ElementSet> subgroups_of_order(const GroupTable& g, const ElementSet& within, int m) {
  const int n = within.count();
  if (m < 1 || n % m != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  SubgroupSearch search{g, within, m, true, {}, {}, {}};
  search.run();
  return search.results;
}

bool is_supersolvable(const GroupTable& g) {
  const int n = g.order();
  if (n == 1) return true;
  // A supersolvable group has a normal subgroup of prime order, and every
  // quotient of a supersolvable group is supersolvable, so any one such
  // subgroup decides the question.
  for (int x = 1; x < n; ++x) {
    const auto e = static_cast<Elem>(x);
    if (!is_prime(element_order(g, e))) continue;
    const Elem gen[] = {e};
    const ElementSet a = generated_subgroup(g, gen);
    bool normal = true;
    for (int y = 0; y < n && normal; ++y)
      if (!a.test(g.conj(static_cast<Elem>(y), e))) normal = false;
    if (normal) return is_supersolvable(quotient(g, a).table);
  }
  return false;
}

bool is_clt(const GroupTable& g) {
  for (int m : divisors(g.order()))
    if (!subgroup_of_order(g, m)) return false;
  return true;
}

std::optional<SubgroupChain> subgroup_chain(const GroupTable& g, const ElementSet& top,
                                            std::span<const int> indices) {
  long long prod = 1;
  for (int a : indices) prod *= a;
  if (prod != top.count()) return std::nullopt;
  SubgroupChain chain{{top}, std::vector<int>(indices.begin(), indices.end())};
  std::function<bool(std::size_t)> descend = [&](std::size_t i) {
    if (i == indices.size()) return true;
    const ElementSet& cur = chain.groups.back();
    const int target = cur.count() / indices[i];
    for (const auto& sub : subgroups_of_order(g, cur, target)) {
      chain.groups.push_back(sub);
      if (descend(i + 1)) return true;
      chain.groups.pop_back();
    }
    return false;
  };
  if (!descend(0)) return std::nullopt;
  return chain;
}

InvolutionCriterion involution_criterion(const GroupTable& g) {
  const int n = g.order();
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "group of odd order has no involutions");
  InvolutionCriterion out;
  const ElementSet p = sylow(g, 2);
  out.sylow2_elementary_abelian = true;
  p.for_each([&](int x) {
    if (x != 0 && element_order(g, static_cast<Elem>(x)) != 2) out.sylow2_elementary_abelian = false;
  });

  ElementSet involutions;
  for (int x = 1; x < n; ++x)
    if (element_order(g, static_cast<Elem>(x)) == 2) involutions.set(x);
  const auto rep = static_cast<Elem>(involutions.first());
  ElementSet cls;
  for (int y = 0; y < n; ++y) cls.set(g.conj(static_cast<Elem>(y), rep));
  out.involutions_conjugate = cls == involutions;

  // Conjugate involutions have conjugate centralizers, so one
  // representative per class suffices; with a single class, one in total.
  const ElementSet c = centralizer(g, rep);
  ElementSet two_part;
  ElementSet odd_part;
  c.for_each([&](int x) {
    const int o = element_order(g, static_cast<Elem>(x));
    if (is_power_of(o, 2)) two_part.set(x);
    if (o % 2 == 1) odd_part.set(x);
  });
  bool splits = is_subgroup(g, two_part) && is_subgroup(g, odd_part) &&
                two_part.count() == p_part(n, 2) && two_part.count() * odd_part.count() == c.count();
  if (splits) {
    two_part.for_each([&](int a) {
      odd_part.for_each([&](int b) {
        if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
          splits = false;
      });
    });
  }
  out.centralizer_splits = splits;
  return out;
}

}  // namespace factorforge
