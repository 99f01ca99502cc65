#include "factorforge/combinators.hpp"

#include "factorforge/error.hpp"

namespace factorforge {

Factorization reverse_factorization(const GroupTable& g, const Factorization& f) {
  Factorization out;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) out.factors.push_back(inverse_set(g, *it));
  return out;
}

ElementSet coset_transversal(const GroupTable& g, const ElementSet& top, const ElementSet& h, Side side) {
  ElementSet covered;
  ElementSet reps;
  top.for_each([&](int xi) {
    const auto x = static_cast<Elem>(xi);
    if (covered.test(x)) return;
    reps.set(x);
    h.for_each([&](int y) {
      covered.set(side == Side::Left ? g.mul(x, static_cast<Elem>(y)) : g.mul(static_cast<Elem>(y), x));
    });
  });
  return reps;
}

Factorization lift_by_transversal(const GroupTable& g, const ElementSet& h, const Factorization& f_h, Side side) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, "lift_by_transversal: H is not a subgroup");
  if (!verify_factorization(g, f_h, h))
    throw Error(ErrorCode::InvalidFactorization, "lift_by_transversal: f_H does not factor H");
  if (h.count() == g.order()) return f_h;
  const ElementSet t = coset_transversal(g, g.all(), h, side);
  Factorization out;
  if (side == Side::Left) out.factors.push_back(t);
  out.factors.insert(out.factors.end(), f_h.factors.begin(), f_h.factors.end());
  if (side == Side::Right) out.factors.push_back(t);
  return out;
}

Factorization lift_by_normal_quotient(const GroupTable& g, const ElementSet& n, const Factorization& f_q,
                                      std::size_t position) {
  if (position > f_q.factors.size()) throw Error(ErrorCode::ShapeMismatch, "insert position out of range");
  const Quotient q = quotient(g, n);
  if (!verify_factorization(q.table, f_q))
    throw Error(ErrorCode::InvalidFactorization, "lift_by_normal_quotient: f_Q does not factor G/N");
  Factorization out;
  for (std::size_t i = 0; i <= f_q.factors.size(); ++i) {
    if (i == position && n.count() > 1) out.factors.push_back(n);
    if (i == f_q.factors.size()) break;
    ElementSet lifted;
    f_q.factors[i].for_each([&](int c) { lifted.set(q.representative[static_cast<std::size_t>(c)]); });
    out.factors.push_back(lifted);
  }
  return out;
}

DoubleCosetResult double_coset_factorization(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  if (!is_subgroup(g, a) || !is_subgroup(g, b))
    throw Error(ErrorCode::NotASubgroup, "double_coset_factorization needs subgroups");
  DoubleCosetResult result;
  const long long want = static_cast<long long>(a.count()) * b.count();
  ElementSet covered;
  ElementSet reps;
  for (int xi = 0; xi < g.order(); ++xi) {
    const auto x = static_cast<Elem>(xi);
    if (covered.test(x)) continue;
    const ElementSet axb = set_product(g, set_product(g, a, ElementSet::single(x)), b);
    if (axb.count() != want) {
      result.violating = x;
      return result;
    }
    covered |= axb;
    reps.set(x);
    ++result.double_cosets;
  }
  result.factorization = Factorization{{a, reps, b}};
  return result;
}

Factorization refine_factor(const GroupTable& g, const Factorization& f, std::size_t index, const Factorization& parts) {
  if (index >= f.factors.size()) throw Error(ErrorCode::InvalidFactorization, "refine_factor: index out of range");
  if (!verify_factorization(g, parts, f.factors[index]))
    throw Error(ErrorCode::InvalidFactorization, "refine_factor: parts do not factor the target set exactly");
  Factorization out;
  out.factors.insert(out.factors.end(), f.factors.begin(), f.factors.begin() + static_cast<std::ptrdiff_t>(index));
  out.factors.insert(out.factors.end(), parts.factors.begin(), parts.factors.end());
  out.factors.insert(out.factors.end(), f.factors.begin() + static_cast<std::ptrdiff_t>(index) + 1, f.factors.end());
  return out;
}

std::optional<Factorization> chain_factorization(const GroupTable& g, const ElementSet& top, const FactorShape& shape) {
  if (shape.product() != top.count()) return std::nullopt;
  const auto chain = subgroup_chain(g, top, shape.sizes);
  if (!chain) return std::nullopt;
  Factorization out;
  for (std::size_t i = 0; i + 1 < chain->groups.size(); ++i)
    out.factors.push_back(coset_transversal(g, chain->groups[i], chain->groups[i + 1], Side::Left));
  return out;
}

std::vector<std::pair<FactorShape, Factorization>> supersolvable_witness(const GroupTable& g) {
  if (!is_supersolvable(g)) throw Error(ErrorCode::NotSupersolvable, "group is not supersolvable");
  std::vector<std::pair<FactorShape, Factorization>> out;
  for (const auto& shape : prime_shapes(g.order())) {
    auto f = chain_factorization(g, g.all(), shape);
    // Supersolvable groups have chains with any prescribed prime indices.
    if (!f) throw Error(ErrorCode::NotSupersolvable, "no chain for shape " + shape.to_string());
    out.emplace_back(shape, std::move(*f));
  }
  return out;
}

}  // namespace factorforge
