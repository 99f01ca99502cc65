#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "factorforge/factorization.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

/// Inverts every factor and reverses their order.
Factorization reverse_factorization(const GroupTable& g, const Factorization& f);

enum class Side { Left, Right };

/// Left or right coset transversal of H in `top`, smallest element of each
/// coset, ascending. Left: top = T H. Right: top = H T.
ElementSet coset_transversal(const GroupTable& g, const ElementSet& top, const ElementSet& h, Side side);

/// f_h factors H (as subsets of G). Right appends a right transversal
/// (G = f_h... T), Left prepends a left one (G = T f_h...). A trivial
/// transversal is dropped. Throws NotASubgroup.
Factorization lift_by_transversal(const GroupTable& g, const ElementSet& h, const Factorization& f_h, Side side);

/// f_q factors quotient(G, N) (in quotient indices). Each quotient factor is
/// lifted to coset representatives and N is inserted before factor
/// `position`. N = {e} inserts nothing. Throws NotNormal / NotASubgroup.
Factorization lift_by_normal_quotient(const GroupTable& g, const ElementSet& n, const Factorization& f_q,
                                      std::size_t position);

struct DoubleCosetResult {
  std::optional<Factorization> factorization;  // (A, T, B)
  std::optional<Elem> violating;               // some x with |AxB| < |A||B|
  int double_cosets = 0;
};

/// G = A T B with T the smallest element of each double coset AxB, provided
/// no A^x meets B beyond e. Throws NotASubgroup.
DoubleCosetResult double_coset_factorization(const GroupTable& g, const ElementSet& a, const ElementSet& b);

/// Replaces factor `index` by `parts`, whose exact product must equal it.
/// Throws InvalidFactorization.
Factorization refine_factor(const GroupTable& g, const Factorization& f, std::size_t index, const Factorization& parts);

/// Transversal product along a subgroup chain of `top` with the given
/// indices; std::nullopt when no such chain exists.
std::optional<Factorization> chain_factorization(const GroupTable& g, const ElementSet& top, const FactorShape& shape);

/// A chain witness for every prime shape; throws NotSupersolvable.
std::vector<std::pair<FactorShape, Factorization>> supersolvable_witness(const GroupTable& g);

}  // namespace factorforge
