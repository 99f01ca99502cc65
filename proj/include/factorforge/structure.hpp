#pragma once

#include <optional>
#include <span>
#include <vector>

#include "factorforge/group.hpp"

namespace factorforge {

ElementSet generated_subgroup(const GroupTable& g, std::span<const Elem> gens);
ElementSet generated_subgroup(const GroupTable& g, const ElementSet& gens);

bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& s);

/// Orbits under conjugation, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g);

ElementSet centralizer(const GroupTable& g, Elem x);
ElementSet normalizer(const GroupTable& g, const ElementSet& s);
ElementSet center(const GroupTable& g);

/// x^-1 S x
ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, Elem x);
/// { s^-1 : s in S }
ElementSet inverse_set(const GroupTable& g, const ElementSet& s);

/// A Sylow p-subgroup; throws NotPrimeDivisor.
ElementSet sylow(const GroupTable& g, int p);

struct Quotient {
  GroupTable table;
  std::vector<Elem> coset_of;        // element -> coset index
  std::vector<Elem> representative;  // coset index -> smallest element of the coset
};

/// G/N with cosets numbered by smallest representative; throws NotNormal.
Quotient quotient(const GroupTable& g, const ElementSet& normal);

/// A subgroup as a standalone table; element i of the table is to_parent[i].
struct Subgroup {
  GroupTable table;
  std::vector<Elem> to_parent;
};
Subgroup subgroup_table(const GroupTable& g, const ElementSet& h);

/// Every normal subgroup, by ascending order.
std::vector<ElementSet> normal_subgroups(const GroupTable& g);

/// First subgroup of order m found by ascending-index search inside
/// `within` (all of G by default); std::nullopt is a completed search.
/// Throws NotADivisor.
std::optional<ElementSet> subgroup_of_order(const GroupTable& g, int m);
std::optional<ElementSet> subgroup_of_order(const GroupTable& g, const ElementSet& within, int m);
/// All subgroups of order m inside `within`, in discovery order.
std::vector<ElementSet> subgroups_of_order(const GroupTable& g, const ElementSet& within, int m);

bool is_supersolvable(const GroupTable& g);
/// Has a subgroup of every order dividing |G|.
bool is_clt(const GroupTable& g);

/// Chain H = H_1 > H_2 > ... > H_{k+1} = {e} with |H_i : H_{i+1}| = indices[i].
struct SubgroupChain {
  std::vector<ElementSet> groups;
  std::vector<int> indices;
};
std::optional<SubgroupChain> subgroup_chain(const GroupTable& g, const ElementSet& top,
                                            std::span<const int> indices);

/// The three involution conditions under which a group has no
/// (2, n/4, 2)-factorization: elementary abelian Sylow 2-subgroup, a single
/// class of involutions, and involution centralizers splitting as a direct
/// product of a full Sylow 2-subgroup and an odd-order subgroup.
struct InvolutionCriterion {
  bool sylow2_elementary_abelian = false;
  bool involutions_conjugate = false;
  bool centralizer_splits = false;

  bool holds() const { return sylow2_elementary_abelian && involutions_conjugate && centralizer_splits; }
};

/// Throws OddOrder for groups of odd order.
InvolutionCriterion involution_criterion(const GroupTable& g);

}  // namespace factorforge
