#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factorforge/element_set.hpp"
#include "factorforge/permutation.hpp"

namespace factorforge {

using Elem = std::uint16_t;

inline constexpr int kDefaultOrderCap = 200;
inline constexpr int kMaxOrder = ElementSet::kCapacity;

struct NamedGenerator {
  std::string name;
  Elem element;
};

/// A finite group as a Cayley table. Element 0 is always the identity.
///
/// Immutable after construction. The constructor checks closure, the
/// identity law for element 0 and that every row and column is a
/// permutation (so inverses exist); associativity is checked by audit().
class GroupTable {
 public:
  GroupTable(int order, std::vector<Elem> mul, std::vector<std::string> labels = {},
             std::vector<NamedGenerator> generators = {});

  int order() const { return n_; }
  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// a * b * a^-1
  Elem conj(Elem a, Elem b) const { return mul(mul(a, b), inv_[a]); }

  const std::vector<Elem>& table() const { return mul_; }
  ElementSet all() const { return ElementSet::prefix(n_); }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find_label(std::string_view text) const;

  const std::vector<NamedGenerator>& generators() const { return generators_; }
  std::optional<Elem> generator(std::string_view name) const;

  GroupTable with_labels(std::vector<std::string> labels) const;
  GroupTable with_generators(std::vector<NamedGenerator> generators) const;

  bool same_table(const GroupTable& other) const { return n_ == other.n_ && mul_ == other.mul_; }

 private:
  int n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::vector<NamedGenerator> generators_;
};

/// Exhaustive group-axiom audit; returns a description of the first violation.
std::optional<std::string> audit(const GroupTable& g);

/// Least k >= 1 with x^k = e.
int element_order(const GroupTable& g, Elem x);

/// The group generated by `gens` under left-to-right composition. Labels
/// are canonical cycle strings; `names` (optional) name the generators.
GroupTable from_permutations(std::span<const Permutation> gens, int cap = kDefaultOrderCap,
                             std::vector<std::string> names = {});

GroupTable cyclic(int n, std::string generator_name = "g");

/// Element (i, j) has index i * |h| + j.
GroupTable direct_product(const GroupTable& g, const GroupTable& h, int cap = kDefaultOrderCap);

/// Action of an acting group on a target group: row h is the automorphism
/// x -> h x h^-1 of the target, as a table of target indices.
struct ActionTable {
  int acting_order = 0;
  int target_order = 0;
  std::vector<Elem> table;

  Elem apply(Elem h, Elem x) const { return table[static_cast<std::size_t>(h) * target_order + x]; }
};

ActionTable trivial_action(const GroupTable& target, const GroupTable& acting);

/// Extends generator images to a full action table.
/// images[i][j] is the image of target.generators()[j] under
/// acting.generators()[i]. Throws NotAnAutomorphism / NotAHomomorphism.
ActionTable action_from_images(const GroupTable& target, const GroupTable& acting,
                               const std::vector<std::vector<Elem>>& images);

/// Checks that every row is an automorphism and that h -> row(h) is a
/// homomorphism; throws on the first violation.
void validate_action(const GroupTable& target, const GroupTable& acting, const ActionTable& act);

/// (n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 h2), with (n, h) at index n * |H| + h,
/// so the trivial action reproduces direct_product exactly.
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const ActionTable& act, int cap = kDefaultOrderCap);

/// The affine group {x -> a x + u : a in GF(2^s)*, u in GF(2^s)}, 1 <= s <= 5.
/// Element (a, u) has index (a - 1) * 2^s + u.
GroupTable affine_gf2s(int s);

/// Evaluates a word such as "a^2*b*t^-1" over the named generators; "e" is
/// the identity.
Elem evaluate_word(const GroupTable& g, std::string_view word);

/// Looks an element up by index, label, cycle notation or generator word.
std::optional<Elem> resolve_element(const GroupTable& g, std::string_view text);

/// Shortest words over the named generators, used as labels.
std::vector<std::string> word_labels(const GroupTable& g);

/// Brute-force isomorphism search; returns the image of each element of `g`.
std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& g, const GroupTable& h);

}  // namespace factorforge
