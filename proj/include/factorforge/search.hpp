#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorforge/factorization.hpp"

namespace factorforge {

enum class Verdict { Found, None, Undecided };
std::string to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prune_normalization = 0;  // non-canonical first factors
  std::uint64_t prune_symmetry = 0;       // second prefixes moved by the first factor's stabilizer
  std::uint64_t prune_exactness = 0;      // overlapping translates
  std::uint64_t prune_divisibility = 0;   // |P| does not divide |<P>|
  std::uint64_t prune_exact_cover = 0;    // last-factor covers that failed
  std::uint64_t prune_memo = 0;           // prefixes already known to fail
  double millis = 0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0: unlimited
  int jobs = 1;                   // 0: hardware concurrency
  bool fast_paths = true;         // try subgroup chains before searching
  bool symmetry = true;
  bool memo = true;
  bool divisibility = true;
  std::size_t memo_cap = 1u << 21;  // entries per level
};

struct SearchResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<Factorization> witness;
  SearchStats stats;
  std::string method;  // "chain", "search", ...
};

/// Complete search over normalized factor tuples. None is a proof of
/// nonexistence; Undecided means the node budget ran out.
/// Throws ShapeMismatch unless the shape multiplies to |G| with every size >= 2.
SearchResult find_factorization(const GroupTable& g, const FactorShape& shape, const SearchOptions& opts = {});

/// Unpruned enumeration for |G| <= 12 and at most three factors. With
/// `normalized` every factor contains e. Throws TooLarge.
SearchResult brute_force_oracle(const GroupTable& g, const FactorShape& shape, bool normalized = true);

struct No2m2Result {
  bool exists = false;
  bool complete = true;  // false: budget ran out before a decision
  std::optional<Factorization> witness;
  int pairs_checked = 0;
  SearchStats stats;
};

/// Decides shape (2, n/4, 2) pair by pair via exact covers of the quadruples
/// {b, xb, by, xby}. Throws NotDivisibleBy4.
No2m2Result prove_no_2m2(const GroupTable& g, std::uint64_t node_budget = 0);

struct MultifoldResult {
  Verdict verdict = Verdict::Undecided;  // Found: multifold; None: a shape fails
  std::vector<std::pair<FactorShape, Factorization>> witnesses;
  std::optional<FactorShape> failing_shape;
  std::string failing_proof;  // "search" or "2m2-cover"
  SearchStats stats;
};

/// Tests every ordering of the prime factors of |G|, lexicographically.
MultifoldResult is_multifold(const GroupTable& g, const SearchOptions& opts = {});

/// Chain, reversal, transversal and quotient lifts only; never searches.
std::optional<Factorization> fast_factorization(const GroupTable& g, const FactorShape& shape);

}  // namespace factorforge
