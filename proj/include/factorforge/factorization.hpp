#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "factorforge/group.hpp"

namespace factorforge {

/// Ordered factor sizes, e.g. (2,3,2).
struct FactorShape {
  std::vector<int> sizes;

  /// Parses "2,3,2"; throws ParseError.
  static FactorShape parse(std::string_view text);

  std::size_t length() const { return sizes.size(); }
  long long product() const;
  FactorShape reversed() const;
  /// "2,3,2"
  std::string to_string() const;

  friend bool operator==(const FactorShape&, const FactorShape&) = default;
  friend auto operator<=>(const FactorShape&, const FactorShape&) = default;
};

/// An ordered list of subsets whose product is meant to be exact.
struct Factorization {
  std::vector<ElementSet> factors;

  FactorShape shape() const;
};

/// The set product A B.
ElementSet set_product(const GroupTable& g, const ElementSet& a, const ElementSet& b);

/// True iff every prefix product is exact and the full product is `target`.
bool verify_factorization(const GroupTable& g, const Factorization& f, const ElementSet& target);
inline bool verify_factorization(const GroupTable& g, const Factorization& f) {
  return verify_factorization(g, f, g.all());
}

/// Merges adjacent factors into the coarser shape; throws ShapeMismatch
/// when `coarse` does not group the factor sizes.
Factorization group_factors(const GroupTable& g, const Factorization& f, const FactorShape& coarse);

/// Distinct orderings of the prime factors of n, lexicographic.
std::vector<FactorShape> prime_shapes(int n);

/// Stable hex digest of the factor element lists.
std::string digest(const Factorization& f);

/// Factors rendered with element labels, one "{a, b, ...}" per factor.
std::string describe(const GroupTable& g, const Factorization& f);

}  // namespace factorforge
