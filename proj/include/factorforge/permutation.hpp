#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace factorforge {

/// A bijection on {0, ..., degree-1}.
///
/// Products compose left to right: `p.then(q)` applies p first, then q.
/// Cycle notation is 1-based, e.g. "(14)(23)" or "(1 10 3)".
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Parses cycle notation. With degree 0 the degree is the largest point named.
  static Permutation from_cycles(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation extended(int degree) const;
  bool is_identity() const;

  /// Canonical cycle form: each cycle starts at its smallest point, cycles
  /// ordered by that point, fixed points omitted, identity is "e".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace factorforge
