#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace factorforge {

/// Algorithm X over bitset rows: chooses pairwise-disjoint rows whose union
/// is `universe`, branching on the uncovered column with fewest live rows.
template <class Set>
class ExactCover {
 public:
  ExactCover(std::vector<Set> rows, Set universe, int columns)
      : rows_(std::move(rows)), universe_(universe), by_column_(static_cast<std::size_t>(columns)) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      rows_[r].for_each([&](int c) { by_column_[static_cast<std::size_t>(c)].push_back(static_cast<int>(r)); });
  }

  /// Row indices of a cover, or std::nullopt once the search space is
  /// exhausted. `exhausted` is false when the node budget (0 = none) ran out.
  std::optional<std::vector<int>> solve(std::uint64_t budget = 0) {
    budget_ = budget;
    nodes_ = 0;
    exhausted_ = true;
    chosen_.clear();
    Set covered;
    if (search(covered)) return chosen_;
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(const Set& covered) {
    if (budget_ && nodes_ >= budget_) {
      exhausted_ = false;
      return false;
    }
    ++nodes_;
    Set open = universe_ - covered;
    if (open.none()) return true;
    int best_col = -1;
    std::size_t best_live = SIZE_MAX;
    for (int c = open.first(); c >= 0; c = open.next(c)) {
      std::size_t live = 0;
      for (int r : by_column_[static_cast<std::size_t>(c)])
        if (!rows_[static_cast<std::size_t>(r)].intersects(covered)) ++live;
      if (live < best_live) {
        best_live = live;
        best_col = c;
        if (live == 0) return false;
      }
    }
    for (int r : by_column_[static_cast<std::size_t>(best_col)]) {
      const Set& row = rows_[static_cast<std::size_t>(r)];
      if (row.intersects(covered)) continue;
      chosen_.push_back(r);
      if (search(covered | row)) return true;
      chosen_.pop_back();
      if (!exhausted_) return false;
    }
    return false;
  }

  std::vector<Set> rows_;
  Set universe_;
  std::vector<std::vector<int>> by_column_;
  std::vector<int> chosen_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
};

}  // namespace factorforge
