#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spinchain {

/// Sorted subset of {1..n}.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> members);

  /// Parses "1,3" (empty string gives the empty set).
  static IndexSet parse(std::string_view text, int n);
  static IndexSet full(int n);
  static IndexSet none(int n) { return IndexSet(n, {}); }

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int a) const;
  IndexSet complement() const;
  IndexSet with(int a) const;
  std::string str() const;

  auto operator<=>(const IndexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

/// All subsets of {1..n}, ordered by size then lexicographically.
std::vector<IndexSet> all_subsets(int n);

}  // namespace spinchain
