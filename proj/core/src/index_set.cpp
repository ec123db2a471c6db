#include "spinchain/index_set.hpp"

#include <algorithm>

#include "spinchain/errors.hpp"
#include "spinchain/parse.hpp"

namespace spinchain {

IndexSet::IndexSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n < 1) throw InputError("index set needs n >= 1");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InputError("index set has duplicate members");
  for (int a : members_)
    if (a < 1 || a > n) throw InputError("index " + std::to_string(a) + " outside 1.." + std::to_string(n));
}

IndexSet IndexSet::parse(std::string_view text, int n) { return IndexSet(n, parse_int_list(text)); }

IndexSet IndexSet::full(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i + 1;
  return IndexSet(n, m);
}

bool IndexSet::contains(int a) const { return std::binary_search(members_.begin(), members_.end(), a); }

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a)
    if (!contains(a)) out.push_back(a);
  return IndexSet(n_, out);
}

IndexSet IndexSet::with(int a) const {
  if (contains(a)) throw InputError("index " + std::to_string(a) + " already in set");
  auto m = members_;
  m.push_back(a);
  return IndexSet(n_, m);
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
  return s + "}";
}

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> m;
    for (int a = 1; a <= n; ++a)
      if (mask & (1u << (a - 1))) m.push_back(a);
    out.emplace_back(n, m);
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.members() < y.members();
  });
  return out;
}

}  // namespace spinchain
