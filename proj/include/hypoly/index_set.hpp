#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypoly/errors.hpp"

namespace hypoly {

/// Subset of {1,...,n} stored as a bitmask, index 1 at the lowest bit.
/// Set lists everywhere in the library are emitted in ascending bitmask
/// order, which makes every output deterministic.
struct IndexSet {
  std::uint32_t mask = 0;
  int n = 0;

  IndexSet() = default;
  IndexSet(std::uint32_t m, int ambient) : mask(m), n(ambient) {}

  static IndexSet from_indices(const std::vector<int>& idx, int ambient) {
    IndexSet s(0, ambient);
    for (int i : idx) {
      if (i < 1 || i > ambient)
        throw ParseError("index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(ambient));
      s.mask |= (1u << (i - 1));
    }
    return s;
  }
  static IndexSet full(int ambient) {
    return IndexSet((ambient >= 32) ? ~0u : ((1u << ambient) - 1), ambient);
  }

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  int card() const { return __builtin_popcount(mask); }
  bool empty() const { return mask == 0; }

  IndexSet complement() const { return IndexSet(full(n).mask & ~mask, n); }
  IndexSet unite(const IndexSet& o) const { return IndexSet(mask | o.mask, n); }
  IndexSet intersect(const IndexSet& o) const { return IndexSet(mask & o.mask, n); }
  bool subset_of(const IndexSet& o) const { return (mask & ~o.mask) == 0; }
  bool proper_subset_of(const IndexSet& o) const {
    return subset_of(o) && mask != o.mask;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.mask == b.mask && a.n == b.n;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.mask < b.mask; }
};

}  // namespace hypoly
