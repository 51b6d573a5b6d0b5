#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hypoly/eps.hpp"
#include "hypoly/errors.hpp"

namespace hypoly {

/// Ordered tuple of n strictly positive weights. Entries are ε-tower
/// scalars so that perturbed vectors flow through every algorithm
/// unchanged; plain rational input stays plain.
struct WeightVector {
  std::vector<Eps> entries;

  WeightVector() = default;
  explicit WeightVector(std::vector<Eps> e) : entries(std::move(e)) { validate(); }
  WeightVector(std::initializer_list<int> vals) {
    for (int v : vals) entries.emplace_back(Rat(v));
    validate();
  }

  int n() const { return static_cast<int>(entries.size()); }
  const Eps& operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  Eps& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }

  /// 1-based accessor matching the index convention of IndexSet.
  const Eps& at1(int i) const { return entries[static_cast<std::size_t>(i - 1)]; }

  Eps total() const {
    Eps s;
    for (const auto& e : entries) s += e;
    return s;
  }

  /// Highest ε-tower level used by any entry.
  int depth() const {
    int d = 0;
    for (const auto& e : entries) d = std::max(d, e.depth());
    return d;
  }

  void validate() const {
    if (n() < 3) throw ParseError("weight vector needs at least 3 entries");
    for (const auto& e : entries)
      if (e.sign() <= 0) throw ParseError("weights must be strictly positive");
  }

  /// Parses a comma-separated list of rational literals ("2,1,5/2,...").
  static WeightVector parse(const std::string& text) {
    std::vector<Eps> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.emplace_back(parse_rational(tok));
    return WeightVector(std::move(out));
  }

  static WeightVector parse(const std::vector<std::string>& toks) {
    std::vector<Eps> out;
    for (const auto& t : toks) out.emplace_back(parse_rational(t));
    return WeightVector(std::move(out));
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + entries[i].str();
    return s + ")";
  }
};

}  // namespace hypoly
