#pragma once

#include <map>
#include <vector>

#include "hypoly/errors.hpp"
#include "hypoly/rational.hpp"

namespace hypoly {

/// Exponent vector over n degree-1 generators.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Multivariate polynomial with exact rational coefficients. The map keeps
/// monomials in lexicographic exponent order, so iteration (and hence every
/// computation built on it) is deterministic.
struct Poly {
  std::map<Mono, Rat> terms;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(int n, const Rat& c) {
    Poly p;
    if (c != 0) p.terms[Mono(static_cast<std::size_t>(n), 0)] = c;
    return p;
  }
  /// The generator x_i (1-based) among n generators.
  static Poly var(int n, int i) {
    Poly p;
    Mono m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    p.terms[m] = 1;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  Poly& add_term(const Mono& m, const Rat& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
    return *this;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rat& s) {
    if (s == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [m, c] : terms) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Mono m(ma);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  /// Degree of a homogeneous polynomial (-1 for zero); throws if mixed.
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) {
      int md = mono_degree(m);
      if (d == -1)
        d = md;
      else if (d != md)
        throw BadShape("polynomial is not homogeneous");
    }
    return d;
  }

  /// Substitutes generator i -> images[i] (simultaneously); every image
  /// lives over out_n generators.
  Poly substitute(const std::vector<Poly>& images, int out_n) const {
    Poly r;
    for (const auto& [m, c] : terms) {
      Poly t = Poly::constant(out_n, c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t = t * images[i];
      r += t;
    }
    return r;
  }
};

/// All exponent vectors of the given total degree over n generators, in
/// lexicographic order.
inline void enumerate_monomials(int n, int degree, std::vector<Mono>& out) {
  Mono cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  if (n >= 1 && degree >= 0) rec(rec, 0, degree);
}

inline std::vector<Mono> monomials_of_degree(int n, int degree) {
  std::vector<Mono> out;
  enumerate_monomials(n, degree, out);
  return out;
}

/// Incremental row space over the rationals: rows inserted are reduced
/// against stored rows (keyed by pivot column) and, if nonzero, normalized
/// and stored. Exact arithmetic, deterministic.
class RowSpace {
public:
  /// Returns true if the row increased the rank.
  bool insert(std::map<int, Rat> row) {
    while (!row.empty()) {
      int pivot = row.begin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Rat lead = row.begin()->second;
        for (auto& [c, v] : row) v /= lead;
        rows_.emplace(pivot, std::move(row));
        return true;
      }
      Rat f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto jt = row.find(c);
        if (jt == row.end()) {
          row.emplace(c, -f * v);
        } else {
          jt->second -= f * v;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  std::map<int, std::map<int, Rat>> rows_;
};

}  // namespace hypoly
