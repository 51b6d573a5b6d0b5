#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hypoly/rational.hpp"

namespace hypoly {

/// Scalar of the form  base + a1*e1 + a2*e2 + ...  where 1 >> e1 >> e2 >> ...
/// is a tower of formal infinitesimals. Comparison is lexicographic on
/// (base, a1, a2, ...), so a value with all tower coefficients zero compares
/// identically to its base. Only the linear operations needed for weight
/// arithmetic are provided; infinitesimals are never multiplied together.
class Eps {
public:
  Eps() = default;
  Eps(const Rat& base) : base_(base) {}       // NOLINT: implicit by design
  Eps(int base) : base_(base) {}              // NOLINT
  Eps(const Rat& base, std::vector<Rat> coeffs)
      : base_(base), coeffs_(std::move(coeffs)) {
    trim();
  }

  /// The infinitesimal e_level (level >= 1).
  static Eps infinitesimal(int level) {
    std::vector<Rat> c(static_cast<std::size_t>(level), Rat(0));
    c.back() = 1;
    return Eps(Rat(0), std::move(c));
  }

  const Rat& base() const { return base_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_rational() const { return coeffs_.empty(); }
  /// Highest tower level with a nonzero coefficient (0 if purely rational).
  int depth() const { return static_cast<int>(coeffs_.size()); }

  Eps& operator+=(const Eps& o) {
    base_ += o.base_;
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Eps& operator-=(const Eps& o) {
    base_ -= o.base_;
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Eps& operator*=(const Rat& s) {
    base_ *= s;
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Eps operator+(Eps a, const Eps& b) { return a += b; }
  friend Eps operator-(Eps a, const Eps& b) { return a -= b; }
  friend Eps operator-(const Eps& a) {
    Eps r = a;
    r *= Rat(-1);
    return r;
  }
  friend Eps operator*(Eps a, const Rat& s) { return a *= s; }
  friend Eps operator*(const Rat& s, Eps a) { return a *= s; }

  /// -1, 0 or +1; the sign of the leading nonzero coefficient.
  int sign() const {
    if (int s = sgn(base_)) return s;
    for (const auto& c : coeffs_)
      if (int s = sgn(c)) return s;
    return 0;
  }

  friend bool operator==(const Eps& a, const Eps& b) { return (a - b).sign() == 0; }
  friend bool operator!=(const Eps& a, const Eps& b) { return !(a == b); }
  friend bool operator<(const Eps& a, const Eps& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Eps& a, const Eps& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Eps& a, const Eps& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Eps& a, const Eps& b) { return (a - b).sign() >= 0; }

  friend Eps abs(const Eps& a) { return a.sign() < 0 ? -a : a; }

  std::string str() const {
    std::string s = base_.get_str();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      s += (sgn(coeffs_[i]) > 0 ? "+" : "");
      s += coeffs_[i].get_str() + "*e" + std::to_string(i + 1);
    }
    return s;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  Rat base_{0};
  std::vector<Rat> coeffs_;
};

}  // namespace hypoly
