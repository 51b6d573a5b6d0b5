#pragma once

#include <gmpxx.h>

#include <string>

#include "hypoly/errors.hpp"

namespace hypoly {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "a" or "a/b" with optional sign. Anything else (in particular
/// decimal notation) is rejected: genericity cannot be decided on floats.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t i = start;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
  };
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t end_num = digits(pos);
  if (end_num == pos) throw ParseError("bad rational literal: " + text);
  if (end_num == text.size()) {
    Rat r(text);
    r.canonicalize();
    return r;
  }
  if (text[end_num] != '/') throw ParseError("bad rational literal: " + text);
  std::size_t den_start = end_num + 1;
  std::size_t end_den = digits(den_start);
  if (end_den == den_start || end_den != text.size())
    throw ParseError("bad rational literal: " + text);
  Rat r(text);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace hypoly
