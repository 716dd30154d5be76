#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "dworkgal/errors.hpp"

namespace dworkgal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "n" or "n/d" with optional leading '-'.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& r);
std::string to_string(const Int& n);

// A signed squarefree integer standing for a square class of Q^*.
struct SquareClass {
  Int value;

  bool operator==(const SquareClass& o) const { return value == o.value; }
  bool operator!=(const SquareClass& o) const { return value != o.value; }
  bool operator<(const SquareClass& o) const { return value < o.value; }
};

// Squarefree part of a nonzero rational: the unique squarefree integer s
// with r/s a rational square. Throws ZeroInput on r = 0.
SquareClass squarefree_part(const Rat& r);

bool is_perfect_square(const Int& n);

// Integer square root of a perfect square; throws Internal otherwise.
Int exact_isqrt(const Int& n);

// Square root of a rational that is a perfect square, nullopt-style:
// returns false when r is not the square of a rational.
bool try_sqrt(const Rat& r, Rat& out);

}  // namespace dworkgal
