#include "dworkgal/rational.hpp"

#include <algorithm>
#include <cctype>

namespace dworkgal {

Rat parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) raise(ErrorCode::ParseError, "empty rational literal");
  auto ok_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!ok_int(s)) raise(ErrorCode::ParseError, "bad rational: " + text);
      return Rat(Int(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!ok_int(n) || !ok_int(d))
      raise(ErrorCode::ParseError, "bad rational: " + text);
    Int dd(d);
    if (dd == 0) raise(ErrorCode::ParseError, "zero denominator: " + text);
    return Rat(Int(n), dd);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "bad rational: " + text);
  }
}

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string to_string(const Int& n) { return n.str(); }

namespace {

// Full trial-division factorization is fine here: every squarefree-part input
// in this library is a small polynomial in lambda.
Int squarefree_of_int(Int v) {
  Int out = v < 0 ? Int(-1) : Int(1);
  if (v < 0) v = -v;
  for (Int d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d != 0) continue;
    int e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return out * v;  // leftover v is prime (or 1)
}

}  // namespace

SquareClass squarefree_part(const Rat& r) {
  if (r == 0) raise(ErrorCode::ZeroInput, "squarefree_part of 0");
  // r = n/d and r * d^2 = n*d, so the square class of r is that of n*d.
  return SquareClass{squarefree_of_int(num(r) * den(r))};
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

Int exact_isqrt(const Int& n) {
  if (n < 0) raise(ErrorCode::Internal, "isqrt of negative");
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) raise(ErrorCode::Internal, "isqrt of non-square");
  return r;
}

bool try_sqrt(const Rat& r, Rat& out) {
  if (r < 0) return false;
  Int n = num(r), d = den(r);
  if (!is_perfect_square(n) || !is_perfect_square(d)) return false;
  out = Rat(exact_isqrt(n), exact_isqrt(d));
  return true;
}

}  // namespace dworkgal
