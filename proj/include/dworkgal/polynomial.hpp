#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dworkgal/multiquad.hpp"

namespace dworkgal::alg {

// Sparse homogeneous polynomial in at most 3 named variables with
// AlgebraElement coefficients. Zero coefficients are never stored and all
// stored terms share one total degree.
class HomogPoly {
 public:
  using Exponents = std::array<int, 3>;

  HomogPoly() = default;
  HomogPoly(FieldPtr field, std::vector<std::string> vars);

  static HomogPoly monomial(const AlgebraElement& coeff, const Exponents& e,
                            std::vector<std::string> vars);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  int degree() const { return degree_; }  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, AlgebraElement>& terms() const { return terms_; }

  // Zero element of the coefficient field when the term is absent.
  AlgebraElement coefficient(const Exponents& e) const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator-() const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly scale(const AlgebraElement& c) const;
  bool operator==(const HomogPoly& o) const;
  bool operator!=(const HomogPoly& o) const { return !(*this == o); }

  HomogPoly pow(int e) const;

  HomogPoly apply_mask(unsigned mask) const;
  HomogPoly apply_sign(const SignVector& s) const;

  AlgebraElement eval(const std::array<AlgebraElement, 3>& point) const;

  // Adds coeff * x^e, keeping the homogeneity invariant.
  void add_term(const Exponents& e, const AlgebraElement& coeff);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<std::string> vars_;
  int degree_ = -1;
  std::map<Exponents, AlgebraElement> terms_;
};

// Substitutes the variable `eliminate` using the linear relation
// sum_i relation[i] * x_i = 0 and returns the resulting homogeneous
// polynomial (the eliminated variable no longer occurs). Throws
// NotEliminable when relation[eliminate] = 0.
HomogPoly substitute_linear(const HomogPoly& p,
                            const std::array<AlgebraElement, 3>& relation,
                            int eliminate);

}  // namespace dworkgal::alg
