#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dworkgal/rational.hpp"

namespace dworkgal::ff {

bool is_prime(uint64_t n);

// Legendre symbol (a/p) in {-1,0,+1} by Euler's criterion. Throws
// EvenOrCompositeModulus unless p is an odd prime.
int legendre(const Int& a, uint64_t p);

// Deterministic monic irreducible of degree k over F_p: the first
// irreducible candidate x^k + c_{k-1} x^{k-1} + ... + c_0 when the
// coefficient vectors (c_0, ..., c_{k-1}) are enumerated as base-p
// numbers c_0 + c_1 p + ... (low coefficient = least significant digit).
std::vector<uint64_t> irreducible_modulus(uint64_t p, int k);

// Reduction of a rational mod p; throws DenominatorDivisible when p
// divides the denominator.
uint64_t reduce_rational(const Rat& r, uint64_t p);

// F_{p^k} with elements as coefficient vectors of length k over F_p
// (little-endian: index 0 = constant term), reduced mod a monic
// irreducible modulus. k = 1 keeps a single residue and no modulus.
class FieldSpec {
 public:
  // Throws EvenOrCompositeModulus / UnsupportedInput on bad (p, k).
  static std::shared_ptr<const FieldSpec> make(uint64_t p, int k = 1);

  uint64_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t q() const { return q_; }
  // Monic modulus: coefficients c_0..c_{k-1} of x^k + ... (empty for k=1).
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  using Elem = std::vector<uint64_t>;

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem from_int(uint64_t r) const;  // image of an integer residue
  Elem from_rational(const Rat& r) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, uint64_t e) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;

  // Packed index sum_j a_j p^j in [0, q); the enumeration order used by
  // the point-counting kernels.
  uint64_t pack(const Elem& a) const;
  Elem unpack(uint64_t idx) const;

  // a^((q-1)/2) mapped to {-1,0,+1}.
  int quad_char(const Elem& a) const;
  int quad_char_rational(const Rat& r) const;

 private:
  FieldSpec(uint64_t p, int k, std::vector<uint64_t> modulus);

  uint64_t p_;
  int k_;
  uint64_t q_;
  std::vector<uint64_t> modulus_;
};

using FqPtr = std::shared_ptr<const FieldSpec>;

}  // namespace dworkgal::ff
