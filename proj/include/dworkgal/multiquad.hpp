#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dworkgal/rational.hpp"

namespace dworkgal::alg {

// Sign flips of the four generator square roots of the default field
// L = Q(sqrt(-1), sqrt(2), sqrt(lambda^2+1), sqrt(lambda^2-1)).
struct SignVector {
  bool flip_i = false;      // sqrt(-1)
  bool flip_2 = false;      // sqrt(2)
  bool flip_plus = false;   // sqrt(lambda^2+1)
  bool flip_minus = false;  // sqrt(lambda^2-1)

  unsigned mask() const {
    return (flip_i ? 1u : 0u) | (flip_2 ? 2u : 0u) | (flip_plus ? 4u : 0u) |
           (flip_minus ? 8u : 0u);
  }
  static SignVector from_mask(unsigned m) {
    return SignVector{(m & 1u) != 0, (m & 2u) != 0, (m & 4u) != 0,
                      (m & 8u) != 0};
  }
  bool operator==(const SignVector& o) const { return mask() == o.mask(); }
  std::string to_string() const;
};

class AlgebraElement;

// Multiquadratic field Q(sqrt(d_0), ..., sqrt(d_{n-1})) with a verified
// basis of 2^n subset-product square roots. Immutable once constructed.
class MultiQuadField : public std::enable_shared_from_this<MultiQuadField> {
 public:
  // Default field of the Dwork parameter: generators
  // (-1, 2, lambda^2+1, lambda^2-1). Throws LambdaSingular when
  // lambda^4 = 1 and DependentClasses when the 16 subset products do not
  // fall into distinct square classes.
  static std::shared_ptr<const MultiQuadField> make(const Rat& lambda);

  // Arbitrary generator list (each nonzero); lambda is carried as metadata.
  static std::shared_ptr<const MultiQuadField> make(
      const Rat& lambda, const std::vector<Rat>& generators);

  // Formal algebra over the default generators: the independence check is
  // skipped, so exceptional lambda (e.g. lambda = 3, where 2(lambda^2-1)
  // is a square) still get the full 16-dimensional coefficient algebra
  // with its 16 sign automorphisms. Inversion can then hit a zero divisor
  // and reports DivisionByZero.
  static std::shared_ptr<const MultiQuadField> make_algebra(const Rat& lambda);
  static std::shared_ptr<const MultiQuadField> make_algebra(
      const Rat& lambda, const std::vector<Rat>& generators);

  // True when the 2^n subset products were verified pairwise independent.
  bool verified_field() const { return verified_field_; }

  int generator_count() const { return static_cast<int>(gens_.size()); }
  int dim() const { return 1 << gens_.size(); }
  const Rat& lambda() const { return lambda_; }
  const std::vector<Rat>& generators() const { return gens_; }

  // Product of the generators indexed by the bits of `subset`.
  Rat subset_product(unsigned subset) const;

  bool same_as(const MultiQuadField& o) const {
    return lambda_ == o.lambda_ && gens_ == o.gens_;
  }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement rational(const Rat& r) const;
  // The basis monomial sqrt(prod_{i in subset} d_i).
  AlgebraElement monomial(unsigned subset, const Rat& coeff = Rat(1)) const;

 private:
  MultiQuadField(const Rat& lambda, std::vector<Rat> gens, bool verified);

  Rat lambda_;
  std::vector<Rat> gens_;
  bool verified_field_ = false;
};

using FieldPtr = std::shared_ptr<const MultiQuadField>;

// Element of a multiquadratic field: 2^n rational coordinates indexed by
// generator subsets (bit i of the index = generator i present).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(FieldPtr field, std::vector<Rat> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(unsigned subset) const { return coords_.at(subset); }

  bool is_zero() const;
  bool is_rational() const;  // only the empty-subset coordinate may be nonzero
  const Rat& rational_part() const { return coords_.at(0); }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rat& r) const;
  AlgebraElement operator/(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  bool operator<(const AlgebraElement& o) const;  // lexicographic, for maps

  // Multiplicative inverse by iterated conjugation down the quadratic
  // layers. Throws DivisionByZero on zero.
  AlgebraElement inverse() const;

  // Negates every coordinate whose subset meets `mask` in an odd number
  // of generators; this is the field automorphism flipping those roots.
  AlgebraElement apply_mask(unsigned mask) const;
  AlgebraElement apply_sign(const SignVector& s) const;

  // Coordinate strings in subset-index order.
  std::vector<std::string> serialize() const;
  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& o) const;

  FieldPtr field_;
  std::vector<Rat> coords_;
};

}  // namespace dworkgal::alg
