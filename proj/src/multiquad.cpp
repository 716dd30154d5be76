#include "dworkgal/multiquad.hpp"

#include <sstream>

namespace dworkgal::alg {

std::string SignVector::to_string() const {
  static const char* names[4] = {"I", "2", "+", "-"};
  std::string out;
  unsigned m = mask();
  for (int i = 0; i < 4; ++i) {
    if (m & (1u << i)) {
      if (!out.empty()) out += ",";
      out += names[i];
    }
  }
  return out.empty() ? "id" : out;
}

MultiQuadField::MultiQuadField(const Rat& lambda, std::vector<Rat> gens,
                               bool verified)
    : lambda_(lambda), gens_(std::move(gens)), verified_field_(verified) {}

namespace {
std::vector<Rat> default_generators(const Rat& lambda) {
  Rat l2 = lambda * lambda;
  return {Rat(-1), Rat(2), l2 + 1, l2 - 1};
}
}  // namespace

std::shared_ptr<const MultiQuadField> MultiQuadField::make(const Rat& lambda) {
  Rat l2 = lambda * lambda;
  if (l2 * l2 == 1)
    raise(ErrorCode::LambdaSingular,
          "lambda^4 = 1 at lambda = " + dworkgal::to_string(lambda));
  return make(lambda, default_generators(lambda));
}

std::shared_ptr<const MultiQuadField> MultiQuadField::make_algebra(
    const Rat& lambda) {
  Rat l2 = lambda * lambda;
  if (l2 * l2 == 1)
    raise(ErrorCode::LambdaSingular,
          "lambda^4 = 1 at lambda = " + dworkgal::to_string(lambda));
  return make_algebra(lambda, default_generators(lambda));
}

std::shared_ptr<const MultiQuadField> MultiQuadField::make_algebra(
    const Rat& lambda, const std::vector<Rat>& generators) {
  if (generators.empty() || generators.size() > 6)
    raise(ErrorCode::UnsupportedInput, "need 1..6 generators");
  for (const Rat& g : generators)
    if (g == 0) raise(ErrorCode::DependentClasses, "zero generator");
  bool verified = true;
  unsigned n = static_cast<unsigned>(generators.size());
  for (unsigned subset = 1; subset < (1u << n) && verified; ++subset) {
    Rat prod(1);
    for (unsigned i = 0; i < n; ++i)
      if (subset & (1u << i)) prod *= generators[i];
    if (squarefree_part(prod).value == 1) verified = false;
  }
  return std::shared_ptr<const MultiQuadField>(
      new MultiQuadField(lambda, generators, verified));
}

std::shared_ptr<const MultiQuadField> MultiQuadField::make(
    const Rat& lambda, const std::vector<Rat>& generators) {
  if (generators.empty() || generators.size() > 6)
    raise(ErrorCode::UnsupportedInput, "need 1..6 generators");
  for (const Rat& g : generators)
    if (g == 0) raise(ErrorCode::DependentClasses, "zero generator");
  unsigned n = static_cast<unsigned>(generators.size());
  for (unsigned subset = 1; subset < (1u << n); ++subset) {
    Rat prod(1);
    for (unsigned i = 0; i < n; ++i)
      if (subset & (1u << i)) prod *= generators[i];
    if (squarefree_part(prod).value == 1)
      raise(ErrorCode::DependentClasses,
            "subset product " + dworkgal::to_string(prod) +
                " is a rational square (subset mask " +
                std::to_string(subset) + ")");
  }
  return std::shared_ptr<const MultiQuadField>(
      new MultiQuadField(lambda, generators, true));
}

Rat MultiQuadField::subset_product(unsigned subset) const {
  Rat prod(1);
  for (size_t i = 0; i < gens_.size(); ++i)
    if (subset & (1u << i)) prod *= gens_[i];
  return prod;
}

AlgebraElement MultiQuadField::zero() const {
  return AlgebraElement(shared_from_this(), std::vector<Rat>(dim(), Rat(0)));
}

AlgebraElement MultiQuadField::one() const { return rational(Rat(1)); }

AlgebraElement MultiQuadField::rational(const Rat& r) const {
  std::vector<Rat> c(dim(), Rat(0));
  c[0] = r;
  return AlgebraElement(shared_from_this(), std::move(c));
}

AlgebraElement MultiQuadField::monomial(unsigned subset,
                                        const Rat& coeff) const {
  if (subset >= static_cast<unsigned>(dim()))
    raise(ErrorCode::Internal, "monomial subset out of range");
  std::vector<Rat> c(dim(), Rat(0));
  c[subset] = coeff;
  return AlgebraElement(shared_from_this(), std::move(c));
}

AlgebraElement::AlgebraElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->dim())
    raise(ErrorCode::Internal, "coordinate count mismatch");
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (!field_ || !o.field_) raise(ErrorCode::Internal, "uninitialized element");
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    raise(ErrorCode::Internal, "elements of different fields");
}

bool AlgebraElement::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

bool AlgebraElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

AlgebraElement AlgebraElement::operator-() const {
  std::vector<Rat> c(coords_);
  for (Rat& x : c) x = -x;
  return AlgebraElement(field_, std::move(c));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_compatible(o);
  std::vector<Rat> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return AlgebraElement(field_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_compatible(o);
  std::vector<Rat> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return AlgebraElement(field_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_compatible(o);
  size_t n = coords_.size();
  std::vector<Rat> out(n, Rat(0));
  for (unsigned s = 0; s < n; ++s) {
    if (coords_[s] == 0) continue;
    for (unsigned t = 0; t < n; ++t) {
      if (o.coords_[t] == 0) continue;
      // e_S * e_T = (prod_{i in S cap T} d_i) e_{S xor T}
      out[s ^ t] += coords_[s] * o.coords_[t] * field_->subset_product(s & t);
    }
  }
  return AlgebraElement(field_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const Rat& r) const {
  std::vector<Rat> c(coords_);
  for (Rat& x : c) x *= r;
  return AlgebraElement(field_, std::move(c));
}

AlgebraElement AlgebraElement::operator/(const AlgebraElement& o) const {
  return *this * o.inverse();
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check_compatible(o);
  return coords_ == o.coords_;
}

bool AlgebraElement::operator<(const AlgebraElement& o) const {
  check_compatible(o);
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != o.coords_[i]) return coords_[i] < o.coords_[i];
  }
  return false;
}

namespace {

// Arithmetic on raw coordinate slices of length 2^level, generators gens.
using Coords = std::vector<Rat>;

Coords slice_mul(const Coords& a, const Coords& b, const std::vector<Rat>& gens,
                 int level) {
  size_t n = size_t{1} << level;
  Coords out(n, Rat(0));
  for (unsigned s = 0; s < n; ++s) {
    if (a[s] == 0) continue;
    for (unsigned t = 0; t < n; ++t) {
      if (b[t] == 0) continue;
      Rat prod(1);
      for (int i = 0; i < level; ++i)
        if (s & t & (1u << i)) prod *= gens[i];
      out[s ^ t] += a[s] * b[t] * prod;
    }
  }
  return out;
}

Coords slice_inverse(const Coords& x, const std::vector<Rat>& gens,
                     int level) {
  if (level == 0) {
    if (x[0] == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
    return {Rat(1) / x[0]};
  }
  size_t half = size_t{1} << (level - 1);
  Coords a(x.begin(), x.begin() + half);
  Coords b(x.begin() + half, x.end());
  // x = a + b sqrt(d); 1/x = (a - b sqrt(d)) / (a^2 - b^2 d)
  Coords a2 = slice_mul(a, a, gens, level - 1);
  Coords b2 = slice_mul(b, b, gens, level - 1);
  const Rat& d = gens[level - 1];
  Coords norm(half);
  for (size_t i = 0; i < half; ++i) norm[i] = a2[i] - b2[i] * d;
  bool zero = true;
  for (const Rat& c : norm)
    if (c != 0) zero = false;
  if (zero) raise(ErrorCode::DivisionByZero, "inverse of zero");
  Coords ninv = slice_inverse(norm, gens, level - 1);
  Coords lo = slice_mul(a, ninv, gens, level - 1);
  Coords hi = slice_mul(b, ninv, gens, level - 1);
  Coords out(size_t{1} << level);
  for (size_t i = 0; i < half; ++i) {
    out[i] = lo[i];
    out[half + i] = -hi[i];
  }
  return out;
}

}  // namespace

AlgebraElement AlgebraElement::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  Coords out =
      slice_inverse(coords_, field_->generators(), field_->generator_count());
  return AlgebraElement(field_, std::move(out));
}

AlgebraElement AlgebraElement::apply_mask(unsigned mask) const {
  if (mask >= static_cast<unsigned>(field_->dim()))
    raise(ErrorCode::Internal, "sign mask out of range");
  std::vector<Rat> c(coords_);
  for (unsigned s = 0; s < c.size(); ++s) {
    if (__builtin_popcount(s & mask) & 1) c[s] = -c[s];
  }
  return AlgebraElement(field_, std::move(c));
}

AlgebraElement AlgebraElement::apply_sign(const SignVector& s) const {
  if (field_->generator_count() != 4)
    raise(ErrorCode::UnsupportedInput,
          "SignVector applies to 4-generator fields");
  return apply_mask(s.mask());
}

std::vector<std::string> AlgebraElement::serialize() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const Rat& c : coords_) out.push_back(dworkgal::to_string(c));
  return out;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << " ";
    os << dworkgal::to_string(coords_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace dworkgal::alg
