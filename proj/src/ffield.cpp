#include "dworkgal/ffield.hpp"

#include <algorithm>

namespace dworkgal::ff {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

// Dense polynomial arithmetic over F_p for the irreducibility test.
using Poly = std::vector<uint64_t>;  // little-endian, no trailing zeros

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  // f monic of degree k, full coefficient vector length k+1
  if (a.empty() || b.empty()) return {};
  size_t k = f.size() - 1;
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  for (size_t d = prod.size(); d-- > k;) {
    uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (size_t j = 0; j < k; ++j) {
      uint64_t t = mulmod(c, f[j], p);
      prod[d - k + j] = (prod[d - k + j] + p - t % p) % p;
    }
  }
  prod.resize(k);
  return poly_trim(prod);
}

Poly poly_powmod_xq(const Poly& f, uint64_t p, uint64_t e) {
  // x^(p^e) mod f via repeated exponentiation by p
  Poly x = {0, 1};
  Poly cur = poly_trim(x);
  for (uint64_t i = 0; i < e; ++i) {
    // cur = cur^p mod f
    Poly acc = {1};
    Poly base = cur;
    uint64_t ex = p;
    while (ex) {
      if (ex & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      ex >>= 1;
    }
    cur = acc;
  }
  return cur;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    Poly r = a;
    uint64_t lead_inv = invmod(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
      uint64_t c = mulmod(r.back(), lead_inv, p);
      size_t shift = r.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t t = mulmod(c, b[j], p);
        r[shift + j] = (r[shift + j] + p - t) % p;
      }
      r = poly_trim(std::move(r));
    }
    a = b;
    b = r;
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, uint64_t p) {
  size_t k = f.size() - 1;
  if (k == 0) return false;
  // x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k
  Poly xq = poly_powmod_xq(f, p, k);
  Poly x = {0, 1};
  if (poly_trim(xq) != poly_trim(x)) return false;
  for (size_t r = 2; r <= k; ++r) {
    if (k % r != 0) continue;
    bool prime = true;
    for (size_t d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    Poly xe = poly_powmod_xq(f, p, k / r);
    Poly diff = xe;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    diff = poly_trim(std::move(diff));
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int legendre(const Int& a, uint64_t p) {
  if (p == 2 || !is_prime(p))
    raise(ErrorCode::EvenOrCompositeModulus,
          "legendre needs an odd prime, got " + std::to_string(p));
  Int am = a % Int(p);
  if (am < 0) am += p;
  uint64_t r = powmod(am.convert_to<uint64_t>(), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::vector<uint64_t> irreducible_modulus(uint64_t p, int k) {
  if (k < 2) raise(ErrorCode::UnsupportedInput, "irreducible_modulus needs k >= 2");
  if (!is_prime(p) || p == 2)
    raise(ErrorCode::EvenOrCompositeModulus, "p must be an odd prime");
  // candidates ordered by the packed index c_0 + c_1 p + ...
  for (uint64_t idx = 0;; ++idx) {
    Poly f(k + 1, 0);
    uint64_t t = idx;
    for (int j = 0; j < k; ++j) {
      f[j] = t % p;
      t /= p;
    }
    if (t != 0) raise(ErrorCode::Internal, "no irreducible found");
    f[k] = 1;
    if (poly_is_irreducible(f, p)) {
      f.pop_back();
      return f;
    }
  }
}

uint64_t reduce_rational(const Rat& r, uint64_t p) {
  Int d = den(r) % Int(p);
  if (d == 0)
    raise(ErrorCode::DenominatorDivisible,
          "denominator of " + dworkgal::to_string(r) + " divisible by " +
              std::to_string(p));
  Int n = num(r) % Int(p);
  if (n < 0) n += p;
  uint64_t dn = d.convert_to<uint64_t>();
  return mulmod(n.convert_to<uint64_t>(), invmod(dn, p), p);
}

FieldSpec::FieldSpec(uint64_t p, int k, std::vector<uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(uint64_t p, int k) {
  if (p == 2)
    raise(ErrorCode::EvenCharacteristic, "p = 2 is rejected everywhere");
  if (!is_prime(p))
    raise(ErrorCode::EvenOrCompositeModulus,
          std::to_string(p) + " is not prime");
  if (p >= (uint64_t{1} << 31))
    raise(ErrorCode::UnsupportedInput, "p >= 2^31 unsupported");
  if (k < 1 || k > 8) raise(ErrorCode::UnsupportedInput, "k in 1..8");
  double qd = 1;
  for (int i = 0; i < k; ++i) qd *= static_cast<double>(p);
  if (qd > 9.3e18) raise(ErrorCode::UnsupportedInput, "q exceeds 2^63");
  std::vector<uint64_t> mod;
  if (k > 1) mod = irreducible_modulus(p, k);
  return std::shared_ptr<const FieldSpec>(new FieldSpec(p, k, std::move(mod)));
}

FieldSpec::Elem FieldSpec::one() const { return from_int(1); }

FieldSpec::Elem FieldSpec::from_int(uint64_t r) const {
  Elem e(k_, 0);
  e[0] = r % p_;
  return e;
}

FieldSpec::Elem FieldSpec::from_rational(const Rat& r) const {
  return from_int(reduce_rational(r, p_));
}

FieldSpec::Elem FieldSpec::add(const Elem& a, const Elem& b) const {
  Elem out(k_);
  for (int i = 0; i < k_; ++i) {
    uint64_t s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
  return out;
}

FieldSpec::Elem FieldSpec::sub(const Elem& a, const Elem& b) const {
  Elem out(k_);
  for (int i = 0; i < k_; ++i)
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return out;
}

FieldSpec::Elem FieldSpec::neg(const Elem& a) const {
  Elem out(k_);
  for (int i = 0; i < k_; ++i) out[i] = a[i] ? p_ - a[i] : 0;
  return out;
}

FieldSpec::Elem FieldSpec::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) return {mulmod(a[0], b[0], p_)};
  std::vector<uint64_t> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p_)) % p_;
  }
  // reduce by x^k = -(modulus)
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int j = 0; j < k_; ++j) {
      uint64_t t = mulmod(c, modulus_[j], p_);
      prod[d - k_ + j] = (prod[d - k_ + j] + p_ - t) % p_;
    }
  }
  prod.resize(k_);
  return prod;
}

FieldSpec::Elem FieldSpec::pow(Elem a, uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldSpec::Elem FieldSpec::inv(const Elem& a) const {
  if (is_zero(a)) raise(ErrorCode::DivisionByZero, "field inverse of zero");
  return pow(a, q_ - 2);
}

bool FieldSpec::is_zero(const Elem& a) const {
  for (uint64_t c : a)
    if (c) return false;
  return true;
}

uint64_t FieldSpec::pack(const Elem& a) const {
  uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

FieldSpec::Elem FieldSpec::unpack(uint64_t idx) const {
  Elem e(k_);
  for (int i = 0; i < k_; ++i) {
    e[i] = idx % p_;
    idx /= p_;
  }
  return e;
}

int FieldSpec::quad_char(const Elem& a) const {
  if (is_zero(a)) return 0;
  Elem r = pow(a, (q_ - 1) / 2);
  if (r == one()) return 1;
  if (r == neg(one())) return -1;
  raise(ErrorCode::Internal, "quad_char outside {-1,0,1}");
}

int FieldSpec::quad_char_rational(const Rat& r) const {
  return quad_char(from_rational(r));
}

}  // namespace dworkgal::ff
