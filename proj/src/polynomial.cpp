#include "dworkgal/polynomial.hpp"

#include <sstream>

namespace dworkgal::alg {

HomogPoly::HomogPoly(FieldPtr field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars)) {
  if (vars_.empty() || vars_.size() > 3)
    raise(ErrorCode::UnsupportedInput, "1..3 variables supported");
}

HomogPoly HomogPoly::monomial(const AlgebraElement& coeff, const Exponents& e,
                              std::vector<std::string> vars) {
  HomogPoly p(coeff.field(), std::move(vars));
  p.add_term(e, coeff);
  return p;
}

void HomogPoly::add_term(const Exponents& e, const AlgebraElement& coeff) {
  if (coeff.is_zero()) return;
  int deg = e[0] + e[1] + e[2];
  if (degree_ >= 0 && deg != degree_)
    raise(ErrorCode::Internal, "mixed degrees in homogeneous polynomial");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
    degree_ = deg;
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (terms_.empty()) degree_ = -1;
}

AlgebraElement HomogPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  if (it != terms_.end()) return it->second;
  return field_->zero();
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  HomogPoly out(*this);
  if (out.degree_ >= 0 && o.degree_ >= 0 && out.degree_ != o.degree_)
    raise(ErrorCode::Internal, "adding polynomials of different degrees");
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  return *this + (-o);
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly out(field_, vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  HomogPoly out(field_, vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

HomogPoly HomogPoly::scale(const AlgebraElement& c) const {
  HomogPoly out(field_, vars_);
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
  return (*this - o).is_zero();
}

HomogPoly HomogPoly::pow(int e) const {
  if (e < 0) raise(ErrorCode::UnsupportedInput, "negative power");
  HomogPoly out = HomogPoly::monomial(field_->one(), {0, 0, 0}, vars_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

HomogPoly HomogPoly::apply_mask(unsigned mask) const {
  HomogPoly out(field_, vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.apply_mask(mask));
  return out;
}

HomogPoly HomogPoly::apply_sign(const SignVector& s) const {
  return apply_mask(s.mask());
}

AlgebraElement HomogPoly::eval(
    const std::array<AlgebraElement, 3>& point) const {
  AlgebraElement acc = field_->zero();
  for (const auto& [e, c] : terms_) {
    AlgebraElement t = c;
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) t = t * point[v];
    acc = acc + t;
  }
  return acc;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 1) os << "*" << vars_[v];
      if (e[v] > 1) os << "*" << vars_[v] << "^" << e[v];
    }
  }
  return os.str();
}

HomogPoly substitute_linear(const HomogPoly& p,
                            const std::array<AlgebraElement, 3>& relation,
                            int eliminate) {
  if (eliminate < 0 || eliminate > 2)
    raise(ErrorCode::UnsupportedInput, "variable index out of range");
  if (relation[eliminate].is_zero())
    raise(ErrorCode::NotEliminable,
          "eliminated variable has zero coefficient in the relation");
  const FieldPtr& F = p.field();
  AlgebraElement inv = relation[eliminate].inverse();
  // x_k = -(1/a_k) * sum_{i != k} a_i x_i
  HomogPoly repl(F, p.variables());
  for (int i = 0; i < 3; ++i) {
    if (i == eliminate || relation[i].is_zero()) continue;
    HomogPoly::Exponents e{0, 0, 0};
    e[i] = 1;
    repl.add_term(e, -(relation[i] * inv));
  }
  HomogPoly out(F, p.variables());
  for (const auto& [e, c] : p.terms()) {
    HomogPoly::Exponents rest = e;
    int k = rest[eliminate];
    rest[eliminate] = 0;
    HomogPoly term = HomogPoly::monomial(c, rest, p.variables());
    if (k > 0) {
      if (repl.is_zero())
        continue;  // relation forces x_k = 0, term vanishes
      term = term * repl.pow(k);
    }
    out = out + term;
  }
  return out;
}

}  // namespace dworkgal::alg
