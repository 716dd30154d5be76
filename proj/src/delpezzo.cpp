#include "dworkgal/delpezzo.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dworkgal/errors.hpp"

namespace dworkgal::dp {

namespace {

const std::vector<std::string> kVars{"u", "X2", "X3"};
const std::vector<std::string> kFermatVars{"x", "y", "z"};

// generator masks of L = Q(sqrt(-1), sqrt(2), sqrt(l^2+1), sqrt(l^2-1))
constexpr unsigned kI = 0b0001;
constexpr unsigned kS2 = 0b0010;
constexpr unsigned kSp = 0b0100;
constexpr unsigned kSm = 0b1000;

HomogPoly branch_quartic_for(const FieldPtr& F, int r, const Rat& lambda) {
  auto L = [&](const Rat& c) { return F->rational(c); };
  Rat l2 = lambda * lambda;
  HomogPoly Q(F, kVars);
  if (r == 4 || r == 2) {
    // u^4 - X2^4 - X3^4 +- 4 l u^2 X2 X3 + 2 l^2 X2^2 X3^2
    Q.add_term({4, 0, 0}, F->one());
    Q.add_term({0, 4, 0}, -F->one());
    Q.add_term({0, 0, 4}, -F->one());
    Q.add_term({2, 1, 1}, L((r == 4 ? 4 : -4) * lambda));
    Q.add_term({0, 2, 2}, L(2 * l2));
  } else {
    // completed square of the twist-1 chart:
    // 2 w^2 = -u^4 + X2^4 + X3^4 + 4 I l u^2 X2 X3 + 2 l^2 X2^2 X3^2
    Q.add_term({4, 0, 0}, -F->one());
    Q.add_term({0, 4, 0}, F->one());
    Q.add_term({0, 0, 4}, F->one());
    Q.add_term({2, 1, 1}, F->monomial(kI, 4 * lambda));
    Q.add_term({0, 2, 2}, L(2 * l2));
  }
  return Q;
}

int preferred_elimination_var(const std::array<AlgebraElement, 3>& linear) {
  for (int v = 0; v < 3; ++v)
    if (!linear[v].is_zero()) return v;
  raise(ErrorCode::Internal, "zero linear form");
}

std::array<AlgebraElement, 3> normalize_linear(
    std::array<AlgebraElement, 3> linear) {
  int lead = preferred_elimination_var(linear);
  AlgebraElement inv = linear[lead].inverse();
  for (auto& c : linear) c = c * inv;
  return linear;
}

HomogPoly reduce_w(const HomogPoly& w,
                   const std::array<AlgebraElement, 3>& linear) {
  return substitute_linear(w, linear, preferred_elimination_var(linear));
}

Line make_line(const QuotientSurface& S, std::array<AlgebraElement, 3> linear,
               const HomogPoly& w, int family, int root_index, int sign) {
  Line l;
  l.linear = normalize_linear(std::move(linear));
  l.w_expr = reduce_w(w, l.linear);
  l.norm_factor = Rat(2);
  l.family = family;
  l.root_index = root_index;
  l.sign = sign;
  auto check = verify_line(S, l);
  if (!check.passed || check.normalization != 2)
    raise(ErrorCode::SquareCompletionFailed,
          "constructed line fails the membership identity (family " +
              std::to_string(family) + ")");
  return l;
}

// square root of c in L, where c / hint^2 must be a rational multiple of
// 1 or of I; covers the leading coefficients of every line family
AlgebraElement sqrt_with_hint(const AlgebraElement& c,
                              const AlgebraElement& hint) {
  const FieldPtr& F = c.field();
  AlgebraElement rho = c * (hint * hint).inverse();
  int support = -1;
  for (int s = 0; s < F->dim(); ++s) {
    if (rho.coord(s) == 0) continue;
    if (support >= 0) support = -2;
    if (support == -1) support = s;
  }
  if (support < 0)
    raise(ErrorCode::SquareCompletionFailed,
          "leading coefficient has no closed-form square root");
  Rat t = rho.coord(support);
  auto rational_sqrt_times = [&](const Rat& value) -> AlgebraElement {
    // value = u^2 d_S for some subset S
    for (unsigned sub = 0; sub < static_cast<unsigned>(F->dim()); ++sub) {
      Rat ratio = value / F->subset_product(sub);
      Rat u;
      if (try_sqrt(ratio, u)) return F->monomial(sub, u);
    }
    raise(ErrorCode::SquareCompletionFailed,
          "no subset square root for " + dworkgal::to_string(value));
  };
  AlgebraElement root = F->zero();
  if (support == 0) {
    root = hint * rational_sqrt_times(t);
  } else if (support == static_cast<int>(kI)) {
    // sqrt(t I) = sqrt(t/2) (1 + I)
    AlgebraElement base = rational_sqrt_times(t / 2);
    root = hint * base * (F->one() + F->monomial(kI));
  } else {
    raise(ErrorCode::SquareCompletionFailed,
          "unsupported square-root shape");
  }
  if (!(root * root == c))
    raise(ErrorCode::SquareCompletionFailed, "square root verification failed");
  return root;
}

struct FamilyData {
  int family;
  AlgebraElement eta;  // X3 coefficient ratio in u = a(X2 + eta X3)
  AlgebraElement quartic_t;  // a^4 + t a^2 + 1 = 0
  std::vector<AlgebraElement> roots;
};

std::vector<FamilyData> root_families(const FieldPtr& F, const Rat& lambda) {
  Rat l2 = lambda * lambda;
  auto L = [&](const Rat& c) { return F->rational(c); };
  auto I = F->monomial(kI);
  std::vector<FamilyData> out;

  // family 4: u = a(X2 + X3), a^4 + (4l/(l^2+1)) a^2 + 1 = 0,
  // a = +-((l-1) -+ (l+1) I) / sqrt(2(l^2+1))
  {
    FamilyData f;
    f.family = 4;
    f.eta = F->one();
    f.quartic_t = L(4 * lambda / (l2 + 1));
    AlgebraElement inv_s = F->monomial(kS2 | kSp, Rat(1) / (2 * (l2 + 1)));
    AlgebraElement r1 = (L(lambda - 1) - I * (lambda + 1)) * inv_s;
    AlgebraElement r2 = (L(lambda - 1) + I * (lambda + 1)) * inv_s;
    f.roots = {r1, -r1, r2, -r2};
    out.push_back(f);
  }
  // family 5: u = a(X2 - X3), a^4 - (4l/(l^2+1)) a^2 + 1 = 0,
  // a = +-((l+1) +- (l-1) I) / sqrt(2(l^2+1))
  {
    FamilyData f;
    f.family = 5;
    f.eta = -F->one();
    f.quartic_t = L(-4 * lambda / (l2 + 1));
    AlgebraElement inv_s = F->monomial(kS2 | kSp, Rat(1) / (2 * (l2 + 1)));
    AlgebraElement r1 = (L(lambda + 1) + I * (lambda - 1)) * inv_s;
    AlgebraElement r2 = (L(lambda + 1) - I * (lambda - 1)) * inv_s;
    f.roots = {r1, -r1, r2, -r2};
    out.push_back(f);
  }
  // family 6: u = a(X2 + I X3), a^4 + (4 l I/(l^2-1)) a^2 + 1 = 0,
  // a = +-(1+I)/sqrt2 sqrt(l^2-1)/(l+1) and +-(1-I)/sqrt2 sqrt(l^2-1)/(l-1)
  {
    FamilyData f;
    f.family = 6;
    f.eta = I;
    f.quartic_t = F->monomial(kI, 4 * lambda / (l2 - 1));
    AlgebraElement half_s2 = F->monomial(kS2, Rat(1, 2));  // sqrt2/2 = 1/sqrt2
    AlgebraElement sm = F->monomial(kSm);
    AlgebraElement r1 =
        (F->one() + I) * half_s2 * sm * L(Rat(1) / (lambda + 1));
    AlgebraElement r2 =
        (F->one() - I) * half_s2 * sm * L(Rat(1) / (lambda - 1));
    f.roots = {r1, -r1, r2, -r2};
    out.push_back(f);
  }
  // family 7: u = a(X2 - I X3), a^4 - (4 l I/(l^2-1)) a^2 + 1 = 0
  {
    FamilyData f;
    f.family = 7;
    f.eta = -I;
    f.quartic_t = F->monomial(kI, -4 * lambda / (l2 - 1));
    AlgebraElement half_s2 = F->monomial(kS2, Rat(1, 2));
    AlgebraElement sm = F->monomial(kSm);
    AlgebraElement r1 =
        (F->one() - I) * half_s2 * sm * L(Rat(1) / (lambda + 1));
    AlgebraElement r2 =
        (F->one() + I) * half_s2 * sm * L(Rat(1) / (lambda - 1));
    f.roots = {r1, -r1, r2, -r2};
    out.push_back(f);
  }
  return out;
}

// transform a twist-4 line to the other charts
Line transform_line(const QuotientSurface& S, const Line& base,
                    const std::array<AlgebraElement, 3>& var_scale,
                    const AlgebraElement& w_scale) {
  std::array<AlgebraElement, 3> linear{base.linear[0] * var_scale[0],
                                       base.linear[1] * var_scale[1],
                                       base.linear[2] * var_scale[2]};
  HomogPoly w(base.w_expr.field(), kVars);
  for (const auto& [e, coeff] : base.w_expr.terms()) {
    AlgebraElement c = coeff * w_scale;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) c = c * var_scale[v];
    w.add_term(e, c);
  }
  return make_line(S, linear, w, base.family, base.root_index, base.sign);
}

std::vector<Line> build_lines_twist4(const QuotientSurface& S) {
  const FieldPtr& F = S.field;
  const Rat& lambda = S.lambda;
  Rat l2 = lambda * lambda;
  auto L = [&](const Rat& c) { return F->rational(c); };
  std::vector<Line> lines;

  // family 1: X2 = a X3 with a^4 + 2 l^2 a^2 + 1 = 0, roots
  // (+-sqrt(-2(l^2-1)) +- sqrt(-2(l^2+1)))/2; w = +-(sqrt2/2)(u^2+2 a l X3^2)
  {
    AlgebraElement r = F->monomial(kI | kS2 | kSm);  // sqrt(-2(l^2-1))
    AlgebraElement s = F->monomial(kI | kS2 | kSp);  // sqrt(-2(l^2+1))
    std::vector<AlgebraElement> roots = {
        (r + s) * Rat(1, 2), -(r + s) * Rat(1, 2), (r - s) * Rat(1, 2),
        -(r - s) * Rat(1, 2)};
    AlgebraElement t = L(2 * l2);
    int idx = 0;
    for (const auto& a : roots) {
      AlgebraElement a2 = a * a;
      if (!((a2 * a2 + t * a2 + F->one()).is_zero()))
        raise(ErrorCode::RootVerificationFailed, "family 1 root");
      std::array<AlgebraElement, 3> lin{F->zero(), F->one(), -a};
      for (int sign : {+1, -1}) {
        HomogPoly w(F, kVars);
        AlgebraElement half_s2 = F->monomial(kS2, Rat(sign, 2));
        w.add_term({2, 0, 0}, half_s2);
        w.add_term({0, 0, 2}, half_s2 * a * L(2 * lambda));
        lines.push_back(make_line(S, lin, w, 1, idx, sign));
      }
      ++idx;
    }
  }
  // families 2 and 3: u = -(l/a) X2 + a X3 resp. u = a X2 - (l/a) X3 with
  // a^4 = 1; w = +-(1/2) sqrt(2(l^4-1)) X2^2 resp. X3^2
  {
    AlgebraElement I = F->monomial(kI);
    std::vector<AlgebraElement> roots = {F->one(), -F->one(), I, -I};
    AlgebraElement sq = F->monomial(kS2 | kSp | kSm);  // sqrt(2(l^4-1))
    for (int family : {2, 3}) {
      int idx = 0;
      for (const auto& a : roots) {
        AlgebraElement a2 = a * a;
        if (!((a2 * a2 - F->one()).is_zero()))
          raise(ErrorCode::RootVerificationFailed, "fourth root of unity");
        AlgebraElement la = L(lambda) * a.inverse();
        std::array<AlgebraElement, 3> lin;
        if (family == 2)
          lin = {F->one(), la, -a};
        else
          lin = {F->one(), -a, la};
        for (int sign : {+1, -1}) {
          HomogPoly w(F, kVars);
          HomogPoly::Exponents e =
              family == 2 ? HomogPoly::Exponents{0, 2, 0}
                          : HomogPoly::Exponents{0, 0, 2};
          w.add_term(e, sq * Rat(sign, 2));
          lines.push_back(make_line(S, lin, w, family, idx, sign));
        }
        ++idx;
      }
    }
  }
  // families 4-7: u = a(X2 + eta X3); w by square completion of the
  // restricted quartic
  for (const auto& fam : root_families(F, lambda)) {
    int idx = 0;
    for (const auto& a : fam.roots) {
      AlgebraElement a2 = a * a;
      if (!((a2 * a2 + fam.quartic_t * a2 + F->one()).is_zero()))
        raise(ErrorCode::RootVerificationFailed,
              "family " + std::to_string(fam.family) + " root");
      std::array<AlgebraElement, 3> lin{F->one(), -a, -(a * fam.eta)};
      HomogPoly q = substitute_linear(S.branch_quartic, lin, 0);
      AlgebraElement c4 = q.coefficient({0, 4, 0});
      AlgebraElement c3 = q.coefficient({0, 3, 1});
      AlgebraElement c2 = q.coefficient({0, 2, 2});
      AlgebraElement c1 = q.coefficient({0, 1, 3});
      AlgebraElement c0 = q.coefficient({0, 0, 4});
      if (c3.is_zero() || c1.is_zero())
        raise(ErrorCode::SquareCompletionFailed, "degenerate restriction");
      AlgebraElement alpha = sqrt_with_hint(c4, a);
      AlgebraElement beta = c3 * (alpha + alpha).inverse();
      AlgebraElement gamma = c1 * (beta + beta).inverse();
      // remaining coefficient equations
      if (!((beta * beta + (alpha * gamma) * Rat(2)) == c2) ||
          !((gamma * gamma) == c0))
        raise(ErrorCode::SquareCompletionFailed,
              "family " + std::to_string(fam.family) +
                  ": restricted quartic is not a perfect square");
      for (int sign : {+1, -1}) {
        HomogPoly w(F, kVars);
        AlgebraElement half_s2 = F->monomial(kS2, Rat(sign, 2));
        w.add_term({0, 2, 0}, half_s2 * alpha);
        w.add_term({0, 1, 1}, half_s2 * beta);
        w.add_term({0, 0, 2}, half_s2 * gamma);
        lines.push_back(make_line(S, lin, w, fam.family, idx, sign));
      }
      ++idx;
    }
  }
  return lines;
}

}  // namespace

QuotientSurface surface_model(int i, int j, int r, const Rat& lambda) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    raise(ErrorCode::UnsupportedInput, "indices must be distinct in 0..3");
  if (r != 1 && r != 2 && r != 4)
    raise(ErrorCode::UnsupportedInput, "twist r must be 1, 2 or 4");
  Rat l2 = lambda * lambda;
  if (l2 * l2 == 1)
    raise(ErrorCode::LambdaSingular, "lambda^4 = 1");
  QuotientSurface S;
  S.i = i;
  S.j = j;
  S.r = r;
  S.lambda = lambda;
  S.field = alg::MultiQuadField::make_algebra(lambda);
  S.branch_quartic = branch_quartic_for(S.field, r, lambda);
  return S;
}

std::string Line::key() const {
  std::ostringstream os;
  for (const auto& c : linear) os << c.to_string() << "|";
  os << "#";
  for (const auto& [e, c] : w_expr.terms())
    os << e[0] << "," << e[1] << "," << e[2] << ":" << c.to_string() << ";";
  return os.str();
}

std::vector<Line> build_lines(const QuotientSurface& S) {
  QuotientSurface base = S;
  if (S.r != 4) base = surface_model(S.i, S.j, 4, S.lambda);
  std::vector<Line> lines = build_lines_twist4(base);
  if (S.r == 2) {
    // Q_2(u, X2, X3) = Q_4(u, -X2, X3)
    std::array<AlgebraElement, 3> vs{S.field->one(), -S.field->one(),
                                     S.field->one()};
    std::vector<Line> out;
    out.reserve(lines.size());
    for (const auto& l : lines)
      out.push_back(transform_line(S, l, vs, S.field->one()));
    lines = std::move(out);
  } else if (S.r == 1) {
    // Q_1(u, X2, X3) = -Q_4(I u, X2, I X3), so w pulls back to I w
    AlgebraElement I = S.field->monomial(kI);
    std::array<AlgebraElement, 3> vs{I, S.field->one(), I};
    std::vector<Line> out;
    out.reserve(lines.size());
    for (const auto& l : lines)
      out.push_back(transform_line(S, l, vs, I));
    lines = std::move(out);
  }
  // exactly 28 bitangents carrying two lifts each
  std::map<std::string, int> linear_count;
  std::map<std::string, int> full;
  for (const auto& l : lines) {
    std::ostringstream os;
    for (const auto& c : l.linear) os << c.to_string() << "|";
    linear_count[os.str()]++;
    full[l.key()]++;
  }
  if (lines.size() != 56 || full.size() != 56 || linear_count.size() != 28)
    raise(ErrorCode::Internal, "line family counts are off");
  for (auto& [k, n] : linear_count)
    if (n != 2) raise(ErrorCode::Internal, "bitangent without two lifts");
  return lines;
}

LineVerification verify_line(const QuotientSurface& S, const Line& line) {
  LineVerification out;
  int elim = preferred_elimination_var(line.linear);
  HomogPoly q = substitute_linear(S.branch_quartic, line.linear, elim);
  HomogPoly w = substitute_linear(line.w_expr, line.linear, elim);
  HomogPoly w2 = w * w;
  if (w2.is_zero()) return out;
  if (w2 == q) {
    out.passed = true;
    out.normalization = Rat(1);
    return out;
  }
  // solve a constant normalization c with c w^2 = q
  const auto& [e0, c0] = *w2.terms().begin();
  AlgebraElement q0 = q.coefficient(e0);
  if (q0.is_zero()) return out;
  AlgebraElement ratio = q0;
  try {
    ratio = q0 * c0.inverse();
  } catch (const Error&) {
    return out;
  }
  if (!ratio.is_rational()) return out;
  if (w2.scale(ratio) == q) {
    out.passed = true;
    out.normalization = ratio.rational_part();
  }
  return out;
}

std::vector<int> galois_permutation(const QuotientSurface& S,
                                    const std::vector<Line>& lines,
                                    const SignVector& eps) {
  (void)S;
  std::map<std::string, int> index;
  for (size_t i = 0; i < lines.size(); ++i) index[lines[i].key()] = i;
  std::vector<int> perm;
  perm.reserve(lines.size());
  unsigned mask = eps.mask();
  for (const auto& l : lines) {
    Line img;
    img.linear = {l.linear[0].apply_mask(mask), l.linear[1].apply_mask(mask),
                  l.linear[2].apply_mask(mask)};
    img.w_expr = l.w_expr.apply_mask(mask);
    // images of normalized data stay normalized (leading coefficient 1)
    auto it = index.find(img.key());
    if (it == index.end())
      raise(ErrorCode::ImageNotFound,
            "sign vector " + eps.to_string() +
                " maps a line outside the family list");
    perm.push_back(it->second);
  }
  return perm;
}

FermatModel fermat_model() {
  FermatModel M;
  M.A = Rat(1);
  M.B = Rat(-1);
  M.C = Rat(-1);
  M.field = alg::MultiQuadField::make(Rat(0), {Rat(-1), Rat(2)});
  // zeta8 = (sqrt2 + sqrt2 * I)/2, zeta^2 = I
  M.zeta = (M.field->monomial(0b10) + M.field->monomial(0b11)) * Rat(1, 2);
  M.a = M.field->one();
  M.b = M.zeta;
  M.c = M.zeta;
  HomogPoly rhs(M.field, kFermatVars);
  rhs.add_term({4, 0, 0}, M.field->rational(M.A));
  rhs.add_term({0, 4, 0}, M.field->rational(M.B));
  rhs.add_term({0, 0, 4}, M.field->rational(M.C));
  M.rhs = rhs;
  return M;
}

namespace {

Line make_fermat_line(const FermatModel& M,
                      std::array<AlgebraElement, 3> linear, HomogPoly w,
                      int family, int root_index, int sign) {
  Line l;
  l.linear = normalize_linear(std::move(linear));
  l.w_expr = reduce_w(w, l.linear);
  l.norm_factor = Rat(2);
  l.family = family;
  l.root_index = root_index;
  l.sign = sign;
  // membership: 2 w^2 = A x^4 + B y^4 + C z^4 on the line
  int elim = preferred_elimination_var(l.linear);
  HomogPoly q = substitute_linear(M.rhs, l.linear, elim);
  HomogPoly w2 = l.w_expr * l.w_expr;
  if (!(w2 + w2 == q))
    raise(ErrorCode::Internal, "fermat line fails membership");
  return l;
}

AlgebraElement zeta_power(const FermatModel& M, int e) {
  AlgebraElement z = M.field->one();
  for (int i = 0; i < ((e % 8) + 8) % 8; ++i) z = z * M.zeta;
  return z;
}

}  // namespace

std::vector<Line> fermat_lines(const FermatModel& M) {
  const FieldPtr& F = M.field;
  std::vector<Line> out;
  AlgebraElement half_s2 = F->monomial(0b10, Rat(1, 2));  // 1/sqrt2
  auto a2 = M.a * M.a, b2 = M.b * M.b, c2 = M.c * M.c;

  // delta^4 = -1: delta = zeta^(1,3,5,7)
  for (int family = 1; family <= 3; ++family) {
    int idx = 0;
    for (int e : {1, 3, 5, 7}) {
      AlgebraElement delta = zeta_power(M, e);
      for (int sign : {+1, -1}) {
        std::array<AlgebraElement, 3> lin;
        HomogPoly w(F, kFermatVars);
        if (family == 1) {  // L_x: delta b y + c z = 0, sqrt2 w = +- a^2 x^2
          lin = {F->zero(), delta * M.b, M.c};
          w.add_term({2, 0, 0}, a2 * half_s2 * Rat(sign));
        } else if (family == 2) {  // L_y: delta c z + a x = 0
          lin = {M.a, F->zero(), delta * M.c};
          w.add_term({0, 2, 0}, b2 * half_s2 * Rat(sign));
        } else {  // L_z: delta a x + b y = 0
          lin = {delta * M.a, M.b, F->zero()};
          w.add_term({0, 0, 2}, c2 * half_s2 * Rat(sign));
        }
        out.push_back(make_fermat_line(M, lin, w, family, idx, sign));
      }
      ++idx;
    }
  }
  // L_{alpha,beta,gamma}: alpha a x + beta b y + gamma c z = 0,
  // w = alpha beta ab xy + beta gamma bc yz + gamma alpha ca zx
  std::map<std::string, Line> dedup;
  AlgebraElement I = F->monomial(0b01);
  std::vector<AlgebraElement> mu4 = {F->one(), -F->one(), I, -I};
  for (const auto& al : mu4) {
    for (const auto& be : mu4) {
      for (const auto& ga : mu4) {
        std::array<AlgebraElement, 3> lin{al * M.a, be * M.b, ga * M.c};
        HomogPoly w(F, kFermatVars);
        w.add_term({1, 1, 0}, al * be * M.a * M.b);
        w.add_term({0, 1, 1}, be * ga * M.b * M.c);
        w.add_term({1, 0, 1}, ga * al * M.c * M.a);
        Line l = make_fermat_line(M, lin, w, 4, 0, +1);
        dedup.emplace(l.key(), l);
      }
    }
  }
  if (dedup.size() != 32)
    raise(ErrorCode::Internal, "expected 32 tritangent-type lines");
  int idx = 0;
  for (auto& [k, l] : dedup) {
    l.root_index = idx / 2;
    l.sign = idx % 2 == 0 ? +1 : -1;
    out.push_back(l);
    ++idx;
  }
  if (out.size() != 56)
    raise(ErrorCode::Internal, "expected 56 lines at lambda = 0");
  return out;
}

std::array<Line, 8> fermat_basis_lines(const FermatModel& M) {
  const FieldPtr& F = M.field;
  AlgebraElement half_s2 = F->monomial(0b10, Rat(1, 2));
  auto a2 = M.a * M.a, b2 = M.b * M.b, c2 = M.c * M.c;
  auto lx = [&](int e, int sign) {
    HomogPoly w(F, kFermatVars);
    w.add_term({2, 0, 0}, a2 * half_s2 * Rat(sign));
    return make_fermat_line(
        M, {F->zero(), zeta_power(M, e) * M.b, M.c}, w, 1, e, sign);
  };
  auto ly = [&](int e, int sign) {
    HomogPoly w(F, kFermatVars);
    w.add_term({0, 2, 0}, b2 * half_s2 * Rat(sign));
    return make_fermat_line(
        M, {M.a, F->zero(), zeta_power(M, e) * M.c}, w, 2, e, sign);
  };
  auto lz = [&](int e, int sign) {
    HomogPoly w(F, kFermatVars);
    w.add_term({0, 0, 2}, c2 * half_s2 * Rat(sign));
    return make_fermat_line(
        M, {zeta_power(M, e) * M.a, M.b, F->zero()}, w, 3, e, sign);
  };
  AlgebraElement I = F->monomial(0b01);
  HomogPoly w7(F, kFermatVars);
  // (alpha, beta, gamma) = (I, I, I): each product alpha beta = -1
  w7.add_term({1, 1, 0}, -(M.a * M.b));
  w7.add_term({0, 1, 1}, -(M.b * M.c));
  w7.add_term({1, 0, 1}, -(M.c * M.a));
  Line v7 = make_fermat_line(M, {I * M.a, I * M.b, I * M.c}, w7, 4, 0, +1);
  return {lx(1, +1), lx(3, -1), ly(1, +1), ly(3, -1),
          lz(1, +1), lz(3, -1), v7,        lz(7, -1)};
}

int intersection_number(const FermatModel& M, const Line& l1, const Line& l2) {
  if (l1.key() == l2.key()) raise(ErrorCode::SameLine, "identical lines");
  bool same_linear = l1.linear[0] == l2.linear[0] &&
                     l1.linear[1] == l2.linear[1] &&
                     l1.linear[2] == l2.linear[2];
  if (same_linear) return 2;  // the two lifts meet at the tangency points
  // unique plane intersection point by the cross product
  const auto& u = l1.linear;
  const auto& v = l2.linear;
  std::array<AlgebraElement, 3> P{u[1] * v[2] - u[2] * v[1],
                                  u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
  bool zero = P[0].is_zero() && P[1].is_zero() && P[2].is_zero();
  if (zero) raise(ErrorCode::Internal, "degenerate line pair");
  AlgebraElement w1 = l1.w_expr.eval(P);
  AlgebraElement w2 = l2.w_expr.eval(P);
  (void)M;
  return w1 == w2 ? 1 : 0;
}

}  // namespace dworkgal::dp
