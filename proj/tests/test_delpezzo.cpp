#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "dworkgal/delpezzo.hpp"

using namespace dworkgal;
using namespace dworkgal::dp;

namespace {

int count_family(const std::vector<Line>& lines, int family) {
  int n = 0;
  for (const auto& l : lines)
    if (l.family == family) ++n;
  return n;
}

std::vector<int> compose_perm(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

bool is_identity(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("surface models and their branch quartics") {
  auto S = surface_model(0, 1, 4, Rat(2));
  const auto& F = S.field;
  CHECK(S.branch_quartic.coefficient({4, 0, 0}) == F->one());
  CHECK(S.branch_quartic.coefficient({0, 4, 0}) == -F->one());
  CHECK(S.branch_quartic.coefficient({0, 0, 4}) == -F->one());
  CHECK(S.branch_quartic.coefficient({2, 1, 1}) == F->rational(Rat(8)));
  CHECK(S.branch_quartic.coefficient({0, 2, 2}) == F->rational(Rat(8)));

  auto S2 = surface_model(0, 1, 2, Rat(2));
  CHECK(S2.branch_quartic.coefficient({2, 1, 1}) == F->rational(Rat(-8)));

  auto S5 = surface_model(0, 1, 1, Rat(2));
  CHECK(S5.branch_quartic.coefficient({4, 0, 0}) == -F->one());
  CHECK(S5.branch_quartic.coefficient({2, 1, 1}) == F->monomial(0b0001, Rat(8)));

  CHECK_THROWS_WITH_AS(static_cast<void>(surface_model(0, 1, 4, Rat(1))),
                       doctest::Contains("LambdaSingular"), Error);
  CHECK_THROWS_AS(static_cast<void>(surface_model(0, 0, 4, Rat(2))), Error);
  CHECK_THROWS_AS(static_cast<void>(surface_model(0, 1, 3, Rat(2))), Error);
}

TEST_CASE("56 lines with the expected family layout") {
  auto S = surface_model(0, 1, 4, Rat(2));
  auto lines = build_lines(S);
  REQUIRE(lines.size() == 56);
  for (int f = 1; f <= 7; ++f) CHECK(count_family(lines, f) == 8);

  // family (2) with a = 1 and the minus sign: u + lambda X2 - X3 = 0
  bool found_v4 = false;
  for (const auto& l : lines) {
    if (l.family != 2 || l.sign != -1) continue;
    if (l.linear[1] == S.field->rational(Rat(2)) &&
        l.linear[2] == -S.field->one())
      found_v4 = true;
  }
  CHECK(found_v4);

  // every line passes the membership identity with normalization 2
  for (const auto& l : lines) {
    auto v = verify_line(S, l);
    CHECK(v.passed);
    CHECK(v.normalization == 2);
    CHECK(l.norm_factor == 2);
  }
}

TEST_CASE("corrupted lift fails verification") {
  auto S = surface_model(0, 1, 4, Rat(2));
  auto lines = build_lines(S);
  Line bad = lines[0];
  // flip the sign of one term of the w-expression
  alg::HomogPoly w(bad.w_expr.field(), bad.w_expr.variables());
  bool flipped = false;
  for (const auto& [e, c] : bad.w_expr.terms()) {
    w.add_term(e, flipped ? c : -c);
    flipped = true;
  }
  bad.w_expr = w;
  CHECK(!verify_line(S, bad).passed);
}

TEST_CASE("lines exist across the regression lambdas") {
  for (Rat lam : {Rat(3), Rat(5), Rat(1, 2)}) {
    CAPTURE(to_string(lam));
    auto S = surface_model(0, 1, 4, lam);
    auto lines = build_lines(S);
    CHECK(lines.size() == 56);
    for (const auto& l : lines) CHECK(verify_line(S, l).passed);
  }
}

TEST_CASE("lines on the twist-2 and twist-1 charts") {
  for (int r : {2, 1}) {
    CAPTURE(r);
    auto S = surface_model(0, 1, r, Rat(2));
    auto lines = build_lines(S);
    CHECK(lines.size() == 56);
    for (const auto& l : lines) CHECK(verify_line(S, l).passed);
  }
}

TEST_CASE("galois permutations of the 56 lines") {
  auto S = surface_model(0, 1, 4, Rat(2));
  auto lines = build_lines(S);

  std::vector<std::vector<int>> perms;
  for (unsigned mask = 0; mask < 16; ++mask)
    perms.push_back(
        galois_permutation(S, lines, alg::SignVector::from_mask(mask)));

  CHECK(is_identity(perms[0]));
  for (unsigned mask = 0; mask < 16; ++mask) {
    CAPTURE(mask);
    CHECK(is_identity(compose_perm(perms[mask], perms[mask])));  // involution
  }
  for (unsigned m1 = 0; m1 < 16; ++m1)
    for (unsigned m2 = 0; m2 < 16; ++m2) {
      auto ab = compose_perm(perms[m1], perms[m2]);
      CHECK(ab == compose_perm(perms[m2], perms[m1]));
      CHECK(ab == perms[m1 ^ m2]);  // compatible with sign-vector XOR
    }

  // sigma_I on family (1): root a -> -a, same lift sign. Build order is
  // (root 0, +), (root 0, -), (root 1 = -root 0, +), ...
  const auto& pI = perms[0b0001];
  CHECK(pI[0] == 2);
  CHECK(pI[1] == 3);
  CHECK(pI[2] == 0);
  CHECK(lines[pI[0]].sign == lines[0].sign);

  // linear form fixed by eps iff all its coefficients are fixed
  for (unsigned mask = 0; mask < 16; ++mask) {
    for (size_t i = 0; i < lines.size(); ++i) {
      bool coeffs_fixed = true;
      for (const auto& c : lines[i].linear)
        if (!(c.apply_mask(mask) == c)) coeffs_fixed = false;
      bool form_fixed =
          lines[perms[mask][i]].linear == lines[i].linear;
      CHECK(coeffs_fixed == form_fixed);
    }
  }
}

TEST_CASE("galois permutations at the degenerate lambda = 3 algebra") {
  auto S = surface_model(0, 1, 4, Rat(3));
  CHECK(!S.field->verified_field());
  auto lines = build_lines(S);
  std::vector<std::vector<int>> perms;
  for (unsigned mask = 0; mask < 16; ++mask)
    perms.push_back(
        galois_permutation(S, lines, alg::SignVector::from_mask(mask)));
  for (unsigned m1 = 0; m1 < 16; ++m1) {
    CHECK(is_identity(compose_perm(perms[m1], perms[m1])));
    for (unsigned m2 = 0; m2 < m1; ++m2)
      CHECK(compose_perm(perms[m1], perms[m2]) == perms[m1 ^ m2]);
  }
}

TEST_CASE("fermat model at lambda = 0") {
  auto M = fermat_model();
  CHECK(M.zeta * M.zeta == M.field->monomial(0b01));  // zeta^2 = I
  auto z4 = (M.zeta * M.zeta) * (M.zeta * M.zeta);
  CHECK(z4 == -M.field->one());  // zeta^4 = -1
  auto lines = fermat_lines(M);
  CHECK(lines.size() == 56);
  std::set<std::string> keys;
  for (const auto& l : lines) keys.insert(l.key());
  CHECK(keys.size() == 56);
}

TEST_CASE("intersection numbers of the chosen basis at lambda = 0") {
  auto M = fermat_model();
  auto v = fermat_basis_lines(M);

  // pairwise intersections; self-intersection -1 from del Pezzo theory
  long long gram[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      gram[i][j] = i == j ? -1 : intersection_number(M, v[i], v[j]);

  // v1..v7 pairwise disjoint
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) CHECK(gram[i][j] == 0);

  // v8 = v6 + v7 + v8' is orthogonal to v1..v7 with v8^2 = +1
  auto dot_v8 = [&](int i) {
    return gram[5][i] + gram[6][i] + gram[7][i];
  };
  for (int i = 0; i < 7; ++i) CHECK(dot_v8(i) == 0);
  long long v8sq = 0;
  for (int a : {5, 6, 7})
    for (int b : {5, 6, 7}) v8sq += gram[a][b];
  CHECK(v8sq == 1);

  // -K = 3 v8 - sum v_i: k.v_i = 1 and k.k = 2
  for (int i = 0; i < 7; ++i) {
    long long kv = 3 * dot_v8(i);
    for (int j = 0; j < 7; ++j) kv -= gram[j][i];
    CHECK(kv == 1);
  }
  long long kk = 9 * v8sq;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) kk += gram[i][j];
  long long cross = 0;
  for (int i = 0; i < 7; ++i) cross += dot_v8(i);
  kk -= 2 * 3 * cross;
  CHECK(kk == 2);
}

TEST_CASE("two lifts of one bitangent meet twice") {
  auto M = fermat_model();
  auto lines = fermat_lines(M);
  // find a pair with equal linear forms
  bool checked = false;
  for (size_t i = 0; i < lines.size() && !checked; ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].linear == lines[j].linear) {
        CHECK(intersection_number(M, lines[i], lines[j]) == 2);
        checked = true;
        break;
      }
    }
  CHECK(checked);
  CHECK_THROWS_WITH_AS(
      static_cast<void>(intersection_number(M, lines[0], lines[0])),
      doctest::Contains("SameLine"), Error);
}
