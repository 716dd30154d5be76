#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dworkgal/multiquad.hpp"
#include "dworkgal/polynomial.hpp"
#include "dworkgal/rational.hpp"

using namespace dworkgal;
using namespace dworkgal::alg;

namespace {

Rat rq(long n, long d = 1) { return Rat(Int(n), Int(d)); }

// deterministic small random rationals
struct Rng {
  std::mt19937 g{20240817};
  Rat rat(int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 7);
    return Rat(Int(num(g)), Int(den(g)));
  }
  AlgebraElement elem(const FieldPtr& F, int sparsity = 3) {
    std::vector<Rat> c(F->dim(), Rat(0));
    std::uniform_int_distribution<int> pick(0, F->dim() - 1);
    for (int i = 0; i < sparsity; ++i) c[pick(g)] = rat();
    return AlgebraElement(F, c);
  }
};

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == rq(1, 2));
  CHECK(parse_rational("-14") == rq(-14));
  CHECK(parse_rational(" 1/2 ") == rq(1, 2));
  CHECK(to_string(rq(-3, 6)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(rq(8, 9)).value == 2);   // 8/9 = 2 (2/3)^2
  CHECK(squarefree_part(rq(-3)).value == -3);    // -(lambda^2-1) at lambda=2
  CHECK(squarefree_part(rq(30)).value == 30);    // 2(lambda^4-1) at lambda=2
  CHECK(squarefree_part(rq(1)).value == 1);
  CHECK_THROWS_AS(squarefree_part(rq(0)), Error);
}

TEST_CASE("squarefree_part invariance under square scaling") {
  Rng rng;
  for (int i = 0; i < 60; ++i) {
    Rat r = rng.rat();
    Rat t = rng.rat();
    if (r == 0 || t == 0) continue;
    CHECK(squarefree_part(r * t * t).value == squarefree_part(r).value);
  }
}

TEST_CASE("field_new validates generators") {
  auto F = MultiQuadField::make(rq(2));
  CHECK(F->dim() == 16);
  CHECK(F->generators() == std::vector<Rat>{rq(-1), rq(2), rq(5), rq(3)});
  // independence oracle: all 15 nonempty subset products are non-squares
  for (unsigned s = 1; s < 16; ++s)
    CHECK(squarefree_part(F->subset_product(s)).value != 1);

  CHECK_THROWS_WITH_AS(static_cast<void>(MultiQuadField::make(rq(0))),
                       doctest::Contains("DependentClasses"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(MultiQuadField::make(rq(1))),
                       doctest::Contains("LambdaSingular"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(MultiQuadField::make(rq(-1))),
                       doctest::Contains("LambdaSingular"), Error);
}

TEST_CASE("apply_sign on basis roots") {
  auto F = MultiQuadField::make(rq(2));
  auto sqrt_d1 = F->monomial(0b0001);
  auto sv_i = SignVector{true, false, false, false};
  CHECK(sqrt_d1.apply_sign(sv_i) == -sqrt_d1);

  auto d1d4 = F->monomial(0b1001);
  auto sv_im = SignVector{true, false, false, true};
  CHECK(d1d4.apply_sign(sv_im) == d1d4);  // two flips cancel

  auto one = F->one();
  for (unsigned m = 0; m < 16; ++m)
    CHECK(one.apply_mask(m) == one);
}

TEST_CASE("algebra multiplication identities") {
  auto F = MultiQuadField::make(rq(2));
  auto s1 = F->monomial(0b0001);
  CHECK(s1 * s1 == F->rational(rq(-1)));  // sqrt(d1)^2 = d1

  auto s2 = F->monomial(0b0010);
  CHECK(s2.inverse() == s2 * rq(1, 2));  // 1/sqrt(2) = sqrt(2)/2

  auto s3 = F->monomial(0b0100), s4 = F->monomial(0b1000);
  CHECK((s3 + s4) * (s3 - s4) == F->rational(rq(5 - 3)));
}

TEST_CASE("field axioms on random elements") {
  auto F = MultiQuadField::make(rq(2));
  Rng rng;
  for (int i = 0; i < 25; ++i) {
    auto a = rng.elem(F), b = rng.elem(F), c = rng.elem(F);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == F->one());
    }
  }
  CHECK_THROWS_AS(F->zero().inverse(), Error);
}

TEST_CASE("apply_sign is a ring homomorphism and a faithful group action") {
  // lambda = 3 degenerates as a field (2(lambda^2-1) = 16 is a square);
  // the formal algebra still carries all 16 sign automorphisms.
  auto F = MultiQuadField::make_algebra(rq(3));
  CHECK(!F->verified_field());
  CHECK(MultiQuadField::make_algebra(rq(2))->verified_field());
  CHECK_THROWS_WITH_AS(static_cast<void>(MultiQuadField::make(rq(3))),
                       doctest::Contains("DependentClasses"), Error);
  Rng rng;
  for (unsigned m = 0; m < 16; ++m) {
    auto a = rng.elem(F), b = rng.elem(F);
    CHECK((a * b).apply_mask(m) == a.apply_mask(m) * b.apply_mask(m));
    CHECK((a + b).apply_mask(m) == a.apply_mask(m) + b.apply_mask(m));
    for (unsigned m2 = 0; m2 < 16; ++m2)
      CHECK(a.apply_mask(m).apply_mask(m2) == a.apply_mask(m ^ m2));
  }
  // faithful: nontrivial masks move some basis monomial
  for (unsigned m = 1; m < 16; ++m) {
    bool moved = false;
    for (unsigned s = 0; s < 16; ++s)
      if (F->monomial(s).apply_mask(m) != F->monomial(s)) moved = true;
    CHECK(moved);
  }
}

TEST_CASE("rationality criterion: fixed by all sign vectors iff rational") {
  auto F = MultiQuadField::make(rq(2));
  Rng rng;
  for (int i = 0; i < 40; ++i) {
    auto a = rng.elem(F);
    bool fixed = true;
    for (unsigned m = 0; m < 16; ++m)
      if (a.apply_mask(m) != a) fixed = false;
    CHECK(fixed == a.is_rational());
  }
}

TEST_CASE("serialization round trip order") {
  auto F = MultiQuadField::make(rq(2));
  auto x = F->monomial(0b0101, rq(7, 3));
  auto s = x.serialize();
  REQUIRE(s.size() == 16);
  CHECK(s[5] == "7/3");
  for (size_t i = 0; i < 16; ++i)
    if (i != 5) CHECK(s[i] == "0");
}

TEST_CASE("poly substitution basics") {
  auto F = MultiQuadField::make(rq(2));
  std::vector<std::string> vars{"u", "X2", "X3"};
  auto u2 = HomogPoly::monomial(F->one(), {2, 0, 0}, vars);
  // relation u - X2 = 0, eliminate u -> X2^2
  std::array<AlgebraElement, 3> rel{F->one(), -F->one(), F->zero()};
  auto sub = substitute_linear(u2, rel, 0);
  CHECK(sub == HomogPoly::monomial(F->one(), {0, 2, 0}, vars));

  // p = u^4 - X2^4, relation u - a X3 = 0 -> a^4 X3^4 - X2^4
  auto a = F->monomial(0b0011) + F->rational(rq(1, 2));  // any element of L
  auto p = HomogPoly::monomial(F->one(), {4, 0, 0}, vars) -
           HomogPoly::monomial(F->one(), {0, 4, 0}, vars);
  std::array<AlgebraElement, 3> rel2{F->one(), F->zero(), -a};
  auto q = substitute_linear(p, rel2, 0);
  auto a2 = a * a;
  auto expect = HomogPoly::monomial(a2 * a2, {0, 0, 4}, vars) -
                HomogPoly::monomial(F->one(), {0, 4, 0}, vars);
  CHECK(q == expect);

  CHECK_THROWS_AS(substitute_linear(p, rel2, 1), Error);  // coeff of X2 is 0
}

TEST_CASE("branch quartic restriction against evaluation oracle") {
  // w^2-model quartic u^4 - X2^4 - X3^4 + 4l u^2 X2 X3 + 2l^2 X2^2 X3^2,
  // restricted to X2 = a X3; oracle: evaluation at random points of the
  // relation locus must agree with the substituted polynomial.
  Rat lambda = rq(2);
  auto F = MultiQuadField::make(lambda);
  std::vector<std::string> vars{"u", "X2", "X3"};
  auto L = [&](const Rat& r) { return F->rational(r); };
  HomogPoly Q(F, vars);
  Q.add_term({4, 0, 0}, F->one());
  Q.add_term({0, 4, 0}, -F->one());
  Q.add_term({0, 0, 4}, -F->one());
  Q.add_term({2, 1, 1}, L(4 * lambda));
  Q.add_term({0, 2, 2}, L(2 * lambda * lambda));

  // a = (r + s)/2: a root of a^4 + 2 l^2 a^2 + 1
  auto a = (F->monomial(0b1011) + F->monomial(0b0111)) * rq(1, 2);
  auto a2 = a * a;
  CHECK(a2 * a2 + a2 * (2 * lambda * lambda) + F->one() == F->zero());

  std::array<AlgebraElement, 3> rel{F->zero(), F->one(), -a};
  auto q = substitute_linear(Q, rel, 1);
  CHECK(q.degree() == 4);
  CHECK(q.coefficient({4, 0, 0}) == F->one());  // u^4 coefficient 1

  Rng rng;
  for (int i = 0; i < 12; ++i) {
    auto u = rng.elem(F, 2), x3 = rng.elem(F, 2);
    std::array<AlgebraElement, 3> pt{u, a * x3, x3};
    std::array<AlgebraElement, 3> pt2{u, F->zero(), x3};
    CHECK(Q.eval(pt) == q.eval(pt2));
  }
}
