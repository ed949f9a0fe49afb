#include <doctest.h>

#include "gen.hpp"
#include "skein/curves.hpp"

using namespace skein;

namespace {

using C = CoeffElem;

const Curves& curves() {
  static const Curves cv;
  return cv;
}

// Random element of Lambda as a word in [[1,1],[0,1]], [[1,0],[2,1]], their
// inverses and -1.
LambdaMatrix random_lambda(gen::Rng& r) {
  static const LambdaMatrix gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 2, 1}, {1, 0, -2, 1}, {-1, 0, 0, -1}};
  LambdaMatrix m;
  const int len = gen::uniform(r, 0, 6);
  for (int i = 0; i < len; ++i) m = m * gens[gen::uniform(r, 0, 4)];
  return m;
}

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("kinds and canonical signs") {
  CHECK(kind_of({1, 0}) == CurveKind::Arc);
  CHECK(kind_of({1, 1}) == CurveKind::Knot);
  const auto c = CurveIndex::classify(-2, -4);
  CHECK(c.c == IntPair{2, 4});
  CHECK(c.kind == CurveKind::Knot);
  CHECK(CurveIndex::classify(0, -3).c == IntPair{0, 3});
  CHECK_THROWS_AS(CurveIndex::classify(0, 0), std::invalid_argument);
}

TEST_CASE("intersection numbers") {
  CHECK(intersection_number({1, 0}, {0, 1}) == 1);
  CHECK(intersection_number({2, 3}, {2, 3}) == 0);
  CHECK(intersection_number({1, 2}, {2, 1}) == 3);
  CHECK_THROWS_AS(intersection_number({2, 2}, {1, 0}), std::invalid_argument);
}

TEST_CASE("Lambda action") {
  const LambdaMatrix id;
  const LambdaMatrix t{1, 1, 0, 1};
  CHECK(lambda_act(t, {0, 1}) == IntPair{0, 1});
  CHECK_THROWS_AS(lambda_act({2, 1, 1, 1}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_act({1, 0, 1, 1}, {1, 0}), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    gen::Rng r(seed);
    const auto m1 = random_lambda(r), m2 = random_lambda(r);
    REQUIRE(m1.in_lambda());
    const auto c = gen::curve(r, 6), d = gen::primitive_curve(r, 6);
    INFO("seed " << seed);
    CHECK(lambda_act(id, c) == c.canonical());
    CHECK(kind_of(lambda_act(m1, c)) == kind_of(c));
    CHECK(lambda_act(m1 * m2, c) == lambda_act(m1, lambda_act(m2, c)));
    CHECK(lambda_act(m1, c).depth() == c.depth());
    if (seed < 100) {
      const auto e = gen::primitive_curve(r, 6);
      CHECK(intersection_number(lambda_act(m1, d), lambda_act(m1, e)) == intersection_number(d, e));
    }
  }
}

TEST_CASE("base realizations") {
  const auto& cv = curves();
  const auto& sys = cv.system();
  const auto a = sys.generator("a"), b = sys.generator("b"), g = sys.generator("g");
  CHECK(cv.realize({1, 0}) == b);
  CHECK(cv.realize({0, 1}) == a);
  CHECK(cv.realize({1, 1}) == g);
  CHECK(cv.realize({2, 1}) == C::A(-1) * sys.mul(b, g) - C::A(-2) * a);
  CHECK(cv.realize({1, 2}) == C::A() * sys.mul(a, g) - C::A(2) * b);
  CHECK(cv.realize({2, 0}) == sys.mul(b, b) - SkeinElem(2));
  CHECK(cv.realize({2, 0}, Variant::Power) == sys.mul(b, b));
  CHECK(cv.realize({-1, -1}) == g);
}

TEST_CASE("expansion of small elements") {
  const auto& cv = curves();
  const auto& sys = cv.system();
  CHECK(cv.expand(sys.generator("a")) == [] {
    CurveExpansion e;
    e.add({0, 1}, 1);
    return e;
  }());
  CurveExpansion ab;
  ab.add({1, 1}, C::A(-1));
  ab.add({1, -1}, C::A());
  ab.add_scalar(C::d0() + C::d1());
  CHECK(cv.expand(sys.mul(sys.generator("a"), sys.generator("b"))) == ab);
  CHECK(ab == det1_product({0, 1}, {1, 0}));
  CurveExpansion sq;
  sq.add({2, 0}, 1);
  CHECK(cv.expand(sys.mul(sys.generator("b"), sys.generator("b")) - SkeinElem(2)) == sq);
}

TEST_CASE("determinant one products") {
  CurveExpansion e;
  e.add({1, 1}, C::A());
  e.add({1, -1}, C::A(-1));
  e.add_scalar(C::d0() + C::d1());
  CHECK(det1_product({1, 0}, {0, 1}) == e);
  CurveExpansion f;
  f.add({1, 2}, C::A());
  f.add({1, 0}, C::A(-1));
  CHECK(det1_product({1, 1}, {0, 1}) == f);

  const auto& cv = curves();
  int checked = 0;
  for (int n1 = -4; n1 <= 4; ++n1)
    for (int k1 = -4; k1 <= 4; ++k1)
      for (int n2 = -4; n2 <= 4; ++n2)
        for (int k2 = -4; k2 <= 4; ++k2) {
          const IntPair c1{n1, k1}, c2{n2, k2};
          if (c1.canonical() != c1 || c2.canonical() != c2 || c1.is_zero() || c2.is_zero()) continue;
          if (std::abs(det(c1, c2)) != 1) continue;
          INFO(c1.to_string() << " * " << c2.to_string());
          CHECK(cv.product(c1, c2) == det1_product(c1, c2));
          ++checked;
        }
  CHECK(checked == 90);
}

TEST_CASE("chebyshev threading identity") {
  const auto& cv = curves();
  const auto& sys = cv.system();
  const auto b = sys.generator("b");
  auto T = [&](int k) { return k == 0 ? SkeinElem(2) : cv.realize({k, 0}); };
  for (int k = 1; k <= 8; ++k) CHECK(sys.mul(b, T(k)) == T(k + 1) + T(k - 1));
  for (int k = 0; k <= 6; ++k) CHECK(cv.realize({3 * k + 3, 3}) == sys.chebyshev(3, cv.realize({k + 1, 1})));
}

TEST_CASE("basis conversions describe the same element") {
  const auto& cv = curves();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    gen::Rng r(seed);
    CurveExpansion x;
    for (int i = 0; i < 3; ++i) x.add(gen::curve(r, 4), gen::coeff(r, 2));
    x.add_scalar(gen::coeff(r, 1));
    const auto p = to_power_basis(x), g = to_geometric_basis(x);
    CHECK(p.basis() == Variant::Power);
    CHECK(g.basis() == Variant::Geometric);
    CHECK(cv.realize(p) == cv.realize(x));
    CHECK(cv.realize(g) == cv.realize(x));
    CHECK(cv.expand(cv.realize(x)) == x);
  }
}

TEST_CASE("products expand back to the algebra product") {
  const auto& cv = curves();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    gen::Rng r(seed);
    const auto c1 = gen::curve(r, 3), c2 = gen::curve(r, 3);
    const auto prod = cv.product(c1, c2);
    CHECK(cv.realize(prod) == cv.system().mul(cv.realize(c1), cv.realize(c2)));
  }
}

TEST_CASE("realize needs the unit-puncture specialization") {
  const auto& cv = curves();
  for (const auto& [label, rel] : cv.system().relations())
    for (const auto& [w, c] : rel.terms()) CHECK_FALSE(c.has_puncture_variables());
}

}  // TEST_SUITE
