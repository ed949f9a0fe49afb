#include <doctest.h>

#include "gen.hpp"
#include "skein/curves.hpp"
#include "skein/torus.hpp"

using namespace skein;

namespace {

HalfLaurent A(int p) { return HalfLaurent::monomial(2 * p); }

TorusExpansion single(IntPair c) {
  TorusExpansion e;
  e.add(c, 1);
  return e;
}

const Torus& torus() {
  static const Torus t;
  return t;
}

}  // namespace

TEST_SUITE("torus") {

TEST_CASE("product-to-sum examples") {
  TorusExpansion e;
  e.add({1, 1}, A(1));
  e.add({1, -1}, A(-1));
  CHECK(fg_product(TorusCurve::make(1, 0), TorusCurve::make(0, 1)) == e);

  TorusExpansion sq;
  sq.add({2, 0}, 1);
  sq.add_scalar(2);
  CHECK(fg_product(TorusCurve::make(1, 0), TorusCurve::make(1, 0)) == sq);

  TorusExpansion f;
  f.add({3, 2}, A(1));
  f.add({1, 0}, A(-1));
  CHECK(fg_product(TorusCurve::make(2, 1), TorusCurve::make(1, 1)) == f);
  CHECK_THROWS(TorusCurve::make(0, 0));
  CHECK(TorusCurve::make(-2, -3) == TorusCurve::make(2, 3));
}

TEST_CASE("swapping the factors inverts A") {
  auto mirror = [](const TorusExpansion& x) {
    TorusExpansion out;
    for (const auto& [c, h] : x.terms()) out.add(c, h.substitute_power(-1));
    out.add_scalar(x.scalar().substitute_power(-1));
    return out;
  };
  for (int p = -4; p <= 4; ++p)
    for (int q = -4; q <= 4; ++q)
      for (int r = -4; r <= 4; ++r)
        for (int s = -4; s <= 4; ++s) {
          if ((p == 0 && q == 0) || (r == 0 && s == 0)) continue;
          const auto u = TorusCurve::make(p, q), w = TorusCurve::make(r, s);
          CHECK(fg_product(w, u) == mirror(fg_product(u, w)));
          if (p * s == q * r) CHECK(fg_product(u, w) == fg_product(w, u));
        }
  CHECK_FALSE(fg_product(TorusCurve::make(1, 0), TorusCurve::make(0, 1)) ==
              fg_product(TorusCurve::make(0, 1), TorusCurve::make(1, 0)));
}

TEST_CASE("realizations") {
  const auto& t = torus();
  const auto& sys = t.system();
  const auto x1 = sys.generator("x1"), x2 = sys.generator("x2"), x3 = sys.generator("x3");
  CHECK(t.realize(TorusCurve::make(1, 1)) == x3);
  CHECK(t.realize(TorusCurve::make(2, 0)) == sys.mul(x1, x1) - SkeinElem(2));
  CHECK(t.realize(TorusCurve::make(2, 1)) ==
        CoeffElem::A(-1) * sys.mul(x1, x3) - CoeffElem::A(-2) * x2);
  CHECK(t.expand(x1) == single({1, 0}));
  TorusExpansion two;
  two.add_scalar(2);
  CHECK(t.expand(SkeinElem(2)) == two);
  TorusExpansion e;
  e.add({1, 1}, A(1));
  e.add({1, -1}, A(-1));
  CHECK(t.expand(sys.mul(x1, x2)) == e);
}

TEST_CASE("realize then expand is the identity") {
  const auto& t = torus();
  for (int p = 0; p <= 8; ++p)
    for (int q = -8; q <= 8; ++q) {
      const IntPair c{p, q};
      if (c.is_zero() || c.canonical() != c) continue;
      CHECK(t.expand(t.realize(TorusCurve::make(p, q))) == single(c));
    }
}

TEST_CASE("product-to-sum matches the algebra") {
  const auto& t = torus();
  std::vector<TorusCurve> cs;
  for (int p = 0; p <= 5; ++p)
    for (int q = -5; q <= 5; ++q)
      if (IntPair c{p, q}; !c.is_zero() && c.canonical() == c) cs.push_back(TorusCurve::make(p, q));
  REQUIRE(cs.size() == 60);
  for (const auto& u : cs)
    for (const auto& w : cs) {
      INFO(u.p << "," << u.q << " * " << w.p << "," << w.q);
      CHECK(t.expand(t.system().mul(t.realize(u), t.realize(w))) == fg_product(u, w));
    }
}

TEST_CASE("Stern-Brocot split") {
  for (int n = 1; n <= 12; ++n)
    for (int k = -12; k <= 12; ++k) {
      const IntPair c{n, k};
      if (!c.primitive() || k == 0) continue;
      const auto s = stern_brocot_split(c);
      CHECK(s.left + s.right == c);
      CHECK(std::abs(s.sign) == 1);
      CHECK(s.sign == det(s.left, s.right));
      CHECK(std::abs(s.left.n) + std::abs(s.left.k) < n + std::abs(k));
      CHECK(std::abs(s.right.n) + std::abs(s.right.k) < n + std::abs(k));
    }
  CHECK_THROWS(stern_brocot_split({2, 4}));
  CHECK_THROWS(stern_brocot_split({1, 0}));
}

TEST_CASE("phi on generators and scalars") {
  const auto& t = torus();
  const auto three = make_presentation(PresentationId::RY022_3GEN);
  const auto four = make_presentation(PresentationId::RY022_4GEN);
  const auto& sys = t.system();
  CHECK(t.phi(three.generator("b"), three) == sys.generator("x1"));
  CHECK(t.phi(three.generator("a"), three) == sys.generator("x2"));
  CHECK(t.phi(three.generator("g"), three) == sys.generator("x3"));
  CHECK(t.phi(SkeinElem(CoeffElem::d0() + CoeffElem::d1()), three).is_zero());
  CHECK(t.expand(t.phi(four.generator("g2"), four)) == single({1, -1}));
}

TEST_CASE("phi is a homomorphism") {
  const auto& t = torus();
  for (auto id : {PresentationId::RY022_3GEN, PresentationId::RY022_4GEN}) {
    const auto src = make_presentation(id);
    CHECK(verify_homomorphism(src, t.system(), t.phi_images(src)).ok());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      gen::Rng r(seed);
      const auto a = gen::element(r, src, 2, 3), b = gen::element(r, src, 2, 3);
      CHECK(t.phi(src.mul(a, b), src) == t.system().mul(t.phi(a, src), t.phi(b, src)));
    }
  }
}

TEST_CASE("phi sends curves to torus curves") {
  const auto& t = torus();
  const Curves cv;
  for (int n = 0; n <= 8; ++n)
    for (int k = -8; k <= 8; ++k) {
      const IntPair c{n, k};
      if (c.is_zero() || c.canonical() != c) continue;
      INFO(c.to_string());
      CHECK(t.expand(t.phi(cv.realize(c), cv.system())) == single(c));
    }
}

TEST_CASE("three-punctured sphere to torus") {
  const auto src = make_presentation(PresentationId::RY013);
  const auto dst = make_presentation(PresentationId::S110);
  auto scalars = Specialization::unit_punctures();
  scalars.a_scale = 2;
  const auto report = verify_homomorphism(src, dst, identify_generators(src, dst, scalars));
  CHECK(report.residues.size() == src.relations().size());
  CHECK(report.ok());
  // Without squaring A the map fails.
  CHECK_FALSE(verify_homomorphism(src, dst, identify_generators(src, dst, Specialization::unit_punctures())).ok());
}

}  // TEST_SUITE
