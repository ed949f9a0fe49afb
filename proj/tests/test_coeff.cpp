#include <doctest.h>

#include "gen.hpp"
#include "skein/coeff.hpp"

using namespace skein;

namespace {

CoeffElem q_A() { return CoeffElem::A() + CoeffElem::A(-1); }

}  // namespace

TEST_SUITE("coeff") {

TEST_CASE("small identities") {
  const CoeffElem a = CoeffElem::A();
  const CoeffElem ai = CoeffElem::A(-1);
  CHECK((a - ai) * (a + ai) == CoeffElem::A(2) - CoeffElem::A(-2));
  CHECK((a + ai) * (a + ai) == CoeffElem::A(2) + 2 + CoeffElem::A(-2));
  CHECK((CoeffElem::d0() + 3 * CoeffElem::v1(-1)) * CoeffElem() == CoeffElem());
  CHECK(CoeffElem::half_A(2) == a);
  CHECK(CoeffElem(0).is_zero());
  CHECK((a - a).size() == 0);
}

TEST_CASE("ring axioms on random triples") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    gen::Rng r(seed);
    const auto x = gen::coeff(r), y = gen::coeff(r), z = gen::coeff(r);
    INFO("seed " << seed);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK(x - x == CoeffElem());
    CHECK(x * 1 == x);
  }
}

TEST_CASE("stored form is canonical") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng r(seed);
    const auto x = gen::coeff(r, 6);
    const auto terms = x.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i].second != 0);
      CHECK(terms[i].first.d0 >= 0);
      CHECK(terms[i].first.d1 >= 0);
      if (i) CHECK(terms[i - 1].first < terms[i].first);
    }
    // Rebuilding term by term in reverse gives the same value.
    CoeffElem y;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) y += CoeffElem::monomial(it->first, it->second);
    CHECK(y == x);
  }
}

TEST_CASE("units and exact division") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng r(seed);
    const auto u = gen::unit(r);
    const auto x = gen::coeff(r);
    CHECK(u.is_unit());
    CHECK(u * u.unit_inverse() == CoeffElem(1));
    CHECK((x * u).divide_by_unit(u) == x);
    const auto y = gen::coeff(r, 3);
    if (!y.is_zero()) CHECK((x * y).divide_exact(y) == x);
  }
  CHECK_FALSE(CoeffElem::d0().is_unit());
  CHECK_FALSE(CoeffElem(2).is_unit());
  CHECK_FALSE((CoeffElem::A() + 1).is_unit());
  CHECK_THROWS_AS(CoeffElem::d0().unit_inverse(), CoeffError);
  CHECK_THROWS_AS((CoeffElem::A() + 1).divide_exact(CoeffElem::A() - 1), CoeffError);
  CHECK_THROWS_AS(CoeffElem(1).divide_exact(CoeffElem()), CoeffError);
  CHECK_THROWS_AS(CoeffElem(1).divide_exact(CoeffElem::d0()), CoeffError);
}

TEST_CASE("powers") {
  const CoeffElem x = CoeffElem::A() + CoeffElem::d1();
  CHECK(x.pow(0) == CoeffElem(1));
  CHECK(x.pow(3) == x * x * x);
  CHECK(CoeffElem::v2(-1).pow(4) == CoeffElem::v2(-4));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(1) == HalfLaurent(1));
  CHECK(quantum_int(3) == HalfLaurent::monomial(-4) + 1 + HalfLaurent::monomial(4));
  for (int n = 1; n <= 12; ++n) CHECK(quantum_int(n).at_one() == n);
  const HalfLaurent d = HalfLaurent::monomial(2) - HalfLaurent::monomial(-2);
  for (int n = 1; n <= 20; ++n)
    CHECK(quantum_int(n) * d == HalfLaurent::monomial(2 * n) - HalfLaurent::monomial(-2 * n));
  CHECK(quantum_int_in(-2, 1) == -quantum_int(2));
  CHECK(quantum_int_in(3, 2) == quantum_int(3).substitute_power(2));
  CHECK_THROWS_AS(quantum_int(0), CoeffError);
}

TEST_CASE("chebyshev polynomials") {
  const CoeffElem x = CoeffElem::d0();
  CHECK(chebyshev(0, x) == CoeffElem(2));
  CHECK(chebyshev(0, x, true) == CoeffElem(1));
  CHECK(chebyshev(1, x) == x);
  CHECK(chebyshev(2, x) == x * x - 2);
  // Composition on a commuting indeterminate.
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned n = 0; n <= 5; ++n) CHECK(chebyshev(m, chebyshev(n, x)) == chebyshev(m * n, x));
  // T_k(y + 1/y) = y^k + y^-k.
  const CoeffElem y = CoeffElem::A() + CoeffElem::A(-1);
  for (unsigned k = 1; k <= 10; ++k) CHECK(chebyshev(k, y) == CoeffElem::A(k) + CoeffElem::A(-static_cast<int>(k)));
  // Coefficient table agrees with the recurrence.
  for (unsigned k = 0; k <= 8; ++k) {
    const auto c = chebyshev_coefficients(k);
    CoeffElem sum;
    for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * x.pow(static_cast<unsigned>(j));
    CHECK(sum == chebyshev(k, x));
  }
}

TEST_CASE("specialization") {
  const Specialization at_one{.half_A = 1.0, .v1_num = 1.0, .v2_num = 1.0, .d0_num = 0.0, .d1_num = 0.0};
  CHECK(std::abs(evaluate(CoeffElem::A() - CoeffElem::A(-1), at_one)) == 0.0);
  const auto units = Specialization::unit_punctures();
  CHECK(specialize(CoeffElem::v1(-1) * CoeffElem::v2(-1), units) == CoeffElem(1));
  Specialization torus;
  torus.v1 = CoeffElem(1);
  torus.v2 = CoeffElem(1);
  torus.d0 = q_A();
  torus.d1 = -q_A();
  CHECK(specialize(CoeffElem::d0() + CoeffElem::d1(), torus).is_zero());

  // specialize is a ring homomorphism.
  Specialization s;
  s.v1 = CoeffElem::A(3);
  s.v2 = -CoeffElem::v1(2);
  s.d0 = q_A();
  s.d1 = CoeffElem::d0() * 2 + 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng r(seed);
    const auto x = gen::coeff(r), y = gen::coeff(r);
    CHECK(specialize(x * y, s) == specialize(x, s) * specialize(y, s));
    CHECK(specialize(x + y, s) == specialize(x, s) + specialize(y, s));
  }
  Specialization bad;
  bad.v1 = CoeffElem();
  CHECK_THROWS_AS(bad.validate(), CoeffError);
  CHECK_THROWS_AS(evaluate(CoeffElem(1), units), CoeffError);
}

TEST_CASE("numeric evaluation is multiplicative") {
  const Specialization s{.half_A = std::polar(1.0, 0.3),
                         .v1_num = 1.5,
                         .v2_num = std::complex<double>(0.2, 0.7),
                         .d0_num = 2.0,
                         .d1_num = -0.5};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng r(seed);
    const auto x = gen::coeff(r), y = gen::coeff(r);
    const auto lhs = evaluate(x * y, s);
    const auto rhs = evaluate(x, s) * evaluate(y, s);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

}  // TEST_SUITE
