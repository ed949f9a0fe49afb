#include <doctest.h>

#include "gen.hpp"
#include "io/parse.hpp"
#include "io/serialize.hpp"
#include "skein/pts.hpp"

using namespace skein;
using io::ParseError;

namespace {

using C = CoeffElem;

SkeinElem word(const RewriteSystem& sys, std::initializer_list<const char*> letters, C c = 1) {
  Word out;
  for (const char* l : letters) out.push_back(*sys.alphabet().find(l));
  return SkeinElem::word(out, c);
}

std::size_t error_position(std::string_view text, const RewriteSystem& sys) {
  try {
    io::parse_expression(text, sys);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("expression grammar") {
  const auto four = make_presentation(PresentationId::RY022_4GEN);
  CHECK(io::parse_expression("b*a", four) == word(four, {"b", "a"}));
  CHECK_THROWS_AS(io::parse_expression("b a", four), ParseError);
  // The correction term of the b a rule.
  CHECK(io::parse_expression("v1^-1*v2^-1*(A - A^-1)*(g2 - g1)", four) ==
        (C::v1(-1) * C::v2(-1) * (C::A() - C::A(-1))) * (word(four, {"g2"}) - word(four, {"g1"})));
  // '*' binds tighter than '+', '^' tighter than '*'.
  CHECK(io::parse_expression("a + b*g1", four) == word(four, {"a"}) + word(four, {"b", "g1"}));
  CHECK(io::parse_expression("2*a^2*b", four) == word(four, {"a", "a", "b"}, 2));
  CHECK(io::parse_expression("-a^2", four) == -word(four, {"a", "a"}));
  CHECK(io::parse_expression("a - b - g1", four) == word(four, {"a"}) - word(four, {"b"}) - word(four, {"g1"}));
  CHECK(io::parse_expression("Ah^3*d0*d1", four) == SkeinElem(C::half_A(3) * C::d0() * C::d1()));
  CHECK(io::parse_expression("(a*b)*g1", four) == io::parse_expression("a*(b*g1)", four));
  CHECK(io::parse_expression("a^0", four) == SkeinElem(1));
}

TEST_CASE("parse errors carry positions") {
  const auto three = make_presentation(PresentationId::RY022_3GEN);
  CHECK(error_position("b*", three) == 2);
  CHECK(error_position("b + x", three) == 4);
  CHECK(error_position("(b", three) == 2);
  CHECK(error_position("b^-1", three) == 0);
  CHECK(error_position("d0^-2", three) == 0);
  CHECK(error_position("b ) a", three) == 2);
  CHECK(error_position("C(1,1)", three) == 0);
  CHECK(error_position("g1", three) == 0);
  CHECK(error_position("b*a", three) == std::string::npos);
  CHECK_THROWS_WITH_AS(io::parse_expression("b & a", three), "unexpected '&' at position 2", ParseError);
}

TEST_CASE("curve atoms") {
  const Curves cv;
  const io::CurveResolver resolve = [&](IntPair c) { return cv.realize(c); };
  CHECK(io::parse_expression("C(1,1)", cv.system(), resolve) == cv.realize({1, 1}));
  CHECK(io::parse_expression("C(2,1)*C(0,-1)", cv.system(), resolve) ==
        SkeinElem::concat(cv.realize({2, 1}), cv.realize({0, 1})));
  CHECK_THROWS_AS(io::parse_expression("C(0,0)", cv.system(), resolve), ParseError);
  CHECK(io::parse_curve("(1,1)") == IntPair{1, 1});
  CHECK(io::parse_curve(" 3 , -2 ") == IntPair{3, -2});
  CHECK(io::parse_curve("C(0,1)") == IntPair{0, 1});
  CHECK_THROWS_AS(io::parse_curve("1;2"), ParseError);
  CHECK_THROWS_AS(io::parse_curve("(x,1)"), ParseError);
}

TEST_CASE("exact decimals read back") {
  for (double v : {0.0, -0.0, 0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5e-17}) {
    const auto s = io::exact_decimal(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("scalar and element round trips") {
  const auto three = make_presentation(PresentationId::RY022_3GEN);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    gen::Rng r(seed);
    const auto c = gen::coeff(r, 5);
    const auto j = io::to_json(c);
    CHECK(io::coeff_from_json(j) == c);
    CHECK(io::to_json(io::coeff_from_json(j)).dump() == j.dump());
    const auto x = gen::element(r, three, 4, 4);
    const auto k = io::to_json(x, three);
    CHECK(io::skein_from_json(k, three) == x);
    CHECK(io::to_json(io::skein_from_json(io::json::parse(k.dump()), three), three).dump() == k.dump());
  }
  // Big coefficients survive as decimal strings.
  const C huge = C::monomial({1, 0, 0, 2, 0}, Integer("123456789012345678901234567890"));
  CHECK(io::coeff_from_json(io::json::parse(io::to_json(huge).dump())) == huge);
  const auto four = make_presentation(PresentationId::RY022_4GEN);
  CHECK_THROWS_AS(io::skein_from_json(io::to_json(word(three, {"b"}), three), four), std::invalid_argument);
}

TEST_CASE("expansion round trips") {
  const Curves cv;
  for (Variant v : {Variant::Threaded, Variant::Geometric, Variant::Power}) {
    CurveExpansion x(v);
    gen::Rng r(static_cast<std::uint64_t>(v));
    // Curve coefficients never carry puncture variables.
    const auto units = Specialization::unit_punctures();
    for (int i = 0; i < 4; ++i) x.add(gen::curve(r, 5), specialize(gen::coeff(r, 3), units));
    x.add_scalar(specialize(gen::coeff(r, 2), units));
    const auto j = io::to_json(x);
    const auto back = io::curves_from_json(io::json::parse(j.dump()));
    CHECK(back == x);
    CHECK(io::to_json(back).dump() == j.dump());
  }
  const auto prod = cv.product({1, 0}, {3, 2});
  CHECK(io::curves_from_json(io::to_json(prod)) == prod);
  CurveExpansion bad;
  bad.add({1, 0}, CoeffElem::v1());
  CHECK_THROWS(io::to_json(bad));

  TorusExpansion t = fg_product(TorusCurve::make(2, 1), TorusCurve::make(1, 3));
  t.add_scalar(HalfLaurent::monomial(-3, 4));
  CHECK(io::torus_from_json(io::json::parse(io::to_json(t).dump())) == t);
}

TEST_CASE("representation round trips are bit-exact") {
  const auto s = sample_shadow(5, 17);
  const auto js = io::to_json(s);
  const auto s2 = io::shadow_from_json(io::json::parse(js.dump()));
  CHECK(s2.N == s.N);
  CHECK(s2.t1 == s.t1);
  CHECK(s2.t2 == s.t2);
  CHECK(s2.t3 == s.t3);
  CHECK(s2.d0 == s.d0);
  CHECK(s2.d1 == s.d1);
  CHECK(s2.v1 == s.v1);
  CHECK(s2.v2 == s.v2);
  CHECK(s2.x == s.x);
  CHECK(s2.sqrt_v == s.sqrt_v);
  const auto m = build_rep(s);
  const auto jm = io::to_json(m);
  const auto m2 = io::rep_from_json(io::json::parse(jm.dump()));
  CHECK(m2.alpha == m.alpha);
  CHECK(m2.beta == m.beta);
  CHECK(m2.gamma == m.gamma);
  CHECK(io::to_json(m2).dump() == jm.dump());
}

TEST_CASE("report documents") {
  const auto sys = make_presentation(PresentationId::RY013);
  const auto conf = io::to_json(check_local_confluence(sys), sys);
  CHECK(conf.is_object());
  const Curves cv;
  const auto rec = io::to_json(positivity_record(cv, {1, 0}, {3, 2}));
  CHECK(rec.contains("grouped"));
  const auto s = sample_shadow(3, 1);
  const auto v = io::to_json(verify_rep(build_rep(s), s));
  CHECK(v.is_object());
  CHECK(io::to_json(check_admissibility(s)).is_object());
}

}  // TEST_SUITE
