#include <doctest.h>

#include "gen.hpp"
#include "skein/pi.hpp"

using namespace skein;

TEST_SUITE("pi") {

TEST_CASE("images of generators and scalars") {
  const auto four = make_presentation(PresentationId::RY022_4GEN);
  const Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
  CHECK(pi_commutative(four.generator("g1"), four) == y * y - 2);
  CHECK(pi_commutative(four.generator("g2"), four) == z * z - 2);
  CHECK(pi_commutative(four.generator("a"), four) == x);
  CHECK(pi_commutative(four.generator("b"), four) == y * z - x);
  CHECK(pi_commutative(SkeinElem(1), four) == Poly3(1));
  CHECK(pi_scalar(CoeffElem::A(3) * CoeffElem::v1(-2)) == Poly3(1));
  CHECK(pi_scalar(CoeffElem::d0()) == Poly3(2));
}

TEST_CASE("boundary image is forced by the cubic relation") {
  const Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
  const Poly3 expected = x * y * z - x * x - y * y - z * z + 2;
  CHECK(derive_pi_boundary() == expected);
  CHECK(pi_scalar(CoeffElem::d1()) == expected);
}

TEST_CASE("exact division") {
  const Poly3 x = Poly3::x(), y = Poly3::y();
  const Poly3 p = (x + y) * (x - 3 * y * y + 1);
  CHECK(p.divide_exact(x + y) == x - 3 * y * y + 1);
  CHECK_THROWS(p.divide_exact(x + 2));
}

TEST_CASE("pi is multiplicative on random word pairs") {
  for (auto id : {PresentationId::RY022_4GEN, PresentationId::RY022_3GEN}) {
    const auto sys = make_presentation(id);
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      gen::Rng r(seed);
      const auto a = SkeinElem::word(gen::word(r, sys, 5));
      const auto b = SkeinElem::word(gen::word(r, sys, 5));
      INFO(presentation_name(id) << " seed " << seed);
      CHECK(pi_commutative(sys.mul(a, b), sys) == pi_commutative(a, sys) * pi_commutative(b, sys));
    }
  }
}

TEST_CASE("basis images are independent") {
  const auto images = pi_basis_images(3);
  CHECK(images.size() == 112);
  CHECK(rational_rank(images) == 112);
  // A dependent family is detected.
  auto dependent = images;
  dependent.push_back(images[3] + 2 * images[17]);
  CHECK(rational_rank(dependent) == 112);
}

}  // TEST_SUITE
