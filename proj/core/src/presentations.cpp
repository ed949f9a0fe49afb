#include <initializer_list>

#include "skein/freealg.hpp"

namespace skein {
namespace {

using C = CoeffElem;

struct Builder {
  const Alphabet& alpha;

  Word w(std::initializer_list<const char*> letters) const {
    Word out;
    for (const char* l : letters) {
      auto id = alpha.find(l);
      if (!id) throw RewriteError(std::string("registry uses unknown letter ") + l);
      out.push_back(*id);
    }
    return out;
  }
  SkeinElem e(std::initializer_list<const char*> letters, C c = 1) const { return SkeinElem::word(w(letters), c); }
};

// A^2 - A^-2 and A - A^-1, the two recurring structure constants.
C qq() { return C::A(2) - C::A(-2); }
C qd() { return C::A(1) - C::A(-1); }
C vv() { return C::v1() * C::v2(); }

RewriteSystem four_gen() {
  Alphabet al{{"a", "b", "g1", "g2"}, {false, false, true, true}};
  Builder B{al};
  const C vinv = C::v1(-1) * C::v2(-1);
  const C loop = (C::A(1) + C::A(-1)).pow(2);
  std::vector<Rule> rules{
      {"(1)", B.w({"b", "a"}), B.e({"a", "b"}) - (vinv * qd()) * (B.e({"g2"}) - B.e({"g1"}))},
      {"(2)", B.w({"g1", "a"}), B.e({"a", "g1"}, C::A(2)) - B.e({"b"}, C::A(1) * qq())},
      {"(3)", B.w({"g2", "a"}), B.e({"a", "g2"}, C::A(-2)) + B.e({"b"}, C::A(-1) * qq())},
      {"(4)", B.w({"g1", "b"}), B.e({"b", "g1"}, C::A(-2)) + B.e({"a"}, C::A(-1) * qq())},
      {"(5)", B.w({"g2", "b"}), B.e({"b", "g2"}, C::A(2)) - B.e({"a"}, C::A(1) * qq())},
      // (6) and (7) as forced by the three-generator relations: the A-powers
      // on the squares are swapped and the constant carries d0 d1.
      {"(6)", B.w({"g1", "g2"}),
       B.e({"b", "b"}, C::A(-2) * vv()) + B.e({"a", "a"}, C::A(2) * vv()) +
           SkeinElem(C::d0() * C::d1() + loop - 2 * C::A(2) - 2 * C::A(-2))},
      {"(7)", B.w({"g2", "g1"}),
       B.e({"b", "b"}, C::A(2) * vv()) + B.e({"a", "a"}, C::A(-2) * vv()) +
           SkeinElem(C::d0() * C::d1() + loop - 2 * C::A(-2) - 2 * C::A(2))},
  };
  return RewriteSystem("ry022-4gen", std::move(al), std::move(rules));
}

RewriteSystem three_gen() {
  Alphabet al{{"b", "a", "g"}, {false, false, true}};
  Builder B{al};
  const C vinv = C::v1(-1) * C::v2(-1);
  const C boundary = C::d0() + C::d1();
  std::vector<Rule> rules{
      {"tor1", B.w({"a", "b"}),
       B.e({"b", "a"}, C::A(2)) - B.e({"g"}, vinv * C::A(1) * qq()) - SkeinElem(vinv * C::A(1) * qd() * boundary)},
      {"tor2", B.w({"g", "a"}), B.e({"a", "g"}, C::A(2)) - B.e({"b"}, C::A(1) * qq())},
      {"tor3", B.w({"g", "b"}), B.e({"b", "g"}, C::A(-2)) + B.e({"a"}, C::A(-1) * qq())},
  };
  const C pre = vinv * C::A(-1);
  SkeinElem cubic = pre * (B.e({"b", "b"}, vv() * C::A(2)) + B.e({"a", "a"}, vv() * C::A(-2)) +
                           B.e({"g", "g"}, C::A(2)) + B.e({"g"}, C::A(1) * boundary) +
                           SkeinElem(C::d0() * C::d1() - qd().pow(2)));
  ChainFamily fam{*al.find("b"), *al.find("a"), *al.find("g"), "tor4", std::move(cubic)};
  return RewriteSystem("ry022-3gen", std::move(al), std::move(rules), std::move(fam));
}

std::vector<Rule> torus_pair_rules(const Builder& B, const C& q2, const C& q, const C& c, const C& w1, const C& w2,
                                   const C& w3) {
  // [x1,x2]_q = w1^-1 c x3, [x2,x3]_q = w2^-1 c x1, [x3,x1]_q = w3^-1 c x2
  return {
      {"x2x1", B.w({"x2", "x1"}), B.e({"x1", "x2"}, q2) - B.e({"x3"}, q * w1.unit_inverse() * c)},
      {"x3x2", B.w({"x3", "x2"}), B.e({"x2", "x3"}, q2) - B.e({"x1"}, q * w2.unit_inverse() * c)},
      {"x3x1", B.w({"x3", "x1"}),
       B.e({"x1", "x3"}, q2.unit_inverse()) + B.e({"x2"}, q.unit_inverse() * w3.unit_inverse() * c)},
  };
}

RewriteSystem torus_bp() {
  Alphabet al{{"x1", "x2", "x3"}, {false, false, true}};
  Builder B{al};
  auto rules = torus_pair_rules(B, C::A(2), C::A(1), qq(), 1, 1, 1);
  SkeinElem cubic = C::A(-1) * (B.e({"x1", "x1"}, C::A(2)) + B.e({"x2", "x2"}, C::A(-2)) +
                                B.e({"x3", "x3"}, C::A(2)) - SkeinElem(2 * (C::A(2) + C::A(-2))));
  ChainFamily fam{*al.find("x1"), *al.find("x2"), *al.find("x3"), "cubic", std::move(cubic)};
  return RewriteSystem("torus-bp", std::move(al), std::move(rules), std::move(fam));
}

RewriteSystem ry013() {
  Alphabet al{{"x1", "x2", "x3"}, {false, false, true}};
  Builder B{al};
  // q = A^(1/2); the third puncture weight is carried by v1 v2.
  auto rules = torus_pair_rules(B, C::A(1), C::half_A(1), qd(), C::v1(), C::v2(), vv());
  return RewriteSystem("ry013", std::move(al), std::move(rules));
}

RewriteSystem s110() {
  Alphabet al{{"x1", "x2", "x3"}, {false, false, true}};
  Builder B{al};
  auto rules = torus_pair_rules(B, C::A(2), C::A(1), qq(), 1, 1, 1);
  return RewriteSystem("s110", std::move(al), std::move(rules));
}

}  // namespace

RewriteSystem make_presentation(PresentationId id) {
  switch (id) {
    case PresentationId::RY022_4GEN: return four_gen();
    case PresentationId::RY022_3GEN: return three_gen();
    case PresentationId::TORUS_BP: return torus_bp();
    case PresentationId::RY013: return ry013();
    case PresentationId::S110: return s110();
  }
  throw RewriteError("unknown presentation id");
}

}  // namespace skein
