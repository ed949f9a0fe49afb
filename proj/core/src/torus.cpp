#include "skein/torus.hpp"

#include <mutex>
#include <sstream>

#include "skein/basis_table.hpp"

namespace skein {

TorusCurve TorusCurve::make(int p, int q) {
  if (p == 0 && q == 0) throw std::invalid_argument("(0,0) is not a curve");
  const IntPair c = IntPair{p, q}.canonical();
  return {c.n, c.k};
}

void TorusExpansion::add(IntPair c, const HalfLaurent& coeff) {
  if (c.is_zero()) {
    add_scalar(coeff * HalfLaurent(2));
    return;
  }
  c = c.canonical();
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void TorusExpansion::add_scalar(const HalfLaurent& coeff) { scalar_ += coeff; }

HalfLaurent TorusExpansion::coeff(IntPair c) const {
  auto it = terms_.find(c.canonical());
  return it == terms_.end() ? HalfLaurent{} : it->second;
}

std::string TorusExpansion::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, h] : terms_) {
    os << (first ? "" : " + ") << "(" << h.to_string() << ")" << c.to_string() << "_T";
    first = false;
  }
  if (!scalar_.is_zero()) os << (first ? "" : " + ") << "(" << scalar_.to_string() << ")";
  return os.str();
}

TorusExpansion fg_product(TorusCurve u, TorusCurve w) {
  const int d = det(u.pair(), w.pair());
  TorusExpansion out;
  out.add(u.pair() + w.pair(), HalfLaurent::monomial(2 * d));
  out.add(u.pair() - w.pair(), HalfLaurent::monomial(-2 * d));
  return out;
}

struct Torus::Cache {
  std::recursive_mutex mu;
  std::map<IntPair, SkeinElem> primitive;
};

Torus::Torus() : sys_(make_presentation(PresentationId::TORUS_BP)), cache_(std::make_unique<Cache>()) {
  table_ = std::make_unique<BasisTable>(sys_, [this](IntPair c) { return realize(TorusCurve::make(c.n, c.k)); });
}

Torus::~Torus() = default;

SkeinElem Torus::realize_primitive(IntPair c) const {
  c = c.canonical();
  if (!c.primitive()) throw std::invalid_argument("realize_primitive needs gcd 1");
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->primitive.find(c); it != cache_->primitive.end()) return it->second;
  SkeinElem r;
  if (c == IntPair{1, 0}) {
    r = sys_.generator("x1");
  } else if (c == IntPair{0, 1}) {
    r = sys_.generator("x2");
  } else if (c == IntPair{1, 1}) {
    r = sys_.generator("x3");
  } else {
    // left * right = A^s target + A^-s (left - right)
    const Split sp = stern_brocot_split(c);
    const CoeffElem back = CoeffElem::A(-sp.sign);
    SkeinElem prod = sys_.mul(realize_primitive(sp.left), realize_primitive(sp.right));
    r = back * (prod - back * realize_primitive(sp.left - sp.right));
  }
  cache_->primitive.emplace(c, r);
  return r;
}

SkeinElem Torus::realize(TorusCurve c) const {
  const IntPair pc = c.pair();
  return sys_.chebyshev(static_cast<unsigned>(pc.depth()), realize_primitive(pc.primitive_part()));
}

TorusExpansion Torus::expand(const SkeinElem& x) const {
  const auto res = table_->expand(sys_.reduce(x));
  TorusExpansion out;
  for (const auto& [c, k] : res.curves) out.add(c, k.to_half_laurent());
  out.add_scalar(res.scalar.to_half_laurent());
  return out;
}

HomImages Torus::phi_images(const RewriteSystem& source) const {
  HomImages img;
  img.scalars.v1 = CoeffElem(1);
  img.scalars.v2 = CoeffElem(1);
  img.scalars.d0 = CoeffElem::A(1) + CoeffElem::A(-1);
  img.scalars.d1 = -(CoeffElem::A(1) + CoeffElem::A(-1));
  const auto x1 = sys_.generator("x1"), x2 = sys_.generator("x2"), x3 = sys_.generator("x3");
  for (const auto& name : source.alphabet().names) {
    if (name == "b") img.generators.push_back(x1);
    else if (name == "a") img.generators.push_back(x2);
    else if (name == "g" || name == "g1") img.generators.push_back(x3);
    else if (name == "g2")
      img.generators.push_back(sys_.reduce(CoeffElem::A(-1) * (sys_.mul(x2, x1) - CoeffElem::A(-1) * x3)));
    else throw RewriteError("phi: unexpected generator '" + name + "'");
  }
  return img;
}

SkeinElem Torus::phi(const SkeinElem& x, const RewriteSystem& source) const {
  return apply_hom(x, phi_images(source), sys_);
}

}  // namespace skein
