#include "skein/curves.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "skein/basis_table.hpp"

namespace skein {

CurveKind kind_of(IntPair c) {
  if (c.is_zero()) throw std::invalid_argument("(0,0) is not a curve");
  return (c.n - c.k) % 2 == 0 ? CurveKind::Knot : CurveKind::Arc;
}

CurveIndex CurveIndex::classify(int n, int k) {
  const IntPair c{n, k};
  const CurveKind kind = kind_of(c);
  return {c.canonical(), kind};
}

bool LambdaMatrix::in_lambda() const { return a * d - b * c == 1 && a % 2 != 0 && c % 2 == 0; }

IntPair lambda_linear(const LambdaMatrix& m, IntPair c) {
  if (!m.in_lambda()) throw std::invalid_argument("matrix is not in Lambda");
  const int h = m.c / 2;
  return {h * (c.n + c.k) + m.d * c.n, c.n * (m.a - h + 2 * m.b - m.d) + c.k * (m.a - h)};
}

IntPair lambda_act(const LambdaMatrix& m, IntPair c) { return lambda_linear(m, c).canonical(); }

int intersection_number(IntPair c1, IntPair c2) {
  if (!c1.primitive() || !c2.primitive()) throw std::invalid_argument("intersection number needs primitive classes");
  return std::abs(det(c1, c2));
}

// ------------------------------------------------------------ CurveExpansion

CoeffElem CurveExpansion::coeff(IntPair c) const {
  auto it = terms_.find(c.canonical());
  return it == terms_.end() ? CoeffElem{} : it->second;
}

void CurveExpansion::add(IntPair c, const CoeffElem& k) {
  if (k.is_zero()) return;
  if (c.is_zero()) {
    scalar_ += basis_ == Variant::Threaded ? CoeffElem(2) * k : k;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(c.canonical(), k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CurveExpansion& CurveExpansion::operator+=(const CurveExpansion& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("mixing curve bases");
  for (const auto& [c, k] : o.terms_) add(c, k);
  scalar_ += o.scalar_;
  return *this;
}

CurveExpansion& CurveExpansion::operator-=(const CurveExpansion& o) { return *this += CoeffElem(-1) * o; }

CurveExpansion operator*(const CoeffElem& k, const CurveExpansion& x) {
  CurveExpansion r(x.basis_);
  for (const auto& [c, v] : x.terms_) r.add(c, k * v);
  r.scalar_ = k * x.scalar_;
  return r;
}

CurveExpansion CurveExpansion::map_curves(const std::function<IntPair(IntPair)>& f) const {
  CurveExpansion r(basis_);
  for (const auto& [c, k] : terms_) r.add(f(c), k);
  r.scalar_ = scalar_;
  return r;
}

std::string CurveExpansion::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* tag = basis_ == Variant::Threaded ? "_T" : (basis_ == Variant::Geometric ? "_g" : "");
  for (const auto& [c, k] : terms_) {
    os << (first ? "" : " + ") << "(" << k.to_string() << ")" << c.to_string() << tag;
    first = false;
  }
  if (!scalar_.is_zero()) os << (first ? "" : " + ") << "(" << scalar_.to_string() << ")";
  return os.str();
}

namespace {

// Coefficients of T_d in the monic basis g_j(x) = x^(j mod 2) (x^2 - 2)^(j/2).
std::vector<Integer> chebyshev_in_arc_basis(unsigned d) {
  std::vector<Integer> rest = chebyshev_coefficients(d);
  std::vector<std::vector<Integer>> g(d + 1);
  g[0] = {1};
  if (d >= 1) g[1] = {0, 1};
  for (unsigned j = 2; j <= d; ++j) {
    // g_j = (x^2 - 2) g_{j-2}
    g[j].assign(j + 1, 0);
    for (std::size_t i = 0; i < g[j - 2].size(); ++i) {
      g[j][i + 2] += g[j - 2][i];
      g[j][i] -= 2 * g[j - 2][i];
    }
  }
  std::vector<Integer> out(d + 1, 0);
  for (unsigned j = d + 1; j-- > 0;) {
    if (rest.size() <= j || rest[j] == 0) continue;
    out[j] = rest[j];
    for (std::size_t i = 0; i < g[j].size(); ++i) rest[i] -= out[j] * g[j][i];
  }
  return out;
}

CurveExpansion rebase(const CurveExpansion& threaded, Variant target) {
  if (threaded.basis() != Variant::Threaded) throw std::invalid_argument("expected a threaded expansion");
  CurveExpansion out(target);
  out.add_scalar(threaded.scalar());
  for (const auto& [c, k] : threaded.terms()) {
    const auto d = static_cast<unsigned>(c.depth());
    const IntPair prim = c.primitive_part();
    const auto coeffs = (target == Variant::Geometric && is_arc(prim)) ? chebyshev_in_arc_basis(d)
                                                                        : chebyshev_coefficients(d);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      if (j == 0) out.add_scalar(CoeffElem(coeffs[j]) * k);
      else out.add({prim.n * static_cast<int>(j), prim.k * static_cast<int>(j)}, CoeffElem(coeffs[j]) * k);
    }
  }
  return out;
}

}  // namespace

CurveExpansion to_power_basis(const CurveExpansion& threaded) { return rebase(threaded, Variant::Power); }

CurveExpansion to_geometric_basis(const CurveExpansion& threaded) { return rebase(threaded, Variant::Geometric); }

CurveExpansion det1_product(IntPair c1, IntPair c2) {
  const int s = det(c1, c2);
  if (s != 1 && s != -1) throw std::invalid_argument("det1_product needs determinant +-1");
  CurveExpansion out;
  out.add(c1 + c2, CoeffElem::A(s));
  out.add(c1 - c2, CoeffElem::A(-s));
  if (is_arc(c1) && is_arc(c2)) out.add_scalar(CoeffElem::d0() + CoeffElem::d1());
  return out;
}

// -------------------------------------------------------------------- Curves

struct Curves::Cache {
  std::recursive_mutex mu;
  std::map<IntPair, SkeinElem> primitive;
  std::map<IntPair, SkeinElem> threaded;
};

Curves::Curves()
    : sys_(make_presentation(PresentationId::RY022_3GEN).specialized(Specialization::unit_punctures(), "@v=1")),
      cache_(std::make_unique<Cache>()) {
  table_ = std::make_unique<BasisTable>(sys_, [this](IntPair c) { return realize(c, Variant::Threaded); });
}

Curves::~Curves() = default;

SkeinElem Curves::realize_primitive(IntPair c) const {
  c = c.canonical();
  if (!c.primitive()) throw std::invalid_argument("realize_primitive needs gcd 1");
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->primitive.find(c); it != cache_->primitive.end()) return it->second;
  const SkeinElem boundary(CoeffElem::d0() + CoeffElem::d1());
  SkeinElem r;
  if (c == IntPair{0, 1}) {
    r = sys_.generator("a");
  } else if (c == IntPair{1, 0}) {
    r = sys_.generator("b");
  } else if (c == IntPair{1, 1}) {
    r = sys_.generator("g");
  } else if (c == IntPair{1, -1}) {
    const auto a = sys_.generator("a"), b = sys_.generator("b"), g = sys_.generator("g");
    r = CoeffElem::A(-1) * (sys_.mul(a, b) - CoeffElem::A(-1) * g - boundary);
  } else {
    // left * right = A^s target + A^-s (left - right) + [both arcs] (d0 + d1)
    const Split sp = stern_brocot_split(c);
    const CoeffElem back = CoeffElem::A(-sp.sign);
    SkeinElem rest = back * realize_primitive(sp.left - sp.right);
    if (is_arc(sp.left) && is_arc(sp.right)) rest += boundary;
    r = back * (sys_.mul(realize_primitive(sp.left), realize_primitive(sp.right)) - rest);
  }
  cache_->primitive.emplace(c, r);
  return r;
}

SkeinElem Curves::realize(IntPair c, Variant v) const {
  if (c.is_zero()) throw std::invalid_argument("(0,0) is not a curve");
  c = c.canonical();
  const auto d = static_cast<unsigned>(c.depth());
  const IntPair prim = c.primitive_part();
  switch (v) {
    case Variant::Power:
      return sys_.power(realize_primitive(prim), d);
    case Variant::Geometric: {
      // Parallel copies of a knot. For an arc, the boundary T_2(arc) of its
      // neighbourhood is a knot; a class with odd depth keeps one arc core.
      if (!is_arc(prim)) return realize(c, Variant::Power);
      const SkeinElem arc = realize_primitive(prim);
      SkeinElem r = sys_.power(sys_.chebyshev(2, arc), d / 2);
      return d % 2 ? sys_.mul(arc, r) : r;
    }
    case Variant::Threaded: {
      std::lock_guard lock(cache_->mu);
      if (auto it = cache_->threaded.find(c); it != cache_->threaded.end()) return it->second;
      SkeinElem r = sys_.chebyshev(d, realize_primitive(prim));
      cache_->threaded.emplace(c, r);
      return r;
    }
  }
  throw std::invalid_argument("unknown variant");
}

SkeinElem Curves::realize(const CurveExpansion& x) const {
  SkeinElem out(x.scalar());
  for (const auto& [c, k] : x.terms()) out += k * realize(c, x.basis());
  return out;
}

CurveExpansion Curves::expand(const SkeinElem& x) const {
  const auto res = table_->expand(sys_.reduce(x));
  CurveExpansion out;
  for (const auto& [c, k] : res.curves) out.add(c, k);
  out.add_scalar(res.scalar);
  return out;
}

CurveExpansion Curves::multiply(const CurveExpansion& x, const CurveExpansion& y) const {
  return expand(sys_.mul(realize(x), realize(y)));
}

CurveExpansion Curves::product(IntPair c1, IntPair c2) const {
  return expand(sys_.mul(realize(c1), realize(c2)));
}

}  // namespace skein
