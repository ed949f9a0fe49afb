#include "skein/pi.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace skein {

using Rational = boost::multiprecision::cpp_rational;

Poly3::Poly3(long c) : Poly3(Integer(c)) {}

Poly3::Poly3(const Integer& c) {
  if (c != 0) terms_.emplace(Exp{0, 0, 0}, c);
}

Poly3 Poly3::monomial(Exp e, Integer c) {
  Poly3 p;
  p.add(e, c);
  return p;
}

void Poly3::add(const Exp& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly3 Poly3::operator-() const {
  Poly3 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly3 Poly3::pow(unsigned n) const {
  Poly3 r(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Poly3 Poly3::divide_exact(const Poly3& divisor) const {
  if (divisor.is_zero()) throw CoeffError("division by the zero polynomial");
  const auto& [dlead, dc] = *divisor.terms_.rbegin();
  Poly3 rem = *this;
  Poly3 quot;
  while (!rem.is_zero()) {
    const auto& [rlead, rc] = *rem.terms_.rbegin();
    Exp q{rlead[0] - dlead[0], rlead[1] - dlead[1], rlead[2] - dlead[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0 || rc % dc != 0)
      throw CoeffError("polynomial division leaves a remainder");
    Poly3 step = monomial(q, rc / dc);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

std::string Poly3::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    const bool constant = e == Exp{0, 0, 0};
    if (mag != 1 || constant) os << mag;
    const char* names = "xyz";
    bool need_star = mag != 1;
    for (int i = 0; i < 3; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

Poly3 pi_with(const CoeffElem& c, const Poly3& d1_image) {
  Poly3 out;
  for (const auto& [e, k] : c.terms()) {
    if (e.d0 < 0 || e.d1 < 0) throw CoeffError("negative boundary exponent");
    out += Poly3(k * boost::multiprecision::pow(Integer(2), static_cast<unsigned>(e.d0))) *
           d1_image.pow(static_cast<unsigned>(e.d1));
  }
  return out;
}

Poly3 generator_image(const std::string& name) {
  const Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
  if (name == "a") return x;
  if (name == "b") return y * z - x;
  if (name == "g1" || name == "g") return y * y - 2;
  if (name == "g2") return z * z - 2;
  throw RewriteError("no commutative image for generator '" + name + "'");
}

Poly3 pi_with(const SkeinElem& x, const RewriteSystem& sys, const Poly3& d1_image) {
  std::vector<Poly3> images;
  for (const auto& n : sys.alphabet().names) images.push_back(generator_image(n));
  Poly3 out;
  for (const auto& [w, c] : x.terms()) {
    Poly3 term = pi_with(c, d1_image);
    for (char s : w) term = term * images[static_cast<unsigned char>(s)];
    out += term;
  }
  return out;
}

}  // namespace

Poly3 derive_pi_boundary() {
  const auto three = make_presentation(PresentationId::RY022_3GEN);
  SkeinElem rel;
  for (const auto& [label, r] : three.relations())
    if (label == "tor4") rel = r;
  // The relation is affine in d1: r = r0 + d1 r1.
  const Poly3 r0 = pi_with(rel, three, Poly3(0));
  const Poly3 r1 = pi_with(rel, three, Poly3(1)) - r0;
  if (pi_with(rel, three, Poly3(2)) != r0 + r1 + r1) throw CoeffError("tor4 is not affine in d1");
  return (-r0).divide_exact(r1);
}

Poly3 pi_scalar(const CoeffElem& c) {
  static const Poly3 d1 = Poly3::x() * Poly3::y() * Poly3::z() - Poly3::x().pow(2) - Poly3::y().pow(2) -
                          Poly3::z().pow(2) + 2;
  return pi_with(c, d1);
}

Poly3 pi_commutative(const SkeinElem& x, const RewriteSystem& sys) {
  static const Poly3 d1 = Poly3::x() * Poly3::y() * Poly3::z() - Poly3::x().pow(2) - Poly3::y().pow(2) -
                          Poly3::z().pow(2) + 2;
  return pi_with(x, sys, d1);
}

std::size_t rational_rank(const std::vector<Poly3>& polys) {
  std::map<Poly3::Exp, std::size_t> column;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) column.try_emplace(e, column.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(column.size());
    for (const auto& [e, c] : p.terms()) row[column[e]] = Rational(c);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < column.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Poly3> pi_basis_images(unsigned max_exp) {
  const Poly3 a = generator_image("a"), b = generator_image("b");
  const Poly3 g1 = generator_image("g1"), g2 = generator_image("g2");
  std::vector<Poly3> out;
  for (unsigned e1 = 0; e1 <= max_exp; ++e1)
    for (unsigned e2 = 0; e2 <= max_exp; ++e2)
      for (unsigned e3 = 0; e3 <= max_exp; ++e3)
        for (unsigned e4 = 0; e4 <= max_exp; ++e4)
          if (e3 * e4 == 0) out.push_back(a.pow(e1) * b.pow(e2) * g1.pow(e3) * g2.pow(e4));
  return out;
}

}  // namespace skein
