#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "skein/freealg.hpp"

namespace skein {

/// Polynomial in commuting x, y, z with integer coefficients.
class Poly3 {
 public:
  using Exp = std::array<int, 3>;

  Poly3() = default;
  Poly3(long c);  // NOLINT
  Poly3(const Integer& c);  // NOLINT
  static Poly3 monomial(Exp e, Integer c = 1);
  static Poly3 x() { return monomial({1, 0, 0}); }
  static Poly3 y() { return monomial({0, 1, 0}); }
  static Poly3 z() { return monomial({0, 0, 1}); }

  const std::map<Exp, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly3 operator-() const;
  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend bool operator==(const Poly3&, const Poly3&) = default;
  Poly3 pow(unsigned n) const;

  /// Quotient by multivariate division (lex order); throws on a nonzero remainder.
  Poly3 divide_exact(const Poly3& divisor) const;
  std::string to_string() const;

 private:
  std::map<Exp, Integer> terms_;
  void add(const Exp& e, const Integer& c);
};

/// pi(d1) as forced by tor4 under A^(1/2) = 1, v_i = 1, d0 = 2 and the
/// generator images; recomputed from the relation each call.
Poly3 derive_pi_boundary();

/// The commutative image: A^(1/2), v_i -> 1, d0 -> 2, d1 -> xyz - x^2 - y^2 - z^2 + 2,
/// a -> x, b -> yz - x, g1 (or g) -> y^2 - 2, g2 -> z^2 - 2.
Poly3 pi_scalar(const CoeffElem& c);
Poly3 pi_commutative(const SkeinElem& x, const RewriteSystem& sys);

/// Rank over Q of a family of polynomials (exact).
std::size_t rational_rank(const std::vector<Poly3>& polys);

/// pi-images of a^e1 b^e2 g1^e3 g2^e4 with every e_i <= max_exp and e3 e4 = 0.
std::vector<Poly3> pi_basis_images(unsigned max_exp);

}  // namespace skein
