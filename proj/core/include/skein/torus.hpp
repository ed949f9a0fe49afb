#pragma once

#include <map>
#include <memory>
#include <string>

#include "skein/freealg.hpp"
#include "skein/lattice.hpp"

namespace skein {

/// Torus curve class (p, q); canonical sign, thread depth gcd(|p|, |q|).
struct TorusCurve {
  int p = 0;
  int q = 0;

  static TorusCurve make(int p, int q);  // throws on (0, 0)
  IntPair pair() const { return {p, q}; }
  int depth() const { return pair().depth(); }
  friend auto operator<=>(const TorusCurve&, const TorusCurve&) = default;
};

/// Linear combination of threaded curves (p, q)_T plus a scalar multiple of
/// the empty link. (0, 0)_T = 2 is folded into the scalar.
class TorusExpansion {
 public:
  void add(IntPair c, const HalfLaurent& coeff);
  void add_scalar(const HalfLaurent& coeff);
  const std::map<IntPair, HalfLaurent>& terms() const { return terms_; }
  const HalfLaurent& scalar() const { return scalar_; }
  HalfLaurent coeff(IntPair c) const;
  bool is_zero() const { return terms_.empty() && scalar_.is_zero(); }
  friend bool operator==(const TorusExpansion&, const TorusExpansion&) = default;
  std::string to_string() const;

 private:
  std::map<IntPair, HalfLaurent> terms_;
  HalfLaurent scalar_;
};

/// (p,q)_T * (r,s)_T = A^(ps-qr) (p+r, q+s)_T + A^-(ps-qr) (p-r, q-s)_T.
TorusExpansion fg_product(TorusCurve u, TorusCurve w);

class BasisTable;

/// The closed-torus algebra with realization and expansion caches.
class Torus {
 public:
  Torus();
  ~Torus();
  Torus(const Torus&) = delete;
  Torus& operator=(const Torus&) = delete;

  const RewriteSystem& system() const { return sys_; }

  /// Normal form of the threaded class (p, q)_T.
  SkeinElem realize(TorusCurve c) const;
  /// Normal form of the primitive class (p, q).
  SkeinElem realize_primitive(IntPair c) const;
  TorusExpansion expand(const SkeinElem& x) const;

  /// phi from either Roger-Yang presentation (specialized or not):
  /// v_i -> 1, d0 -> A + A^-1, d1 -> -A - A^-1, b -> x1, a -> x2, g/g1 -> x3,
  /// g2 -> A^-1 (x2 x1 - A^-1 x3).
  SkeinElem phi(const SkeinElem& x, const RewriteSystem& source) const;
  HomImages phi_images(const RewriteSystem& source) const;

 private:
  RewriteSystem sys_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
  std::unique_ptr<BasisTable> table_;
};

}  // namespace skein
