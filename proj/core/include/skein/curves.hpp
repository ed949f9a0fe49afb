#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "skein/freealg.hpp"
#include "skein/lattice.hpp"

namespace skein {

enum class CurveKind { Arc, Knot };
enum class Variant { Geometric, Power, Threaded };

/// (n, k) is a knot iff n = k mod 2; arcs join the two interior punctures.
CurveKind kind_of(IntPair c);
inline bool is_arc(IntPair c) { return kind_of(c) == CurveKind::Arc; }

struct CurveIndex {
  IntPair c;
  CurveKind kind;
  /// Canonical sign and kind; throws std::invalid_argument on (0, 0).
  static CurveIndex classify(int n, int k);
};

/// [[a, b], [c, d]] in SL2(Z) with a odd and c even.
struct LambdaMatrix {
  int a = 1, b = 0, c = 0, d = 1;

  bool in_lambda() const;
  LambdaMatrix operator*(const LambdaMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;
};

/// (n, k) -> (c(n+k)/2 + dn, n(2a-c+4b-2d)/2 + k(2a-c)/2), canonicalized.
/// Throws std::invalid_argument if M is not in Lambda.
IntPair lambda_act(const LambdaMatrix& m, IntPair c);
/// The signed image before canonicalization (the map is linear).
IntPair lambda_linear(const LambdaMatrix& m, IntPair c);

/// |n1 k2 - n2 k1| for primitive classes.
int intersection_number(IntPair c1, IntPair c2);

/// Curve classes with coefficients in Z[A^(+-1/2), d0, d1] plus a scalar
/// part. `basis` says whether keys mean threaded classes T_d(prim),
/// geometric classes or powers prim^d.
class CurveExpansion {
 public:
  explicit CurveExpansion(Variant basis = Variant::Threaded) : basis_(basis) {}

  Variant basis() const { return basis_; }
  const std::map<IntPair, CoeffElem>& terms() const { return terms_; }
  const CoeffElem& scalar() const { return scalar_; }
  CoeffElem coeff(IntPair c) const;
  bool is_zero() const { return terms_.empty() && scalar_.is_zero(); }

  /// (0, 0) is folded into the scalar (as 2 for threaded, 1 otherwise).
  void add(IntPair c, const CoeffElem& k);
  void add_scalar(const CoeffElem& k) { scalar_ += k; }
  CurveExpansion& operator+=(const CurveExpansion& o);
  CurveExpansion& operator-=(const CurveExpansion& o);
  friend CurveExpansion operator+(CurveExpansion a, const CurveExpansion& b) { return a += b; }
  friend CurveExpansion operator-(CurveExpansion a, const CurveExpansion& b) { return a -= b; }
  friend CurveExpansion operator*(const CoeffElem& k, const CurveExpansion& x);
  friend bool operator==(const CurveExpansion&, const CurveExpansion&) = default;

  /// Relabels every class through f (used for Lambda transport).
  CurveExpansion map_curves(const std::function<IntPair(IntPair)>& f) const;
  std::string to_string() const;

 private:
  Variant basis_;
  std::map<IntPair, CoeffElem> terms_;
  CoeffElem scalar_;
};

/// Threaded expansion rewritten over powers prim^j via T_d = sum c_j x^j.
CurveExpansion to_power_basis(const CurveExpansion& threaded);
/// Threaded expansion rewritten over geometric classes: powers of knots, and
/// for an arc a, a^(j mod 2) T_2(a)^(j/2).
CurveExpansion to_geometric_basis(const CurveExpansion& threaded);

/// (n1,k1) * (n2,k2) for |det| = 1 at v1 = v2 = 1:
/// A^det (sum) + A^-det (difference) + [both arcs] (d0 + d1).
CurveExpansion det1_product(IntPair c1, IntPair c2);

class BasisTable;

/// The v1 = v2 = 1 specialization of the three-generator algebra with curve
/// realizations and bracelets-basis expansion. Caches are internally locked.
class Curves {
 public:
  Curves();
  ~Curves();
  Curves(const Curves&) = delete;
  Curves& operator=(const Curves&) = delete;

  const RewriteSystem& system() const { return sys_; }

  SkeinElem realize_primitive(IntPair c) const;
  SkeinElem realize(IntPair c, Variant v = Variant::Threaded) const;
  SkeinElem realize(const CurveExpansion& x) const;

  /// Threaded expansion of an element; throws RewriteError if some leading
  /// word is not reached within the table bound.
  CurveExpansion expand(const SkeinElem& x) const;

  CurveExpansion multiply(const CurveExpansion& x, const CurveExpansion& y) const;
  /// (n1,k1)_T * (n2,k2)_T in the threaded basis.
  CurveExpansion product(IntPair c1, IntPair c2) const;

 private:
  RewriteSystem sys_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
  std::unique_ptr<BasisTable> table_;
};

}  // namespace skein
