#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

/// Integer pair (n, k) labelling a curve class. Classes are unoriented, so
/// (n, k) and (-n, -k) agree; canonical() picks n > 0, or n = 0 and k > 0.
struct IntPair {
  int n = 0;
  int k = 0;

  friend auto operator<=>(const IntPair&, const IntPair&) = default;
  IntPair operator+(const IntPair& o) const { return {n + o.n, k + o.k}; }
  IntPair operator-(const IntPair& o) const { return {n - o.n, k - o.k}; }
  IntPair operator-() const { return {-n, -k}; }
  bool is_zero() const { return n == 0 && k == 0; }
  int depth() const { return std::gcd(std::abs(n), std::abs(k)); }
  bool primitive() const { return depth() == 1; }
  IntPair canonical() const { return (n > 0 || (n == 0 && k > 0)) ? *this : -*this; }
  IntPair primitive_part() const {
    const int d = depth();
    return d ? IntPair{n / d, k / d} : *this;
  }
  std::string to_string() const { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
};

inline int det(const IntPair& a, const IntPair& b) { return a.n * b.k - a.k * b.n; }

/// left * right has determinant `sign` and left + right = target, so the
/// product-to-sum rule expresses target through three smaller classes.
struct Split {
  IntPair left;
  IntPair right;
  int sign;
};

/// Stern-Brocot split of a canonical primitive class outside {(1,0),(0,1)}:
/// pick 0 <= w < N with N z - K w = 1 and set (u, v) = (N - w, K - z); the
/// lower half plane is handled by reflecting k.
inline Split stern_brocot_split(IntPair c) {
  c = c.canonical();
  if (!c.primitive()) throw std::invalid_argument("split needs a primitive class");
  const bool lower = c.k < 0;
  const int N = c.n;
  const int K = lower ? -c.k : c.k;
  if (N <= 0 || K <= 0) throw std::invalid_argument("axis classes have no split");
  int w = 0;
  while ((1 + K * w) % N != 0) ++w;
  const int z = (1 + K * w) / N;
  IntPair left{N - w, K - z};
  IntPair right{w, z};
  if (lower) {
    left.k = -left.k;
    right.k = -right.k;
  }
  return {left, right, det(left, right)};
}

}  // namespace skein
