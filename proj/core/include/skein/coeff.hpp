#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using Integer = boost::multiprecision::cpp_int;

class CoeffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in A^(1/2) with integer coefficients. Exponents are
/// stored doubled: key e stands for A^(e/2).
class HalfLaurent {
 public:
  using Term = std::pair<int, Integer>;

  HalfLaurent() = default;
  HalfLaurent(long c);  // NOLINT: constants convert implicitly
  static HalfLaurent monomial(int a2, Integer c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int a2) const;

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  /// A -> A^k on the underlying variable (k may be negative).
  HalfLaurent substitute_power(int k) const;
  /// Every coefficient is >= 0.
  bool nonnegative() const;
  /// Value at A^(1/2) = 1.
  Integer at_one() const;
  std::complex<double> evaluate(std::complex<double> half) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
  friend class CoeffElem;
};

/// Exponent vector of a monomial A^(a2/2) v1^ev1 v2^ev2 d0^ed0 d1^ed1.
struct Exponent {
  int a2 = 0;
  int v1 = 0;
  int v2 = 0;
  int d0 = 0;
  int d1 = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  Exponent operator+(const Exponent& o) const {
    return {a2 + o.a2, v1 + o.v1, v2 + o.v2, d0 + o.d0, d1 + o.d1};
  }
  std::array<int, 5> as_array() const { return {a2, v1, v2, d0, d1}; }
};

/// Element of Z[A^(+-1/2), v1^(+-1), v2^(+-1), d0, d1]. Terms are kept sorted
/// lexicographically by (a2, v1, v2, d0, d1) with no zero coefficients.
class CoeffElem {
 public:
  struct Term {
    std::uint64_t key;
    Integer c;
  };

  CoeffElem() = default;
  CoeffElem(long c);  // NOLINT
  CoeffElem(const Integer& c);  // NOLINT
  CoeffElem(const HalfLaurent& h);  // NOLINT
  static CoeffElem monomial(const Exponent& e, Integer c = 1);

  // Named generators of the scalar ring.
  static CoeffElem A(int power = 1) { return monomial({2 * power, 0, 0, 0, 0}); }
  static CoeffElem half_A(int half_power) { return monomial({half_power, 0, 0, 0, 0}); }
  static CoeffElem v1(int power = 1) { return monomial({0, power, 0, 0, 0}); }
  static CoeffElem v2(int power = 1) { return monomial({0, 0, power, 0, 0}); }
  static CoeffElem d0(int power = 1) { return monomial({0, 0, 0, power, 0}); }
  static CoeffElem d1(int power = 1) { return monomial({0, 0, 0, 0, power}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<std::pair<Exponent, Integer>> terms() const;
  Integer coeff(const Exponent& e) const;
  /// Constant term if the element is a constant; nullopt otherwise.
  std::optional<Integer> as_constant() const;

  CoeffElem operator-() const;
  CoeffElem& operator+=(const CoeffElem& o);
  CoeffElem& operator-=(const CoeffElem& o);
  CoeffElem& operator*=(const CoeffElem& o);
  friend CoeffElem operator+(CoeffElem a, const CoeffElem& b) { return a += b; }
  friend CoeffElem operator-(CoeffElem a, const CoeffElem& b) { return a -= b; }
  friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b);
  friend bool operator==(const CoeffElem& a, const CoeffElem& b);
  CoeffElem pow(unsigned n) const;

  /// A unit is +-1 times a monomial with d0 = d1 = 0.
  bool is_unit() const;
  CoeffElem unit_inverse() const;
  /// Exact division by a unit; throws unless divisor.is_unit().
  CoeffElem divide_by_unit(const CoeffElem& divisor) const;
  /// Exact division with remainder check; throws if not divisible.
  CoeffElem divide_exact(const CoeffElem& divisor) const;

  bool has_puncture_variables() const;
  /// Coefficient as a HalfLaurent if only A appears; throws otherwise.
  HalfLaurent to_half_laurent() const;
  /// Collect by boundary monomial d0^i d1^j; requires v-exponents zero.
  std::vector<std::pair<std::pair<int, int>, HalfLaurent>> by_boundary_monomial() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void normalize();
  friend CoeffElem mul_terms(const std::vector<Term>&, const std::vector<Term>&);
};

std::uint64_t pack_exponent(const Exponent& e);
Exponent unpack_exponent(std::uint64_t key);

/// Substitution data. Unset entries are left symbolic. A value of a unit
/// variable must itself be a unit (monomial), so negative powers remain
/// representable.
struct Specialization {
  std::optional<std::complex<double>> half_A;
  std::optional<CoeffElem> v1;
  std::optional<CoeffElem> v2;
  std::optional<CoeffElem> d0;
  std::optional<CoeffElem> d1;
  std::optional<std::complex<double>> v1_num;
  std::optional<std::complex<double>> v2_num;
  std::optional<std::complex<double>> d0_num;
  std::optional<std::complex<double>> d1_num;
  /// A^(1/2) -> A^(scale/2); 1 keeps A, 2 sends A to A^2, -1 to A^-1.
  int a_scale = 1;

  /// The v1 = v2 = 1 specialization.
  static Specialization unit_punctures();
  void validate() const;
  bool fully_numeric() const;
};

/// Exact partial substitution (uses the CoeffElem-valued entries and a_scale).
CoeffElem specialize(const CoeffElem& x, const Specialization& s);
/// Numeric evaluation; requires all five numeric values assigned.
std::complex<double> evaluate(const CoeffElem& x, const Specialization& s);

/// Balanced quantum integer [n]_A = A^(1-n) + A^(3-n) + ... + A^(n-1).
HalfLaurent quantum_int(int n);
/// [n]_q with q = A^k, extended to all integers by [0] = 0, [-n] = -[n].
HalfLaurent quantum_int_in(int n, int k);

/// Generic first-kind Chebyshev recurrence T_0 = 2, T_1 = x,
/// T_{k+1} = x T_k - T_{k-1}. `mul` supplies multiplication, `scalar` lifts
/// an integer constant into the carrier. `normalized` gives T_0 = 1.
template <typename T, typename Mul, typename Scalar>
T chebyshev(unsigned k, const T& x, Mul&& mul, Scalar&& scalar, bool normalized = false) {
  if (k == 0) return scalar(normalized ? 1 : 2);
  T prev = scalar(2);
  T cur = x;
  for (unsigned i = 1; i < k; ++i) {
    T next = mul(x, cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline CoeffElem chebyshev(unsigned k, const CoeffElem& x, bool normalized = false) {
  return chebyshev(
      k, x, [](const CoeffElem& a, const CoeffElem& b) { return a * b; },
      [](long c) { return CoeffElem(c); }, normalized);
}

/// Integer coefficients of T_k as a polynomial in x (index = power).
std::vector<Integer> chebyshev_coefficients(unsigned k, bool normalized = false);

}  // namespace skein
