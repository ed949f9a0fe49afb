#include "skein/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

// ---------------------------------------------------------------- HalfLaurent

namespace {

template <typename Vec>
void merge_sorted_terms(Vec& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms = std::move(out);
}

std::string power_string(const char* name, int e, bool half) {
  std::ostringstream os;
  os << name;
  if (half) {
    if (e % 2 == 0) {
      if (e / 2 != 1) os << "^" << e / 2;
    } else {
      os << "^(" << e << "/2)";
    }
  } else if (e != 1) {
    os << "^" << e;
  }
  return os.str();
}

}  // namespace

HalfLaurent::HalfLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

HalfLaurent HalfLaurent::monomial(int a2, Integer c) {
  HalfLaurent h;
  if (c != 0) h.terms_.emplace_back(a2, std::move(c));
  return h;
}

Integer HalfLaurent::coeff(int a2) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a2,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == a2) ? it->second : Integer(0);
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  merge_sorted_terms(terms_);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) { return *this += -o; }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.emplace_back(x.first + y.first, x.second * y.second);
  merge_sorted_terms(r.terms_);
  return r;
}

HalfLaurent HalfLaurent::substitute_power(int k) const {
  HalfLaurent r;
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * k, t.second);
  merge_sorted_terms(r.terms_);
  return r;
}

bool HalfLaurent::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

Integer HalfLaurent::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::complex<double> HalfLaurent::evaluate(std::complex<double> half) const {
  std::complex<double> s = 0;
  for (const auto& t : terms_) s += t.second.convert_to<double>() * std::pow(half, t.first);
  return s;
}

std::string HalfLaurent::to_string() const { return CoeffElem(*this).to_string(); }

// ------------------------------------------------------------------ packing

namespace {

constexpr int kA2Bits = 24;
constexpr int kVBits = 10;
constexpr int kDBits = 10;
constexpr std::int64_t kA2Bias = std::int64_t{1} << (kA2Bits - 1);
constexpr std::int64_t kVBias = std::int64_t{1} << (kVBits - 1);
constexpr int kD1Shift = 0;
constexpr int kD0Shift = kDBits;
constexpr int kV2Shift = 2 * kDBits;
constexpr int kV1Shift = 2 * kDBits + kVBits;
constexpr int kA2Shift = 2 * kDBits + 2 * kVBits;

constexpr std::uint64_t kZeroKey = (static_cast<std::uint64_t>(kA2Bias) << kA2Shift) |
                                   (static_cast<std::uint64_t>(kVBias) << kV1Shift) |
                                   (static_cast<std::uint64_t>(kVBias) << kV2Shift);

bool in_range(const Exponent& e) {
  return e.a2 >= -kA2Bias && e.a2 < kA2Bias && e.v1 >= -kVBias && e.v1 < kVBias &&
         e.v2 >= -kVBias && e.v2 < kVBias && e.d0 >= 0 && e.d0 < (1 << kDBits) && e.d1 >= 0 &&
         e.d1 < (1 << kDBits);
}

}  // namespace

std::uint64_t pack_exponent(const Exponent& e) {
  if (!in_range(e)) throw CoeffError("exponent out of representable range");
  return (static_cast<std::uint64_t>(e.a2 + kA2Bias) << kA2Shift) |
         (static_cast<std::uint64_t>(e.v1 + kVBias) << kV1Shift) |
         (static_cast<std::uint64_t>(e.v2 + kVBias) << kV2Shift) |
         (static_cast<std::uint64_t>(e.d0) << kD0Shift) | (static_cast<std::uint64_t>(e.d1) << kD1Shift);
}

Exponent unpack_exponent(std::uint64_t key) {
  auto field = [key](int shift, int bits) {
    return static_cast<std::int64_t>((key >> shift) & ((std::uint64_t{1} << bits) - 1));
  };
  return Exponent{static_cast<int>(field(kA2Shift, kA2Bits) - kA2Bias),
                  static_cast<int>(field(kV1Shift, kVBits) - kVBias),
                  static_cast<int>(field(kV2Shift, kVBits) - kVBias),
                  static_cast<int>(field(kD0Shift, kDBits)), static_cast<int>(field(kD1Shift, kDBits))};
}

// ---------------------------------------------------------------- CoeffElem

CoeffElem::CoeffElem(long c) {
  if (c != 0) terms_.push_back({kZeroKey, Integer(c)});
}

CoeffElem::CoeffElem(const Integer& c) {
  if (c != 0) terms_.push_back({kZeroKey, c});
}

CoeffElem::CoeffElem(const HalfLaurent& h) {
  for (const auto& [e, c] : h.terms_) terms_.push_back({pack_exponent({e, 0, 0, 0, 0}), c});
}

CoeffElem CoeffElem::monomial(const Exponent& e, Integer c) {
  CoeffElem r;
  if (c != 0) r.terms_.push_back({pack_exponent(e), std::move(c)});
  return r;
}

void CoeffElem::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

std::vector<std::pair<Exponent, Integer>> CoeffElem::terms() const {
  std::vector<std::pair<Exponent, Integer>> r;
  r.reserve(terms_.size());
  for (const auto& t : terms_) r.emplace_back(unpack_exponent(t.key), t.c);
  return r;
}

Integer CoeffElem::coeff(const Exponent& e) const {
  const auto key = pack_exponent(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  return (it != terms_.end() && it->key == key) ? it->c : Integer(0);
}

std::optional<Integer> CoeffElem::as_constant() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_[0].key == kZeroKey) return terms_[0].c;
  return std::nullopt;
}

CoeffElem CoeffElem::operator-() const {
  CoeffElem r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->key < j->key)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->key < i->key) {
      out.push_back(*j++);
    } else {
      Integer s = i->c + j->c;
      if (s != 0) out.push_back({i->key, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& o) { return *this += -o; }

CoeffElem mul_terms(const std::vector<CoeffElem::Term>& a, const std::vector<CoeffElem::Term>& b) {
  CoeffElem r;
  if (a.empty() || b.empty()) return r;
  // Range check through the extreme exponents so packed keys can be added.
  auto extremes = [](const std::vector<CoeffElem::Term>& v) {
    Exponent lo{1 << 30, 1 << 30, 1 << 30, 1 << 30, 1 << 30};
    Exponent hi{-(1 << 30), -(1 << 30), -(1 << 30), -(1 << 30), -(1 << 30)};
    for (const auto& t : v) {
      const Exponent e = unpack_exponent(t.key);
      lo = {std::min(lo.a2, e.a2), std::min(lo.v1, e.v1), std::min(lo.v2, e.v2), std::min(lo.d0, e.d0),
            std::min(lo.d1, e.d1)};
      hi = {std::max(hi.a2, e.a2), std::max(hi.v1, e.v1), std::max(hi.v2, e.v2), std::max(hi.d0, e.d0),
            std::max(hi.d1, e.d1)};
    }
    return std::pair{lo, hi};
  };
  const auto [alo, ahi] = extremes(a);
  const auto [blo, bhi] = extremes(b);
  if (!in_range(alo + blo) || !in_range(ahi + bhi)) throw CoeffError("exponent overflow in product");

  r.terms_.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.terms_.push_back({x.key + y.key - kZeroKey, x.c * y.c});
  r.normalize();
  return r;
}

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) { return mul_terms(a.terms_, b.terms_); }

CoeffElem& CoeffElem::operator*=(const CoeffElem& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const CoeffElem& a, const CoeffElem& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

CoeffElem CoeffElem::pow(unsigned n) const {
  CoeffElem r(1);
  CoeffElem base = *this;
  while (n) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return r;
}

bool CoeffElem::is_unit() const {
  if (terms_.size() != 1) return false;
  const Exponent e = unpack_exponent(terms_[0].key);
  return e.d0 == 0 && e.d1 == 0 && (terms_[0].c == 1 || terms_[0].c == -1);
}

CoeffElem CoeffElem::unit_inverse() const {
  if (!is_unit()) throw CoeffError("inverse requested for a non-unit: " + to_string());
  const Exponent e = unpack_exponent(terms_[0].key);
  return monomial({-e.a2, -e.v1, -e.v2, 0, 0}, terms_[0].c);
}

CoeffElem CoeffElem::divide_by_unit(const CoeffElem& divisor) const { return *this * divisor.unit_inverse(); }

CoeffElem CoeffElem::divide_exact(const CoeffElem& divisor) const {
  if (divisor.is_zero()) throw CoeffError("division by zero");
  if (divisor.is_unit()) return divide_by_unit(divisor);
  // Multivariate division with remainder, leading term = largest key. The
  // Laurent variables are shifted by the divisor's leading monomial so the
  // procedure only relies on the term order being multiplicative.
  const Term& lead = divisor.terms_.back();
  const Exponent le = unpack_exponent(lead.key);
  CoeffElem rem = *this;
  CoeffElem quot;
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) throw CoeffError("division did not terminate");
    const Term& top = rem.terms_.back();
    const Exponent te = unpack_exponent(top.key);
    const Exponent qe{te.a2 - le.a2, te.v1 - le.v1, te.v2 - le.v2, te.d0 - le.d0, te.d1 - le.d1};
    if (qe.d0 < 0 || qe.d1 < 0 || top.c % lead.c != 0)
      throw CoeffError("inexact division: " + to_string() + " / " + divisor.to_string());
    CoeffElem q = monomial(qe, top.c / lead.c);
    quot += q;
    rem -= q * divisor;
  }
  return quot;
}

bool CoeffElem::has_puncture_variables() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) {
    const Exponent e = unpack_exponent(t.key);
    return e.v1 != 0 || e.v2 != 0;
  });
}

HalfLaurent CoeffElem::to_half_laurent() const {
  HalfLaurent h;
  for (const auto& t : terms_) {
    const Exponent e = unpack_exponent(t.key);
    if (e.v1 || e.v2 || e.d0 || e.d1) throw CoeffError("not a Laurent polynomial in A: " + to_string());
    h.terms_.emplace_back(e.a2, t.c);
  }
  return h;
}

std::vector<std::pair<std::pair<int, int>, HalfLaurent>> CoeffElem::by_boundary_monomial() const {
  std::vector<std::pair<std::pair<int, int>, HalfLaurent>> out;
  std::vector<std::pair<std::pair<int, int>, HalfLaurent::Term>> flat;
  for (const auto& t : terms_) {
    const Exponent e = unpack_exponent(t.key);
    if (e.v1 || e.v2) throw CoeffError("puncture variables present: " + to_string());
    flat.push_back({{e.d0, e.d1}, {e.a2, t.c}});
  }
  std::stable_sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.first < b.second.first;
  });
  for (auto& [dm, term] : flat) {
    if (out.empty() || out.back().first != dm) out.push_back({dm, HalfLaurent{}});
    out.back().second.terms_.push_back(std::move(term));
  }
  return out;
}

std::string CoeffElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Exponent e = unpack_exponent(t.key);
    std::vector<std::string> factors;
    if (e.a2) factors.push_back(power_string("A", e.a2, true));
    if (e.v1) factors.push_back(power_string("v1", e.v1, false));
    if (e.v2) factors.push_back(power_string("v2", e.v2, false));
    if (e.d0) factors.push_back(power_string("d0", e.d0, false));
    if (e.d1) factors.push_back(power_string("d1", e.d1, false));
    Integer c = t.c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (factors.empty() || c != 1) {
      os << c;
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ----------------------------------------------------------- specialization

Specialization Specialization::unit_punctures() {
  Specialization s;
  s.v1 = CoeffElem(1);
  s.v2 = CoeffElem(1);
  return s;
}

void Specialization::validate() const {
  auto check_unit = [](const std::optional<CoeffElem>& v, const char* name) {
    if (v && !v->is_unit()) throw CoeffError(std::string(name) + " must be assigned a unit");
  };
  check_unit(v1, "v1");
  check_unit(v2, "v2");
  auto check_num = [](const std::optional<std::complex<double>>& v, const char* name) {
    if (v && *v == std::complex<double>(0.0, 0.0)) throw CoeffError(std::string(name) + " must be nonzero");
  };
  check_num(half_A, "A^(1/2)");
  check_num(v1_num, "v1");
  check_num(v2_num, "v2");
  if (a_scale == 0) throw CoeffError("A cannot be sent to 1 by scaling");
}

bool Specialization::fully_numeric() const {
  return half_A && v1_num && v2_num && d0_num && d1_num;
}

CoeffElem specialize(const CoeffElem& x, const Specialization& s) {
  s.validate();
  auto power_of = [](const std::optional<CoeffElem>& img, int sym_power, const CoeffElem& sym) {
    const CoeffElem& base = img ? *img : sym;
    if (sym_power >= 0) return base.pow(static_cast<unsigned>(sym_power));
    return base.unit_inverse().pow(static_cast<unsigned>(-sym_power));
  };
  CoeffElem out;
  for (const auto& [e, c] : x.terms()) {
    CoeffElem term = CoeffElem::monomial({e.a2 * s.a_scale, 0, 0, 0, 0}, c);
    if (e.v1) term *= power_of(s.v1, e.v1, CoeffElem::v1());
    if (e.v2) term *= power_of(s.v2, e.v2, CoeffElem::v2());
    if (e.d0) term *= power_of(s.d0, e.d0, CoeffElem::d0());
    if (e.d1) term *= power_of(s.d1, e.d1, CoeffElem::d1());
    out += term;
  }
  return out;
}

std::complex<double> evaluate(const CoeffElem& x, const Specialization& s) {
  s.validate();
  if (!s.fully_numeric()) throw CoeffError("numeric evaluation needs all five variables assigned");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : x.terms()) {
    std::complex<double> t = c.convert_to<double>();
    t *= std::pow(*s.half_A, e.a2 * s.a_scale);
    t *= std::pow(*s.v1_num, e.v1) * std::pow(*s.v2_num, e.v2);
    t *= std::pow(*s.d0_num, e.d0) * std::pow(*s.d1_num, e.d1);
    sum += t;
  }
  return sum;
}

// ---------------------------------------------------------- quantum integers

HalfLaurent quantum_int(int n) {
  if (n <= 0) throw CoeffError("quantum integer needs n >= 1");
  return quantum_int_in(n, 1);
}

HalfLaurent quantum_int_in(int n, int k) {
  if (n == 0) return {};
  if (n < 0) return -quantum_int_in(-n, k);
  HalfLaurent h;
  for (int e = 1 - n; e <= n - 1; e += 2) h += HalfLaurent::monomial(2 * k * e);
  return h;
}

std::vector<Integer> chebyshev_coefficients(unsigned k, bool normalized) {
  struct Poly {
    std::vector<Integer> c;
    Poly operator-(const Poly& o) const {
      Poly r = *this;
      if (r.c.size() < o.c.size()) r.c.resize(o.c.size());
      for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
      while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
      return r;
    }
  };
  // Multiplication by x is a shift.
  auto times_x = [](const Poly&, const Poly& b) {
    Poly r{std::vector<Integer>(b.c.size() + 1)};
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + 1] = b.c[i];
    return r;
  };
  const Poly x{{0, 1}};
  return chebyshev(k, x, times_x, [](long c) { return Poly{{Integer(c)}}; }, normalized).c;
}

}  // namespace skein
