#include "parse.hpp"

#include <cctype>
#include <charconv>

namespace skein::io {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RewriteSystem& sys, const CurveResolver& curves)
      : s_(text), sys_(sys), curves_(curves) {}

  SkeinElem run() {
    SkeinElem x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  std::string_view s_;
  const RewriteSystem& sys_;
  const CurveResolver& curves_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return neg ? -v : v;
  }

  SkeinElem expr() {
    SkeinElem x = term();
    for (;;) {
      if (accept('+')) x += term();
      else if (accept('-')) x -= term();
      else return x;
    }
  }

  SkeinElem term() {
    SkeinElem x = unary();
    while (accept('*')) x = SkeinElem::concat(x, unary());
    return x;
  }

  SkeinElem unary() {
    if (accept('-')) return -unary();
    return power();
  }

  SkeinElem power() {
    const std::size_t start = pos_;
    SkeinElem base = atom();
    if (!accept('^')) return base;
    const long e = integer();
    if (e >= 0) {
      SkeinElem r(1);
      for (long i = 0; i < e; ++i) r = SkeinElem::concat(r, base);
      return r;
    }
    const CoeffElem c = base.coeff(Word{});
    if (base.size() != 1 || !c.is_unit()) {
      pos_ = start;
      fail("negative power of a non-unit");
    }
    return SkeinElem(c.unit_inverse().pow(static_cast<unsigned>(-e)));
  }

  SkeinElem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      SkeinElem x = expr();
      expect(')');
      return x;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return SkeinElem(CoeffElem(integer()));
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    if (name == "C") {
      if (!curves_) {
        pos_ = start;
        fail("C(n,k) is only accepted by curve-aware commands");
      }
      expect('(');
      const long n = integer();
      expect(',');
      const long k = integer();
      expect(')');
      if (n == 0 && k == 0) {
        pos_ = start;
        fail("C(0,0) is not a curve");
      }
      return curves_({static_cast<int>(n), static_cast<int>(k)});
    }
    if (name == "A") return SkeinElem(CoeffElem::A(1));
    if (name == "Ah") return SkeinElem(CoeffElem::half_A(1));
    if (name == "d0") return SkeinElem(CoeffElem::d0());
    if (name == "d1") return SkeinElem(CoeffElem::d1());
    if (name == "v1") return SkeinElem(CoeffElem::v1());
    if (name == "v2") return SkeinElem(CoeffElem::v2());
    if (auto id = sys_.alphabet().find(name)) return SkeinElem::word(Word(1, *id));
    pos_ = start;
    fail("unknown atom '" + name + "' for presentation " + sys_.name());
  }
};

}  // namespace

SkeinElem parse_expression(std::string_view text, const RewriteSystem& sys, const CurveResolver& curves) {
  return Parser(text, sys, curves).run();
}

IntPair parse_curve(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind("C(", 0) == 0) t = t.substr(1);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  const auto comma = t.find(',');
  if (comma == std::string::npos) throw ParseError("expected n,k", 0);
  int n = 0, k = 0;
  auto r1 = std::from_chars(t.data(), t.data() + comma, n);
  auto r2 = std::from_chars(t.data() + comma + 1, t.data() + t.size(), k);
  if (r1.ec != std::errc() || r1.ptr != t.data() + comma || r2.ec != std::errc() || r2.ptr != t.data() + t.size())
    throw ParseError("malformed curve '" + std::string(text) + "'", 0);
  return {n, k};
}

}  // namespace skein::io
