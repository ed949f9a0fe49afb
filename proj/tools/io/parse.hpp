#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skein/freealg.hpp"
#include "skein/lattice.hpp"

namespace skein::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Realizes C(n, k); absent outside curve-aware commands.
using CurveResolver = std::function<SkeinElem(IntPair)>;

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | name | 'C' '(' int ',' int ')' | '(' expr ')'
/// Names are the generators of `sys` and the scalars d0 d1 v1 v2 A Ah.
/// Products concatenate words without reducing. Negative powers are allowed
/// only for scalar units.
SkeinElem parse_expression(std::string_view text, const RewriteSystem& sys, const CurveResolver& curves = {});

/// Parses "(n,k)", "n,k" or "C(n,k)".
IntPair parse_curve(std::string_view text);

}  // namespace skein::io
