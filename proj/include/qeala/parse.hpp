#pragma once

#include "qeala/polyrep.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeala {

/// Syntax or evaluation error with a 1-based character position (one past
/// the end of input for premature end).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parse tree of the expression grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := ('+' | '-')? factor (('*')? factor)*
///   factor := atom ('^' '-'? INT)?
///   atom   := NUM | 'i' | 'q' | 'mu' | 'x' '[' INT ',' INT ']' | 's' | 't'
///           | 'E' DIGIT DIGIT '[' INT ',' INT ']' | 'cs' | 'ct' | 'ds' | 'dt'
///           | '(' expr ')'
///
/// where NUM is "p" or "p/q". Juxtaposed factors multiply, so "3/4i",
/// "s^2 t^-1" and "2 x[0,0]" are accepted.
struct Expr {
  enum class Kind { Number, ImagUnit, Q, Mu, Var, S, T, Gen, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Number;
  std::size_t position = 1;
  Rational number{0};
  IndexPair index;     // Var, Gen
  int gen_i = 0;       // Gen: 1 or 2 for E_ij; 0 with gen_name for c/d
  int gen_j = 0;
  std::string gen_name;
  int exponent = 0;    // Pow
  std::vector<Expr> children;
};

Expr parse_expr(std::string_view text);

/// Element of V; only scalar atoms and x[m,n] are allowed.
Polynomial parse_poly(std::string_view text);
/// Scalar; only NUM, i, q, mu.
Scalar parse_scalar(std::string_view text);
/// Torus element; scalar atoms plus s and t, multiplied in order.
TorusElement parse_torus(std::string_view text);
/// Lie element; scalar multiples of E_ij[m,n], cs, ct, ds, dt.
LieElement parse_lie(std::string_view text);

}  // namespace qeala
