#include "qeala/parse.hpp"

#include <cctype>
#include <limits>

namespace qeala {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("expected operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_atom() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer out of range");
    }
    return neg ? -v : v;
  }

  IndexPair bracket_index() {
    expect('[');
    int m = static_cast<int>(integer());
    expect(',');
    int n = static_cast<int>(integer());
    expect(']');
    return {m, n};
  }

  Expr expr() {
    Expr left = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return left;
      std::size_t p = ++pos_;
      Expr node;
      node.kind = c == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      node.position = p;
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
  }

  Expr term() {
    skip_ws();
    std::size_t start = pos_ + 1;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Expr left = factor();
    for (;;) {
      bool explicit_star = accept('*');
      if (!explicit_star && !starts_atom()) break;
      Expr node;
      node.kind = Expr::Kind::Mul;
      node.position = pos_ + 1;
      node.children.push_back(std::move(left));
      node.children.push_back(factor());
      left = std::move(node);
    }
    if (!negate) return left;
    Expr node;
    node.kind = Expr::Kind::Neg;
    node.position = start;
    node.children.push_back(std::move(left));
    return node;
  }

  Expr factor() {
    Expr base = atom();
    if (!accept('^')) return base;
    Expr node;
    node.kind = Expr::Kind::Pow;
    node.position = pos_ + 1;
    node.exponent = static_cast<int>(integer());
    node.children.push_back(std::move(base));
    return node;
  }

  Expr atom() {
    skip_ws();
    Expr e;
    e.position = pos_ + 1;
    if (pos_ >= text_.size()) fail("expected number, variable or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      try {
        e.number = parse_rational(text_.substr(begin, pos_ - begin));
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), begin + 1);
      }
      e.kind = Expr::Kind::Number;
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected number, variable or '('");
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view id = text_.substr(begin, pos_ - begin);
    if (id == "i") {
      e.kind = Expr::Kind::ImagUnit;
    } else if (id == "q") {
      e.kind = Expr::Kind::Q;
    } else if (id == "mu") {
      e.kind = Expr::Kind::Mu;
    } else if (id == "s") {
      e.kind = Expr::Kind::S;
    } else if (id == "t") {
      e.kind = Expr::Kind::T;
    } else if (id == "x") {
      e.kind = Expr::Kind::Var;
      e.index = bracket_index();
    } else if (id == "cs" || id == "ct" || id == "ds" || id == "dt") {
      e.kind = Expr::Kind::Gen;
      e.gen_name = std::string(id);
    } else if (id.size() == 3 && id[0] == 'E' && (id[1] == '1' || id[1] == '2') && (id[2] == '1' || id[2] == '2')) {
      e.kind = Expr::Kind::Gen;
      e.gen_i = id[1] - '0';
      e.gen_j = id[2] - '0';
      e.gen_name = std::string(id);
      e.index = bracket_index();
    } else {
      pos_ = begin;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Scalar-only evaluation shared by all domains.
Scalar scalar_atom(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return Scalar(GaussianRational(e.number));
    case Expr::Kind::ImagUnit: return Scalar(GaussianRational::i());
    case Expr::Kind::Q: return Scalar::q_power(1);
    case Expr::Kind::Mu: return Scalar::mu();
    default: throw ParseError("not a scalar", e.position);
  }
}

// Inverse of a single-term scalar c*q^k; anything else has no inverse here.
Scalar invert_unit(const Scalar& s, std::size_t position) {
  if (s.terms().size() != 1 || s.terms().begin()->first.mu_deg != 0) {
    throw ParseError("negative exponent needs a base of the form c*q^k", position);
  }
  const auto& [key, c] = *s.terms().begin();
  return Scalar::term(-key.q_exp, 0, GaussianRational(1) / c);
}

template <typename V, typename Mul>
V power(const V& base, int k, Mul mul) {
  V out = V(Scalar(1));
  for (int r = 0; r < k; ++r) out = mul(out, base);
  return out;
}

Scalar eval_scalar(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add: return eval_scalar(e.children[0]) + eval_scalar(e.children[1]);
    case Expr::Kind::Sub: return eval_scalar(e.children[0]) - eval_scalar(e.children[1]);
    case Expr::Kind::Neg: return -eval_scalar(e.children[0]);
    case Expr::Kind::Mul: return eval_scalar(e.children[0]) * eval_scalar(e.children[1]);
    case Expr::Kind::Pow: {
      Scalar b = eval_scalar(e.children[0]);
      if (e.exponent < 0) b = invert_unit(b, e.position);
      return power(b, std::abs(e.exponent), [](const Scalar& a, const Scalar& c) { return a * c; });
    }
    default: return scalar_atom(e);
  }
}

Polynomial eval_poly(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var: return Polynomial::variable(e.index);
    case Expr::Kind::Add: return eval_poly(e.children[0]) + eval_poly(e.children[1]);
    case Expr::Kind::Sub: return eval_poly(e.children[0]) - eval_poly(e.children[1]);
    case Expr::Kind::Neg: return -eval_poly(e.children[0]);
    case Expr::Kind::Mul: return eval_poly(e.children[0]) * eval_poly(e.children[1]);
    case Expr::Kind::Pow: {
      Polynomial b = eval_poly(e.children[0]);
      if (e.exponent < 0) {
        if (b.degree() > 0) throw ParseError("negative exponent on a polynomial variable", e.position);
        b = Polynomial(invert_unit(b.coefficient(Monomial()), e.position));
      }
      return power(b, std::abs(e.exponent), [](const Polynomial& a, const Polynomial& c) { return a * c; });
    }
    case Expr::Kind::S:
    case Expr::Kind::T:
    case Expr::Kind::Gen: throw ParseError("unexpected symbol in a polynomial", e.position);
    default: return Polynomial(scalar_atom(e));
  }
}

TorusElement eval_torus(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::S: return TorusElement::monomial(1, 0);
    case Expr::Kind::T: return TorusElement::monomial(0, 1);
    case Expr::Kind::Add: return eval_torus(e.children[0]) + eval_torus(e.children[1]);
    case Expr::Kind::Sub: return eval_torus(e.children[0]) - eval_torus(e.children[1]);
    case Expr::Kind::Neg: return -eval_torus(e.children[0]);
    case Expr::Kind::Mul: return eval_torus(e.children[0]) * eval_torus(e.children[1]);
    case Expr::Kind::Pow: {
      TorusElement b = eval_torus(e.children[0]);
      if (e.exponent < 0) {
        if (b.terms().size() != 1) throw ParseError("negative exponent needs a torus monomial", e.position);
        const auto& [p, c] = *b.terms().begin();
        // (c s^m t^n)^-1 = c^-1 q^(mn) s^-m t^-n
        b = TorusElement::monomial(-p.m, -p.n, Scalar::q_power(p.m * p.n) * invert_unit(c, e.position));
      }
      return power(b, std::abs(e.exponent),
                   [](const TorusElement& a, const TorusElement& c) { return a * c; });
    }
    case Expr::Kind::Var:
    case Expr::Kind::Gen: throw ParseError("unexpected symbol in a torus element", e.position);
    default: return TorusElement(scalar_atom(e));
  }
}

bool is_scalar_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::ImagUnit:
    case Expr::Kind::Q:
    case Expr::Kind::Mu: return true;
    case Expr::Kind::Var:
    case Expr::Kind::S:
    case Expr::Kind::T:
    case Expr::Kind::Gen: return false;
    default:
      for (const auto& c : e.children) {
        if (!is_scalar_expr(c)) return false;
      }
      return true;
  }
}

LieElement eval_lie(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Gen: {
      if (e.gen_i != 0) return LieElement::E(e.gen_i, e.gen_j, e.index.m, e.index.n);
      if (e.gen_name == "cs") return LieElement::cs();
      if (e.gen_name == "ct") return LieElement::ct();
      if (e.gen_name == "ds") return LieElement::ds();
      return LieElement::dt();
    }
    case Expr::Kind::Add: return eval_lie(e.children[0]) + eval_lie(e.children[1]);
    case Expr::Kind::Sub: return eval_lie(e.children[0]) - eval_lie(e.children[1]);
    case Expr::Kind::Neg: return -eval_lie(e.children[0]);
    case Expr::Kind::Mul: {
      const bool left_scalar = is_scalar_expr(e.children[0]);
      const bool right_scalar = is_scalar_expr(e.children[1]);
      if (left_scalar && !right_scalar) return eval_scalar(e.children[0]) * eval_lie(e.children[1]);
      if (right_scalar && !left_scalar) return eval_scalar(e.children[1]) * eval_lie(e.children[0]);
      throw ParseError("a Lie term must be a scalar times one generator", e.position);
    }
    default: throw ParseError("expected a generator (E12[m,n], cs, ct, ds, dt)", e.position);
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_poly(std::string_view text) { return eval_poly(parse_expr(text)); }

Scalar parse_scalar(std::string_view text) {
  Expr e = parse_expr(text);
  if (!is_scalar_expr(e)) throw ParseError("expected a scalar expression in q, mu, i", 1);
  return eval_scalar(e);
}

TorusElement parse_torus(std::string_view text) { return eval_torus(parse_expr(text)); }

LieElement parse_lie(std::string_view text) { return eval_lie(parse_expr(text)); }

}  // namespace qeala
