#include "polynorm/laurent.hpp"

#include <cctype>

#include "polynorm/error.hpp"

namespace polynorm {

LaurentPolynomial::LaurentPolynomial(std::size_t dim, TermMap terms) : dim_(dim) {
  for (auto& [exp, coef] : terms) {
    require_same_dim(dim, exp.dim());
    if (coef != 0) terms_.emplace(exp, std::move(coef));
  }
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Integer& c) {
  return LaurentPolynomial(dim, {{LatticePoint::zero(dim), c}});
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticePoint& exponent, const Integer& c) {
  return LaurentPolynomial(exponent.dim(), {{exponent, c}});
}

Integer LaurentPolynomial::coefficient(const LatticePoint& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_dim(f.dim(), g.dim());
  LaurentPolynomial::TermMap sum = f.terms();
  for (const auto& [exp, coef] : g.terms()) sum[exp] += coef;
  return LaurentPolynomial(f.dim(), std::move(sum));
}

LaurentPolynomial negate(const LaurentPolynomial& f) {
  LaurentPolynomial::TermMap out;
  for (const auto& [exp, coef] : f.terms()) out.emplace(exp, -coef);
  return LaurentPolynomial(f.dim(), std::move(out));
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same_dim(f.dim(), g.dim());
  LaurentPolynomial::TermMap product;
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) product[e1 + e2] += c1 * c2;
  }
  return LaurentPolynomial(f.dim(), std::move(product));
}

LaurentPolynomial conjugate(const LaurentPolynomial& f) {
  LaurentPolynomial::TermMap out;
  for (const auto& [exp, coef] : f.terms()) out.emplace(-exp, coef);
  return LaurentPolynomial(f.dim(), std::move(out));
}

Polytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no polytope");
  std::vector<LatticePoint> support;
  support.reserve(f.terms().size());
  for (const auto& [exp, coef] : f.terms()) support.push_back(exp);
  return canonical_hull(support, f.dim());
}

namespace {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ['^' ['-'|'+'] digits]
//   atom   := digits | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables) {}

  LaurentPolynomial parse() {
    LaurentPolynomial f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPolynomial expr() {
    LaurentPolynomial acc(vars_.size());
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negative) acc = negate(acc);
    while (true) {
      if (accept('+')) {
        acc = add(acc, term());
      } else if (accept('-')) {
        acc = add(acc, negate(term()));
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = power();
    while (accept('*')) acc = multiply(acc, power());
    return acc;
  }

  LaurentPolynomial power() {
    const std::size_t start = pos_;
    LaurentPolynomial base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const Integer exponent = digits();
    if (!negative) return pow(base, exponent);
    // Only monomials with unit coefficient are invertible in Z[Z^n].
    if (base.terms().size() != 1 || abs(base.terms().begin()->second) != 1) {
      pos_ = start;
      fail("negative exponent on a non-monomial");
    }
    const auto& [exp, coef] = *base.terms().begin();
    LaurentPolynomial inverse = LaurentPolynomial::monomial(-exp, coef);
    return pow(inverse, exponent);
  }

  LaurentPolynomial pow(const LaurentPolynomial& base, const Integer& exponent) {
    if (!exponent.fits_ulong_p() || exponent > 4096) fail("exponent too large for expansion");
    LaurentPolynomial acc = LaurentPolynomial::constant(vars_.size(), 1);
    // Monomials are raised directly so large exponents stay cheap.
    if (base.terms().size() == 1) {
      const auto& [exp, coef] = *base.terms().begin();
      std::vector<Integer> scaled;
      for (const auto& c : exp.coords()) scaled.emplace_back(c * exponent);
      Integer power_coef;
      mpz_pow_ui(power_coef.get_mpz_t(), coef.get_mpz_t(), exponent.get_ui());
      return LaurentPolynomial::monomial(LatticePoint(std::move(scaled)), power_coef);
    }
    for (unsigned long i = 0; i < exponent.get_ui(); ++i) acc = multiply(acc, base);
    return acc;
  }

  LaurentPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPolynomial::constant(vars_.size(), digits());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          std::vector<Integer> exp(vars_.size(), Integer(0));
          exp[i] = 1;
          return LaurentPolynomial::monomial(LatticePoint(std::move(exp)), 1);
        }
      }
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + name + "' at position " + std::to_string(start));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& variables) {
  require_same_dim(f.dim(), variables.size());
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, coef] : f.terms()) {
    const bool negative = coef < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Integer magnitude = abs(coef);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < exp.dim(); ++i) {
      if (exp[i] == 0) continue;
      factors.push_back(exp[i] == 1 ? variables[i] : variables[i] + "^" + exp[i].get_str());
    }
    if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), magnitude.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace polynorm
