#include "fanalg/polyring/text_format.hpp"

#include <cctype>
#include <sstream>

#include "fanalg/error.hpp"

namespace fanalg::poly {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  std::string digits() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty()) fail("expected a number");
    return out;
  }
  std::string identifier() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty()) fail("expected a variable");
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool starts_identifier(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const TablePtr& table, F field) {
  Lexer lex(text);
  if (lex.done()) lex.fail("empty polynomial");
  std::vector<typename Polynomial<F>::Term> terms;
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      negative = true;
    } else if (!first) {
      lex.fail("expected + or -");
    }
    first = false;
    Rational coeff = 1;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      Integer num(lex.digits());
      Integer den = 1;
      if (lex.accept('/')) {
        den = Integer(lex.digits());
        if (den == 0) lex.fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_factor = true;
      if (!lex.accept('*')) {
        terms.push_back({Monomial(), field.from_rational(negative ? Rational(-coeff) : coeff)});
        continue;
      }
    }
    std::vector<unsigned> exponents(table->size(), 0);
    do {
      if (!starts_identifier(lex.peek())) lex.fail(have_factor ? "expected a variable after *" : "expected a term");
      const std::string name = lex.identifier();
      const auto index = table->index_of(name);
      if (!index) lex.fail("unknown variable " + name);
      unsigned e = 1;
      if (lex.accept('^')) {
        const std::string d = lex.digits();
        if (d.size() > 3 || std::stoul(d) > 255) lex.fail("exponent too large");
        e = static_cast<unsigned>(std::stoul(d));
      }
      if (exponents[*index] + e > 255) lex.fail("exponent too large");
      exponents[*index] += e;
      have_factor = true;
    } while (lex.accept('*'));
    terms.push_back({Monomial::from_exponents(exponents), field.from_rational(negative ? Rational(-coeff) : coeff)});
  }
  return Polynomial<F>::from_terms(table, std::move(terms), field);
}

template <class F>
std::string format_polynomial(const Polynomial<F>& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

template QPoly parse_polynomial(std::string_view, const TablePtr&, RationalField);
template FpPoly parse_polynomial(std::string_view, const TablePtr&, PrimeField);
template std::string format_polynomial(const QPoly&);
template std::string format_polynomial(const FpPoly&);

}  // namespace fanalg::poly
