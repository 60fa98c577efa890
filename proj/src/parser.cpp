#include <charp/parser.hpp>

#include <cctype>
#include <limits>

namespace charp {

namespace {

struct Lexer {
  enum class Tok { integer, ident, plus, minus, star, caret, end };

  Lexer(const std::string& s, std::uint32_t p) : s_(s), p_(p) { advance(); }

  Tok tok = Tok::end;
  std::uint32_t int_mod = 0;  // integer value mod p, filled by read_int
  std::string int_digits;     // raw digits, for exponent parsing
  std::string ident;
  std::size_t tok_line = 1, tok_col = 1;

  void advance() {
    while (pos_ < s_.size() && std::isspace(std::uint8_t(s_[pos_]))) bump();
    tok_line = line_;
    tok_col = col_;
    if (pos_ >= s_.size()) {
      tok = Tok::end;
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(std::uint8_t(c))) {
      int_digits.clear();
      std::uint64_t acc = 0;
      while (pos_ < s_.size() && std::isdigit(std::uint8_t(s_[pos_]))) {
        int_digits += s_[pos_];
        acc = (acc * 10 + std::uint64_t(s_[pos_] - '0')) % p_;
        bump();
      }
      int_mod = std::uint32_t(acc);
      tok = Tok::integer;
      return;
    }
    if (std::isalpha(std::uint8_t(c)) || c == '_') {
      ident.clear();
      while (pos_ < s_.size() &&
             (std::isalnum(std::uint8_t(s_[pos_])) || s_[pos_] == '_')) {
        ident += s_[pos_];
        bump();
      }
      tok = Tok::ident;
      return;
    }
    bump();
    switch (c) {
      case '+': tok = Tok::plus; return;
      case '-': tok = Tok::minus; return;
      case '*': tok = Tok::star; return;
      case '^': tok = Tok::caret; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tok_line, tok_col);
    }
  }

 private:
  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& s_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

struct Parser {
  Parser(Lexer& lx, const VariableSet& vars, PrimeModulus p)
      : lx_(lx), vars_(vars), p_(p) {}

  Polynomial parse() {
    std::vector<Term> terms;
    bool negative = false;
    if (lx_.tok == Lexer::Tok::plus) {
      lx_.advance();
    } else if (lx_.tok == Lexer::Tok::minus) {
      negative = true;
      lx_.advance();
    }
    parse_term(terms, negative);
    while (lx_.tok == Lexer::Tok::plus || lx_.tok == Lexer::Tok::minus) {
      negative = lx_.tok == Lexer::Tok::minus;
      lx_.advance();
      parse_term(terms, negative);
    }
    if (lx_.tok != Lexer::Tok::end) {
      throw ParseError("expected '+', '-' or end of input", lx_.tok_line, lx_.tok_col);
    }
    return Polynomial::from_terms(vars_, p_, std::move(terms));
  }

 private:
  void parse_term(std::vector<Term>& out, bool negative) {
    std::uint32_t coef = negative ? p_.value() - 1 : 1;
    std::vector<std::uint32_t> exps(vars_.size(), 0);
    parse_factor(coef, exps);
    while (lx_.tok == Lexer::Tok::star) {
      lx_.advance();
      parse_factor(coef, exps);
    }
    if (coef % p_.value() != 0) {
      out.push_back(Term{Monomial::from_exponents(exps), coef % p_.value()});
    }
  }

  void parse_factor(std::uint32_t& coef, std::vector<std::uint32_t>& exps) {
    if (lx_.tok == Lexer::Tok::integer) {
      coef = mul_mod(coef, lx_.int_mod, p_.value());
      lx_.advance();
      return;
    }
    if (lx_.tok != Lexer::Tok::ident) {
      throw ParseError("expected integer or variable", lx_.tok_line, lx_.tok_col);
    }
    auto idx = vars_.index_of(lx_.ident);
    if (!idx) {
      throw ParseError("unknown variable '" + lx_.ident + "'", lx_.tok_line, lx_.tok_col);
    }
    lx_.advance();
    std::uint64_t e = 1;
    if (lx_.tok == Lexer::Tok::caret) {
      lx_.advance();
      if (lx_.tok != Lexer::Tok::integer) {
        throw ParseError("expected integer exponent", lx_.tok_line, lx_.tok_col);
      }
      if (lx_.int_digits.size() > 9) {
        throw ParseError("exponent overflow", lx_.tok_line, lx_.tok_col);
      }
      e = std::stoull(lx_.int_digits);
      lx_.advance();
    }
    std::uint64_t sum = std::uint64_t(exps[*idx]) + e;
    if (sum > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError("exponent overflow", lx_.tok_line, lx_.tok_col);
    }
    exps[*idx] = std::uint32_t(sum);
  }

  Lexer& lx_;
  const VariableSet& vars_;
  PrimeModulus p_;
};

} // namespace

Polynomial parse_poly(const std::string& text, const VariableSet& vars, PrimeModulus p) {
  Lexer lx(text, p.value());
  Parser parser(lx, vars, p);
  return parser.parse();
}

} // namespace charp
