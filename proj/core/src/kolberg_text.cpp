#include <cctype>
#include <sstream>
#include <string>

#include "whmf/kolberg.hpp"

namespace whmf {

namespace {

// Recursive-descent parser for the expression mini-language.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KolbergExpr parse() {
    KolbergExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  KolbergExpr parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    KolbergExpr e = parse_term();
    if (neg) e = -e;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '+' || c == '-') {
        take();
        KolbergExpr t = parse_term();
        e = (c == '+') ? e + t : e - t;
      } else {
        return e;
      }
    }
  }

  KolbergExpr parse_term() {
    KolbergExpr e = parse_factor();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        take();
        e = e * parse_factor();
      } else if (c == '/') {
        take();
        e = divide(e, parse_factor());
      } else {
        return e;
      }
    }
  }

  KolbergExpr parse_factor() {
    KolbergExpr a = parse_atom();
    skip_ws();
    if (peek() == '^') {
      take();
      const long n = parse_signed_int();
      if (n < 0 && a.size() == 1 && a.terms().begin()->second != 1 &&
          a.terms().begin()->second != -1) {
        // c^-n with |c| != 1: not an integer expression
        fail("negative power of a non-unit coefficient");
      }
      if (n < -1000000 || n > 1000000) fail("exponent out of range");
      if (n >= 0 || a.size() == 1) return pow_checked(a, static_cast<int>(n));
      fail("negative power of a multi-term expression");
    }
    return a;
  }

  KolbergExpr pow_checked(const KolbergExpr& a, int n) {
    try {
      return pow(a, n);
    } catch (const Error& err) {
      fail(err.what());
    }
    return {};  // unreachable
  }

  KolbergExpr parse_atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      take();
      KolbergExpr e = parse_expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return KolbergExpr::constant(parse_unsigned());
    }
    KolbergExponents e;
    if (consume("phi1")) {
      e.e1 = 1;
    } else if (consume("phi2")) {
      e.e2 = 1;
    } else if (consume("phi4")) {
      e.e4 = 1;
    } else if (consume("phi8")) {
      e.e8 = 1;
    } else if (consume("q")) {
      e.eq = 1;
    } else if (consume("Q")) {
      e.eQ = 1;
    } else if (consume("R")) {
      e.eR = 1;
    } else if (consume("S")) {
      e.eS = 1;
    } else if (consume("T")) {
      e.eT = 1;
    } else {
      fail("expected a number, generator, or '('");
    }
    return KolbergExpr::monomial(1, e);
  }

  KolbergExpr divide(const KolbergExpr& a, const KolbergExpr& b) {
    if (b.size() != 1) fail("division requires a single-monomial divisor");
    const auto& [be, bc] = *b.terms().begin();
    KolbergExpr r;
    KolbergExponents inv{-be.eq, -be.eQ, -be.eR, -be.eS, -be.eT,
                         -be.e2, -be.e4, -be.e8, -be.e1};
    for (const auto& [ae, ac] : a.terms()) {
      if (!mpz_divisible_p(ac.get_mpz_t(), bc.get_mpz_t())) {
        fail("inexact coefficient division");
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), ac.get_mpz_t(), bc.get_mpz_t());
      KolbergExponents sum{ae.eq + inv.eq, ae.eQ + inv.eQ, ae.eR + inv.eR,
                           ae.eS + inv.eS, ae.eT + inv.eT, ae.e2 + inv.e2,
                           ae.e4 + inv.e4, ae.e8 + inv.e8, ae.e1 + inv.e1};
      r.add_term(sum, q);
    }
    return r;
  }

  Integer parse_unsigned() {
    skip_ws();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) fail("expected digits");
    return Integer(digits);
  }

  long parse_signed_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    skip_ws();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_++]);
    }
    if (digits.empty()) fail("expected an integer exponent");
    if (digits.size() > 7) fail("exponent out of range");
    long v = std::stol(digits);
    return neg ? -v : v;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    // generators are single letters or phiN; avoid eating a prefix of a
    // longer identifier
    const std::size_t end = pos_ + word.size();
    if (end < text_.size()) {
      const char next = text_[end];
      if (std::isalnum(static_cast<unsigned char>(next)) &&
          !(word == "q" || word == "Q" || word == "R" || word == "S" || word == "T")) {
        return false;
      }
      if ((word == "q" || word == "Q" || word == "R" || word == "S" || word == "T") &&
          std::isalpha(static_cast<unsigned char>(next))) {
        // allow q*Q but reject identifiers like "qq"
        return false;
      }
    }
    pos_ += word.size();
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_power(std::ostringstream& os, bool& first, const char* name, int e) {
  if (e == 0) return;
  if (!first) os << "*";
  first = false;
  os << name;
  if (e != 1) os << "^" << e;
}

}  // namespace

KolbergExpr parse_kolberg(std::string_view text) { return Parser(text).parse(); }

std::string render(const KolbergExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [x, c] : e.terms()) {
    Integer a = abs(c);
    if (first_term) {
      if (sgn(c) < 0) os << "-";
      first_term = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    std::ostringstream body;
    bool first = true;
    render_power(body, first, "q", x.eq);
    render_power(body, first, "Q", x.eQ);
    render_power(body, first, "R", x.eR);
    render_power(body, first, "S", x.eS);
    render_power(body, first, "T", x.eT);
    render_power(body, first, "phi2", x.e2);
    render_power(body, first, "phi4", x.e4);
    render_power(body, first, "phi8", x.e8);
    render_power(body, first, "phi1", x.e1);
    const std::string factors = body.str();
    if (factors.empty()) {
      os << a;
    } else if (a == 1) {
      os << factors;
    } else {
      os << a << "*" << factors;
    }
  }
  return os.str();
}

}  // namespace whmf
