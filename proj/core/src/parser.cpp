#include <cctype>

#include "ptk/syntax.hpp"

namespace ptk {

namespace {

// Recursive-descent parser with ordered choice at '('. The printed form is
// always fully parenthesised, but inside a parenthesised group we also accept
// unparenthesised '+'/'*' chains ('*' binds tighter, both left-associative),
// so inputs like "(S(0) + 0 = S(0))" read naturally.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term term_entry() {
    Term t = term_chain();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after term");
    return t;
  }

  Formula formula_entry() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

  std::size_t far_pos() const { return far_pos_; }
  const std::string& far_msg() const { return far_msg_; }

 private:
  struct Bail {};  // local backtracking signal; converted to ParseError at top

  [[noreturn]] void fail(const std::string& msg) {
    if (pos_ >= far_pos_) {
      far_pos_ = pos_;
      far_msg_ = msg;
    }
    throw Bail{};
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat_char(char c) {
    if (peek_char(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_char(char c) {
    if (!eat_char(c)) fail(std::string("expected '") + c + "'");
  }

  Nat number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Nat(std::string(text_.substr(start, pos_ - start)));
  }

  VarId variable() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'v') fail("expected variable");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected variable index");
    return VarId(number());
  }

  Term term_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected term");
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == 'S') {
      ++pos_;
      expect_char('(');
      Term t = term_chain();
      expect_char(')');
      return Term::succ(std::move(t));
    }
    if (c == 'v') return Term::var(variable());
    if (c == '(') {
      ++pos_;
      Term t = term_chain();
      expect_char(')');
      return t;
    }
    fail("expected term");
  }

  Term term_product() {
    Term t = term_atom();
    while (eat_char('*')) t = Term::mul(std::move(t), term_atom());
    return t;
  }

  Term term_chain() {
    Term t = term_product();
    while (eat_char('+')) t = Term::add(std::move(t), term_product());
    return t;
  }

  Formula formula() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected formula");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::neg(formula());
    }
    if (c == 'E' || c == 'A') {
      ++pos_;
      VarId v = variable();
      Formula body = formula();
      return c == 'E' ? Formula::exists(std::move(v), std::move(body))
                      : Formula::forall(std::move(v), std::move(body));
    }
    if (c == '(') {
      ++pos_;
      std::size_t group_start = pos_;
      // Either "Term = Term" or "Formula (|/&) Formula".
      try {
        Term l = term_chain();
        expect_char('=');
        Term r = term_chain();
        expect_char(')');
        return Formula::eq(std::move(l), std::move(r));
      } catch (const Bail&) {
        pos_ = group_start;
      }
      Formula l = formula();
      skip_ws();
      if (eat_char('|')) {
        Formula r = formula();
        expect_char(')');
        return Formula::disj(std::move(l), std::move(r));
      }
      if (eat_char('&')) {
        Formula r = formula();
        expect_char(')');
        return Formula::conj(std::move(l), std::move(r));
      }
      fail("expected '=', '|' or '&' in group");
    }
    fail("expected formula");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t far_pos_ = 0;
  std::string far_msg_ = "syntax error";
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  try {
    return p.term_entry();
  } catch (...) {
    throw ParseError(p.far_pos(), p.far_msg());
  }
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  try {
    return p.formula_entry();
  } catch (...) {
    throw ParseError(p.far_pos(), p.far_msg());
  }
}

std::variant<Formula, Term> parse(std::string_view text) {
  Parser pf(text);
  try {
    return pf.formula_entry();
  } catch (...) {
  }
  Parser pt(text);
  try {
    return pt.term_entry();
  } catch (...) {
    if (pf.far_pos() >= pt.far_pos()) throw ParseError(pf.far_pos(), pf.far_msg());
    throw ParseError(pt.far_pos(), pt.far_msg());
  }
}

}  // namespace ptk
