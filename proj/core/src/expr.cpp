#include "surreal/expr.hpp"

#include <cctype>
#include <string>

#include "surreal/arithmetic.hpp"
#include "surreal/canonical.hpp"
#include "surreal/error.hpp"

namespace surreal {

namespace {

constexpr std::string_view kPhi = "\xCF\x86";     // φ
constexpr std::string_view kTimes = "\xC3\x97";   // ×
constexpr std::string_view kMinus = "\xE2\x88\x92";  // −

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!at(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) {
      fail("expected '" + std::string(token) + "'" +
           (pos_ < text_.size() ? ", got '" + std::string(1, text_[pos_]) + "'" : " at end of input"));
    }
  }

  bool accept_minus() { return accept("-") || accept(kMinus); }

  static Expr binary(Expr::Kind kind, std::size_t position, Expr a, Expr b) {
    Expr e;
    e.kind = kind;
    e.position = position;
    e.operands.push_back(std::move(a));
    e.operands.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      std::size_t at_op = pos_;
      if (accept("+")) {
        lhs = binary(Expr::Kind::add, at_op, std::move(lhs), term());
      } else if (accept_minus()) {
        lhs = binary(Expr::Kind::sub, at_op, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      std::size_t at_op = pos_;
      if (accept("*") || accept(kTimes)) {
        lhs = binary(Expr::Kind::mul, at_op, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_space();
    std::size_t start = pos_;
    if (accept_minus()) {
      Expr e;
      e.kind = Expr::Kind::negate;
      e.position = start;
      e.operands.push_back(factor());
      return e;
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (at("{")) return form();
    if (accept("dali")) return dali(start);
    if (pos_ == text_.size()) fail("unexpected end of input");
    fail("expected a form, dali(...), '-' or '('");
  }

  Expr dali(std::size_t start) {
    expect("(");
    skip_space();
    std::size_t literal_start = pos_;
    std::string literal;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) literal += text_[pos_];
      ++pos_;
    }
    if (pos_ == text_.size()) fail("expected ')' closing dali(");
    ++pos_;
    if (literal.empty()) throw SyntaxError(literal_start, "empty dyadic literal");
    Expr e;
    e.kind = Expr::Kind::dali;
    e.position = start;
    try {
      e.dyadic = Dyadic::parse(literal);
    } catch (const SyntaxError& err) {
      throw SyntaxError(literal_start, std::string("bad dyadic literal: ") + err.what());
    }
    return e;
  }

  std::vector<Expr> setpart() {
    std::vector<Expr> members;
    if (accept("phi") || accept(kPhi)) return members;
    members.push_back(expr());
    while (accept(",")) members.push_back(expr());
    return members;
  }

  Expr form() {
    skip_space();
    Expr e;
    e.kind = Expr::Kind::form;
    e.position = pos_;
    expect("{");
    e.left = setpart();
    expect("|");
    e.right = setpart();
    expect("}");
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

FormId elaborate(FormStore& store, const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::dali:
      return dali(store, expr.dyadic);
    case Expr::Kind::negate:
      return negate(store, elaborate(store, expr.operands.at(0)));
    case Expr::Kind::add:
      return add(store, elaborate(store, expr.operands.at(0)), elaborate(store, expr.operands.at(1)));
    case Expr::Kind::sub:
      return sub(store, elaborate(store, expr.operands.at(0)), elaborate(store, expr.operands.at(1)));
    case Expr::Kind::mul:
      return mul(store, elaborate(store, expr.operands.at(0)), elaborate(store, expr.operands.at(1)));
    case Expr::Kind::form:
      break;
  }
  std::vector<FormId> left;
  std::vector<FormId> right;
  for (const Expr& m : expr.left) left.push_back(elaborate(store, m));
  for (const Expr& m : expr.right) right.push_back(elaborate(store, m));
  try {
    return store.make_form(std::move(left), std::move(right));
  } catch (const NotANumber& e) {
    throw NotANumber("form at position " + std::to_string(expr.position) +
                     " is not a number: " + e.what());
  }
}

}  // namespace surreal
