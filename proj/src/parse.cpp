#include "biforms/parse.hpp"

#include <cctype>

namespace biforms {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ring ring) : text_(text), ring_(ring) {}

  MPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    MPoly result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly result = term();
    for (;;) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  MPoly term() {
    MPoly result = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        result = multiply(result, unary());
        continue;
      }
      // Anything that could start a factor here is juxtaposition.
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      }
      return result;
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  MPoly power_expr() {
    MPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected non-negative integer exponent", start);
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      return power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MPoly primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  MPoly literal() {
    Int numerator(read_digits(), 10);
    Int denominator = 1;
    skip_space();
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected integer denominator", den_pos);
      denominator = Int(digits, 10);
      if (denominator == 0) throw ParseError("zero denominator", den_pos);
    }
    Rat value(numerator, denominator);
    value.canonicalize();
    return MPoly::constant(ring_, value);
  }

  MPoly variable() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const auto names = variable_names(ring_);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return MPoly::variable(ring_, i);
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", start);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e, Ring ring) {
  const auto names = variable_names(ring);
  std::string out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

MPoly parse_form(std::string_view text, Ring ring) { return Parser(text, ring).parse(); }

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rat magnitude = abs(c);
    const std::string mono = monomial_text(e, p.ring());
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

}  // namespace biforms
