#include "biforms/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace biforms {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) return false;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  std::string num_str(num_text);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Int numerator(num_str, 10);
  if (slash == std::string_view::npos) return Rat(numerator);

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  Int denominator{std::string(den_text), 10};
  if (denominator == 0) throw std::domain_error("zero denominator in literal: " + std::string(text));
  Rat value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int falling_factorial(long n, long k) {
  Int result = 1;
  for (long i = 0; i < k; ++i) result *= (n - i);
  return result;
}

}  // namespace biforms
