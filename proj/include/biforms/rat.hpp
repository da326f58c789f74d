#ifndef BIFORMS_RAT_HPP
#define BIFORMS_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace biforms {

// Exact rational scalar. GMP keeps mpq_class canonical (reduced, positive
// denominator, 0 == 0/1) as long as every value enters through the helpers
// below or through arithmetic on canonical operands.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument
// on malformed text and std::domain_error on a zero denominator.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);

// n choose k as an exact integer; zero outside 0 <= k <= n.
Int binomial(long n, long k);

Int factorial(long n);

// n (n-1) ... (n-k+1); one for k == 0.
Int falling_factorial(long n, long k);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace biforms

#endif  // BIFORMS_RAT_HPP
