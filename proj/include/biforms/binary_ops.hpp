#ifndef BIFORMS_BINARY_OPS_HPP
#define BIFORMS_BINARY_OPS_HPP

#include <vector>

#include "biforms/forms.hpp"

namespace biforms {

// Univariate helpers over Q. Polynomials are coefficient vectors in
// ascending powers with no trailing zeros; the zero polynomial is empty.
namespace upoly {

using Poly = std::vector<Rat>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly derivative(const Poly& p);
// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);
// Coefficients of the unique polynomial of degree <= n through the n + 1
// points (xs[i], ys[i]); the xs must be distinct.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace upoly

// Multiplicity of the root [1 : 0] (the power of Y dividing f).
int y_multiplicity(const BinaryForm& f);

// f(x, 1) as a univariate polynomial.
upoly::Poly dehomogenize(const BinaryForm& f);

// Greatest common divisor, normalized so its highest nonzero X-coefficient
// is 1. gcd(0, g) = g normalized; gcd(0, 0) is the zero form of degree 0.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

// f / g, which must divide exactly (std::domain_error otherwise).
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);

// No repeated projective root. Nonzero constants are squarefree; zero is not.
bool is_squarefree(const BinaryForm& f);

}  // namespace biforms

#endif  // BIFORMS_BINARY_OPS_HPP
