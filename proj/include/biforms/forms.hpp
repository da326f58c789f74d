#ifndef BIFORMS_FORMS_HPP
#define BIFORMS_FORMS_HPP

#include <span>
#include <utility>
#include <vector>

#include "biforms/mpoly.hpp"

namespace biforms {

// Canonical monomial bases (descending lex order). These orderings fix the
// coordinates of every matrix and subspace built from forms.
//   binary_basis(d):  X^d, X^(d-1) Y, ..., Y^d
//   biform_basis(a,b): X1^a X2^b, X1^a X2^(b-1) Y2, ..., Y1^a Y2^b
//   ternary_basis(d): X^d, X^(d-1) Y, X^(d-1) Z, ..., Z^d
std::vector<Exponent> binary_basis(int d);
std::vector<Exponent> biform_basis(int a, int b);
std::vector<Exponent> ternary_basis(int d);

// Homogeneous polynomial of degree d in [X, Y]; an element of V_d.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, MPoly poly);

  // Parses text in the polynomial grammar over [X, Y]; the degree is
  // taken from the text (zero needs an explicit degree, see zero()).
  static BinaryForm parse(std::string_view text);
  static BinaryForm zero(int degree);
  static BinaryForm monomial(int x_exp, int y_exp, const Rat& c = 1);
  // Coefficients in binary_basis(degree) order.
  static BinaryForm from_coefficients(int degree, std::span<const Rat> coeffs);

  int degree() const { return degree_; }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // Plain coefficient of X^i Y^(d-i).
  Rat coefficient(int i) const;
  std::vector<Rat> coefficients() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = 0;
  MPoly poly_{Ring::Binary};
};

BinaryForm operator+(const BinaryForm& p, const BinaryForm& q);
BinaryForm operator-(const BinaryForm& p, const BinaryForm& q);
BinaryForm operator*(const Rat& c, const BinaryForm& p);
BinaryForm operator*(const BinaryForm& p, const BinaryForm& q);

// Bihomogeneous polynomial of bidegree (a, b) in [X1, Y1, X2, Y2]; an
// element of V_{a,b} = V_a (x) V_b.
class BiForm {
 public:
  BiForm() = default;
  BiForm(int a, int b, MPoly poly);

  // Bidegree is read off the text; an all-zero input needs zero().
  static BiForm parse(std::string_view text);
  static BiForm zero(int a, int b);
  static BiForm from_coefficients(int a, int b, std::span<const Rat> coeffs);

  // P1(X1, Y1) * P2(X2, Y2).
  static BiForm tensor(const BinaryForm& first, const BinaryForm& second);

  int a() const { return a_; }
  int b() const { return b_; }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // Coefficients in biform_basis(a, b) order.
  std::vector<Rat> coefficients() const;

  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  int a_ = 0;
  int b_ = 0;
  MPoly poly_{Ring::Bi};
};

BiForm operator+(const BiForm& p, const BiForm& q);
BiForm operator-(const BiForm& p, const BiForm& q);
BiForm operator*(const Rat& c, const BiForm& p);
BiForm operator*(const BiForm& p, const BiForm& q);

// A (0, n) biform as a binary form in [X, Y] (X2 -> X, Y2 -> Y) and back.
BinaryForm second_factor(const BiForm& f);
BiForm from_second_factor(const BinaryForm& p);
// An (n, 0) biform as a binary form (X1 -> X, Y1 -> Y) and back.
BinaryForm first_factor(const BiForm& f);
BiForm from_first_factor(const BinaryForm& p);

// Writes a (1, b) biform as X1 * P + Y1 * Q with P, Q binary forms of
// degree b (in [X, Y] standing for [X2, Y2]).
std::pair<BinaryForm, BinaryForm> split_linear(const BiForm& f);

// Homogeneous polynomial of degree d in [X, Y, Z].
class TernaryForm {
 public:
  TernaryForm() = default;
  TernaryForm(int degree, MPoly poly);

  static TernaryForm parse(std::string_view text);
  static TernaryForm zero(int degree);
  static TernaryForm from_coefficients(int degree, std::span<const Rat> coeffs);

  int degree() const { return degree_; }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  std::vector<Rat> coefficients() const;

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  int degree_ = 0;
  MPoly poly_{Ring::Ternary};
};

// Binomial-scaled coordinates: f = sum_i C(d, i) alpha_i X^i Y^(d-i).
// Returned in the order alpha_0, ..., alpha_d.
std::vector<Rat> binomial_coeffs(const BinaryForm& f);
BinaryForm from_binomial_coeffs(int degree, std::span<const Rat> alphas);

}  // namespace biforms

#endif  // BIFORMS_FORMS_HPP
