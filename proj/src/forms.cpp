#include "biforms/forms.hpp"

#include <stdexcept>
#include <string>

#include "biforms/parse.hpp"

namespace biforms {

namespace {

Exponent exp2(int x, int y) { return {static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y), 0, 0}; }

Exponent exp4(int x1, int y1, int x2, int y2) {
  return {static_cast<std::uint16_t>(x1), static_cast<std::uint16_t>(y1), static_cast<std::uint16_t>(x2),
          static_cast<std::uint16_t>(y2)};
}

void require_nonnegative(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
}

std::vector<Rat> coefficients_in(const MPoly& poly, const std::vector<Exponent>& basis) {
  std::vector<Rat> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(poly.coefficient(e));
  return out;
}

MPoly poly_from(Ring ring, const std::vector<Exponent>& basis, std::span<const Rat> coeffs) {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
  MPoly::TermMap terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!is_zero(coeffs[i])) terms.emplace(basis[i], coeffs[i]);
  }
  return MPoly(ring, std::move(terms));
}

// Leading term's block degrees; the zero polynomial gets 0.
int block_degree(const MPoly& p, std::size_t first, std::size_t count) {
  if (p.is_zero()) return 0;
  const auto& e = p.terms().begin()->first;
  int d = 0;
  for (std::size_t v = first; v < first + count; ++v) d += e[v];
  return d;
}

}  // namespace

std::vector<Exponent> binary_basis(int d) {
  require_nonnegative(d);
  std::vector<Exponent> basis;
  for (int i = d; i >= 0; --i) basis.push_back(exp2(i, d - i));
  return basis;
}

std::vector<Exponent> biform_basis(int a, int b) {
  require_nonnegative(a);
  require_nonnegative(b);
  std::vector<Exponent> basis;
  for (int i = a; i >= 0; --i) {
    for (int j = b; j >= 0; --j) basis.push_back(exp4(i, a - i, j, b - j));
  }
  return basis;
}

std::vector<Exponent> ternary_basis(int d) {
  require_nonnegative(d);
  std::vector<Exponent> basis;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) {
      basis.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                       static_cast<std::uint16_t>(d - i - j), 0});
    }
  }
  return basis;
}

// ---- BinaryForm ----

BinaryForm::BinaryForm(int degree, MPoly poly) : degree_(degree), poly_(std::move(poly)) {
  require_nonnegative(degree_);
  if (poly_.ring() != Ring::Binary) throw std::invalid_argument("binary form needs ring [X, Y]");
  if (!poly_.is_homogeneous_in(0, 2, degree_)) {
    throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(degree_));
  }
}

BinaryForm BinaryForm::parse(std::string_view text) {
  MPoly p = parse_form(text, Ring::Binary);
  const int d = block_degree(p, 0, 2);
  return BinaryForm(d, std::move(p));
}

BinaryForm BinaryForm::zero(int degree) { return BinaryForm(degree, MPoly(Ring::Binary)); }

BinaryForm BinaryForm::monomial(int x_exp, int y_exp, const Rat& c) {
  return BinaryForm(x_exp + y_exp, MPoly::monomial(Ring::Binary, exp2(x_exp, y_exp), c));
}

BinaryForm BinaryForm::from_coefficients(int degree, std::span<const Rat> coeffs) {
  return BinaryForm(degree, poly_from(Ring::Binary, binary_basis(degree), coeffs));
}

Rat BinaryForm::coefficient(int i) const {
  if (i < 0 || i > degree_) return 0;
  return poly_.coefficient(exp2(i, degree_ - i));
}

std::vector<Rat> BinaryForm::coefficients() const { return coefficients_in(poly_, binary_basis(degree_)); }

BinaryForm operator+(const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("adding binary forms of different degree");
  return BinaryForm(p.degree(), p.poly() + q.poly());
}

BinaryForm operator-(const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("subtracting binary forms of different degree");
  return BinaryForm(p.degree(), p.poly() - q.poly());
}

BinaryForm operator*(const Rat& c, const BinaryForm& p) { return BinaryForm(p.degree(), c * p.poly()); }

BinaryForm operator*(const BinaryForm& p, const BinaryForm& q) {
  return BinaryForm(p.degree() + q.degree(), multiply(p.poly(), q.poly()));
}

// ---- BiForm ----

BiForm::BiForm(int a, int b, MPoly poly) : a_(a), b_(b), poly_(std::move(poly)) {
  require_nonnegative(a_);
  require_nonnegative(b_);
  if (poly_.ring() != Ring::Bi) throw std::invalid_argument("biform needs ring [X1, Y1, X2, Y2]");
  if (!poly_.is_homogeneous_in(0, 2, a_) || !poly_.is_homogeneous_in(2, 2, b_)) {
    throw std::invalid_argument("polynomial is not bihomogeneous of bidegree (" + std::to_string(a_) + "," +
                                std::to_string(b_) + ")");
  }
}

BiForm BiForm::parse(std::string_view text) {
  MPoly p = parse_form(text, Ring::Bi);
  const int a = block_degree(p, 0, 2);
  const int b = block_degree(p, 2, 2);
  return BiForm(a, b, std::move(p));
}

BiForm BiForm::zero(int a, int b) { return BiForm(a, b, MPoly(Ring::Bi)); }

BiForm BiForm::from_coefficients(int a, int b, std::span<const Rat> coeffs) {
  return BiForm(a, b, poly_from(Ring::Bi, biform_basis(a, b), coeffs));
}

BiForm BiForm::tensor(const BinaryForm& first, const BinaryForm& second) {
  return from_first_factor(first) * from_second_factor(second);
}

std::vector<Rat> BiForm::coefficients() const { return coefficients_in(poly_, biform_basis(a_, b_)); }

BiForm operator+(const BiForm& p, const BiForm& q) {
  if (p.a() != q.a() || p.b() != q.b()) throw std::invalid_argument("adding biforms of different bidegree");
  return BiForm(p.a(), p.b(), p.poly() + q.poly());
}

BiForm operator-(const BiForm& p, const BiForm& q) {
  if (p.a() != q.a() || p.b() != q.b()) throw std::invalid_argument("subtracting biforms of different bidegree");
  return BiForm(p.a(), p.b(), p.poly() - q.poly());
}

BiForm operator*(const Rat& c, const BiForm& p) { return BiForm(p.a(), p.b(), c * p.poly()); }

BiForm operator*(const BiForm& p, const BiForm& q) {
  return BiForm(p.a() + q.a(), p.b() + q.b(), multiply(p.poly(), q.poly()));
}

BinaryForm second_factor(const BiForm& f) {
  if (f.a() != 0) throw std::invalid_argument("biform has positive degree in (X1, Y1)");
  MPoly::TermMap terms;
  for (const auto& [e, c] : f.poly().terms()) terms.emplace(exp2(e[2], e[3]), c);
  return BinaryForm(f.b(), MPoly(Ring::Binary, std::move(terms)));
}

BiForm from_second_factor(const BinaryForm& p) {
  MPoly::TermMap terms;
  for (const auto& [e, c] : p.poly().terms()) terms.emplace(exp4(0, 0, e[0], e[1]), c);
  return BiForm(0, p.degree(), MPoly(Ring::Bi, std::move(terms)));
}

BinaryForm first_factor(const BiForm& f) {
  if (f.b() != 0) throw std::invalid_argument("biform has positive degree in (X2, Y2)");
  MPoly::TermMap terms;
  for (const auto& [e, c] : f.poly().terms()) terms.emplace(exp2(e[0], e[1]), c);
  return BinaryForm(f.a(), MPoly(Ring::Binary, std::move(terms)));
}

BiForm from_first_factor(const BinaryForm& p) {
  MPoly::TermMap terms;
  for (const auto& [e, c] : p.poly().terms()) terms.emplace(exp4(e[0], e[1], 0, 0), c);
  return BiForm(p.degree(), 0, MPoly(Ring::Bi, std::move(terms)));
}

std::pair<BinaryForm, BinaryForm> split_linear(const BiForm& f) {
  if (f.a() != 1) throw std::invalid_argument("expected a biform of bidegree (1, b)");
  MPoly::TermMap p_terms;
  MPoly::TermMap q_terms;
  for (const auto& [e, c] : f.poly().terms()) {
    (e[0] == 1 ? p_terms : q_terms).emplace(exp2(e[2], e[3]), c);
  }
  return {BinaryForm(f.b(), MPoly(Ring::Binary, std::move(p_terms))),
          BinaryForm(f.b(), MPoly(Ring::Binary, std::move(q_terms)))};
}

// ---- TernaryForm ----

TernaryForm::TernaryForm(int degree, MPoly poly) : degree_(degree), poly_(std::move(poly)) {
  require_nonnegative(degree_);
  if (poly_.ring() != Ring::Ternary) throw std::invalid_argument("ternary form needs ring [X, Y, Z]");
  if (!poly_.is_homogeneous_in(0, 3, degree_)) {
    throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(degree_));
  }
}

TernaryForm TernaryForm::parse(std::string_view text) {
  MPoly p = parse_form(text, Ring::Ternary);
  const int d = block_degree(p, 0, 3);
  return TernaryForm(d, std::move(p));
}

TernaryForm TernaryForm::zero(int degree) { return TernaryForm(degree, MPoly(Ring::Ternary)); }

TernaryForm TernaryForm::from_coefficients(int degree, std::span<const Rat> coeffs) {
  return TernaryForm(degree, poly_from(Ring::Ternary, ternary_basis(degree), coeffs));
}

std::vector<Rat> TernaryForm::coefficients() const { return coefficients_in(poly_, ternary_basis(degree_)); }

// ---- binomial coordinates ----

std::vector<Rat> binomial_coeffs(const BinaryForm& f) {
  const int d = f.degree();
  std::vector<Rat> alphas;
  alphas.reserve(d + 1);
  for (int i = 0; i <= d; ++i) alphas.push_back(f.coefficient(i) / Rat(binomial(d, i)));
  return alphas;
}

BinaryForm from_binomial_coeffs(int degree, std::span<const Rat> alphas) {
  if (alphas.size() != static_cast<std::size_t>(degree + 1)) {
    throw std::invalid_argument("expected degree + 1 binomial coordinates");
  }
  MPoly::TermMap terms;
  for (int i = 0; i <= degree; ++i) {
    const Rat c = alphas[i] * Rat(binomial(degree, i));
    if (!is_zero(c)) terms.emplace(exp2(i, degree - i), c);
  }
  return BinaryForm(degree, MPoly(Ring::Binary, std::move(terms)));
}

}  // namespace biforms
