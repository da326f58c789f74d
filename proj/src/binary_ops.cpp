#include "biforms/binary_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace biforms {

namespace upoly {

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = num;
  trim(rem);
  const int dd = degree(den);
  if (degree(rem) < dd) return {Poly{}, rem};
  Poly quot(rem.size() - den.size() + 1);
  const Rat& lead = den.back();
  for (int k = degree(rem) - dd; k >= 0; --k) {
    const Rat c = rem[k + dd] / lead;
    quot[k] = c;
    if (is_zero(c)) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p;
  Poly b = q;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation data size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rat> coef(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat dx = xs[i] - xs[i - level];
      if (is_zero(dx)) throw std::invalid_argument("interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
    }
  }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - xs[k]) + coef[k]
    Poly next(result.size() + 1);
    for (std::size_t i = 0; i < result.size(); ++i) {
      next[i + 1] += result[i];
      next[i] -= result[i] * xs[k];
    }
    next[0] += coef[k];
    result = std::move(next);
  }
  trim(result);
  return result;
}

}  // namespace upoly

int y_multiplicity(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("root multiplicity of the zero form");
  int top = f.degree();
  while (is_zero(f.coefficient(top))) --top;
  return f.degree() - top;
}

upoly::Poly dehomogenize(const BinaryForm& f) {
  upoly::Poly p;
  for (int i = 0; i <= f.degree(); ++i) p.push_back(f.coefficient(i));
  upoly::trim(p);
  return p;
}

namespace {

BinaryForm homogenize(const upoly::Poly& p, int degree) {
  if (upoly::degree(p) > degree) throw std::logic_error("homogenizing above the target degree");
  std::vector<Rat> coeffs(degree + 1);
  // binary_basis order runs X^d .. Y^d, i.e. descending powers of x.
  for (std::size_t i = 0; i < p.size(); ++i) coeffs[degree - i] = p[i];
  return BinaryForm::from_coefficients(degree, coeffs);
}

}  // namespace

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) return BinaryForm::zero(0);
  if (f.is_zero()) return gcd(g, g);
  if (g.is_zero()) return gcd(f, f);
  const int k = std::min(y_multiplicity(f), y_multiplicity(g));
  const upoly::Poly common = upoly::gcd(dehomogenize(f), dehomogenize(g));
  return homogenize(common, upoly::degree(common) + k);
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero form");
  if (g.degree() > f.degree()) throw std::domain_error("divisor has larger degree");
  if (f.is_zero()) return BinaryForm::zero(f.degree() - g.degree());
  if (y_multiplicity(g) > y_multiplicity(f)) throw std::domain_error("binary forms do not divide exactly");
  const auto [quot, rem] = upoly::divmod(dehomogenize(f), dehomogenize(g));
  if (!rem.empty()) throw std::domain_error("binary forms do not divide exactly");
  return homogenize(quot, f.degree() - g.degree());
}

bool is_squarefree(const BinaryForm& f) {
  if (f.is_zero()) return false;
  if (y_multiplicity(f) > 1) return false;
  const upoly::Poly p = dehomogenize(f);
  return upoly::degree(upoly::gcd(p, upoly::derivative(p))) == 0;
}

}  // namespace biforms
