#include "biforms/curves.hpp"

#include <random>
#include <stdexcept>

#include "biforms/binary_ops.hpp"

namespace biforms {

namespace {

// Sylvester matrix of two forms at declared degrees d and e; coefficients
// are listed from X^d down to Y^d. The 0 x 0 case (d = e = 0) has det 1.
QMat sylvester_matrix(const BinaryForm& p, const BinaryForm& q) {
  const int d = p.degree();
  const int e = q.degree();
  const std::size_t n = static_cast<std::size_t>(d + e);
  QMat m(n, n);
  for (int row = 0; row < e; ++row) {
    for (int k = 0; k <= d; ++k) m(row, row + k) = p.coefficient(d - k);
  }
  for (int row = 0; row < d; ++row) {
    for (int k = 0; k <= e; ++k) m(e + row, row + k) = q.coefficient(e - k);
  }
  return m;
}

// F(t, 1, X2, Y2) as a binary form in [X, Y] = [X2, Y2].
BinaryForm fiber_at(const BiForm& f, const Rat& t) {
  std::vector<Rat> coeffs(f.b() + 1);
  const auto basis = binary_basis(f.b());
  for (const auto& [e, c] : f.poly().terms()) {
    Rat value = c;
    for (int k = 0; k < e[0]; ++k) value *= t;
    // index of X^e[2] Y^e[3] in binary_basis(b)
    coeffs[f.b() - e[2]] += value;
  }
  return BinaryForm::from_coefficients(f.b(), coeffs);
}

BinaryForm partial(const BinaryForm& f, std::size_t var) {
  if (f.degree() == 0) throw std::invalid_argument("partial of a degree-0 form");
  return BinaryForm(f.degree() - 1, differentiate(f.poly(), var));
}

}  // namespace

CurveMap phi_components(const BiForm& f) {
  if (f.is_zero()) throw std::invalid_argument("curve map of the zero form");
  CurveMap cm;
  cm.a = f.a();
  cm.b = f.b();
  std::vector<MPoly::TermMap> parts(f.b() + 1);
  for (const auto& [e, c] : f.poly().terms()) {
    parts[e[2]].emplace(Exponent{e[0], e[1], 0, 0}, c);
  }
  for (auto& terms : parts) cm.components.emplace_back(f.a(), MPoly(Ring::Binary, std::move(terms)));
  return cm;
}

BiForm reassemble(const CurveMap& cm) {
  if (cm.components.size() != static_cast<std::size_t>(cm.b + 1)) {
    throw std::invalid_argument("curve map needs b + 1 components");
  }
  MPoly::TermMap terms;
  for (int j = 0; j <= cm.b; ++j) {
    const auto& c = cm.components[j];
    if (c.degree() != cm.a) throw std::invalid_argument("curve map component has the wrong degree");
    for (const auto& [e, coeff] : c.poly().terms()) {
      terms.emplace(Exponent{e[0], e[1], static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(cm.b - j)}, coeff);
    }
  }
  return BiForm(cm.a, cm.b, MPoly(Ring::Bi, std::move(terms)));
}

QMat coefficient_matrix(const BiForm& f) {
  // biform_basis(a, b) is row-major over (X1 monomial, X2 monomial).
  const auto coeffs = f.coefficients();
  const std::size_t rows = f.b() + 1;
  const std::size_t cols = f.a() + 1;
  QMat m(rows, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t i = 0; i < rows; ++i) m(i, k) = coeffs[k * rows + i];
  }
  return m;
}

QMat coefficient_matrix(const CurveMap& cm) { return coefficient_matrix(reassemble(cm)); }

int span_dim(const CurveMap& cm) { return static_cast<int>(rank(coefficient_matrix(cm))) - 1; }

Subspace image_subspace(const BiForm& f) {
  if (f.is_zero()) throw std::invalid_argument("image of the zero form");
  return column_space(coefficient_matrix(f));
}

int hyperplane_degree(const CurveMap& cm, std::uint64_t seed) {
  BinaryForm common = BinaryForm::zero(0);
  for (const auto& c : cm.components) common = gcd(common, c);
  if (common.is_zero()) throw std::invalid_argument("hyperplane degree of an all-zero curve map");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (;;) {
    BinaryForm section = BinaryForm::zero(cm.a);
    for (const auto& c : cm.components) section = section + Rat(coeff(rng)) * c;
    if (section.is_zero()) continue;
    return divide_exact(section, common).degree();
  }
}

Rat sylvester_resultant(const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() < 1 || q.degree() < 1) throw std::invalid_argument("resultant needs degrees >= 1");
  return determinant(sylvester_matrix(p, q));
}

BranchForm branch_form(const BiForm& f) {
  if (f.a() < 1 || f.b() < 1) throw std::invalid_argument("branch form needs a, b >= 1");
  const int degree = 2 * f.a() * (f.b() - 1);
  // The resultant is homogeneous of this degree in (X1, Y1); sample it on
  // the affine chart Y1 = 1 and interpolate.
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (int t = 0; t <= degree; ++t) {
    const BinaryForm fiber = fiber_at(f, t);
    xs.emplace_back(t);
    ys.push_back(determinant(sylvester_matrix(partial(fiber, 0), partial(fiber, 1))));
  }
  const auto poly = upoly::interpolate(xs, ys);
  std::vector<Rat> coeffs(degree + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) coeffs[degree - i] = poly[i];
  BranchForm out{BinaryForm::from_coefficients(degree, coeffs), false};
  out.degenerate = out.form.is_zero();
  return out;
}

Subspace singular_system(std::span<const ProjectivePoint> points, int d) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2])) throw std::invalid_argument("zero vector is not a point");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = points[j];
      const bool proportional =
          p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1];
      if (proportional) throw std::invalid_argument("singular_system points must be distinct");
    }
  }
  const auto basis = ternary_basis(d);
  std::vector<std::vector<Rat>> rows;
  for (const auto& p : points) {
    for (int order = -1; order < 3; ++order) {
      std::vector<Rat> row;
      row.reserve(basis.size());
      for (const auto& e : basis) {
        const MPoly mono = MPoly::monomial(Ring::Ternary, e);
        const MPoly condition = order < 0 ? mono : differentiate(mono, static_cast<std::size_t>(order));
        row.push_back(evaluate(condition, p));
      }
      rows.push_back(std::move(row));
    }
  }
  return kernel_basis(QMat::from_rows(rows, basis.size()));
}

Subspace span_of_forms(const std::vector<TernaryForm>& forms, int d) {
  std::vector<std::vector<Rat>> vectors;
  for (const auto& f : forms) {
    if (f.degree() != d) throw std::invalid_argument("form of the wrong degree");
    vectors.push_back(f.coefficients());
  }
  return Subspace::span(ternary_basis(d).size(), vectors);
}

std::vector<TernaryForm> forms_of(const Subspace& s, int d) {
  std::vector<TernaryForm> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const auto v = s.basis_vector(k);
    out.push_back(TernaryForm::from_coefficients(d, v));
  }
  return out;
}

}  // namespace biforms
