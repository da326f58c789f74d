#include "biforms/actions.hpp"

#include <algorithm>
#include <stdexcept>

namespace biforms {

namespace {

std::vector<MPoly> powers_of(const MPoly& base, int max_power) {
  std::vector<MPoly> out;
  out.reserve(max_power + 1);
  out.push_back(MPoly::constant(base.ring(), 1));
  for (int k = 1; k <= max_power; ++k) out.push_back(multiply(out.back(), base));
  return out;
}

// Images of the two variables of a pair starting at `first` under (X, Y) g.
std::pair<MPoly, MPoly> substituted_pair(Ring ring, std::size_t first, const Mat2& g) {
  const MPoly x = MPoly::variable(ring, first);
  const MPoly y = MPoly::variable(ring, first + 1);
  return {g.a * x + g.c * y, g.b * x + g.d * y};
}

int max_exponent(const MPoly& p, std::size_t var) {
  int m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max<int>(m, e[var]);
  return m;
}

MPoly substitute(const MPoly& p, const std::vector<std::vector<MPoly>>& powers) {
  MPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(p.ring(), c);
    for (std::size_t v = 0; v < powers.size(); ++v) {
      if (e[v] > 0) term = multiply(term, powers[v][e[v]]);
    }
    out += term;
  }
  return out;
}

// x . p for one variable pair, as a derivation.
MPoly derive_pair(const MPoly& p, std::size_t first, const Mat2& x) {
  const MPoly var_x = MPoly::variable(p.ring(), first);
  const MPoly var_y = MPoly::variable(p.ring(), first + 1);
  const MPoly dx = differentiate(p, first);
  const MPoly dy = differentiate(p, first + 1);
  return multiply(x.a * var_x + x.c * var_y, dx) + multiply(x.b * var_x + x.d * var_y, dy);
}

std::vector<std::vector<Rat>> basis_vectors(const Subspace& w) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t k = 0; k < w.dim(); ++k) out.push_back(w.basis_vector(k));
  return out;
}

}  // namespace

// ---- Mat2 ----

Mat2 Mat2::inverse() const {
  const Rat det_value = det();
  if (is_zero(det_value)) throw std::domain_error("singular 2x2 matrix");
  return {d / det_value, -b / det_value, -c / det_value, a / det_value};
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2 operator+(const Mat2& l, const Mat2& r) { return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d}; }
Mat2 operator-(const Mat2& l, const Mat2& r) { return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d}; }
Mat2 operator*(const Rat& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

// ---- group elements ----

GroupPair::GroupPair(Mat2 g1, Mat2 g2) : g1_(std::move(g1)), g2_(std::move(g2)) {
  if (is_zero(g1_.det()) || is_zero(g2_.det())) throw std::domain_error("group pair has a singular factor");
}

G3Element::G3Element(std::array<Rat, 9> entries) : m_(std::move(entries)) {
  const auto& m = m_;
  const Rat det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                  m[2] * (m[3] * m[7] - m[4] * m[6]);
  if (is_zero(det)) throw std::domain_error("singular 3x3 matrix");
}

G3Element G3Element::identity() { return diagonal(1, 1, 1); }

G3Element G3Element::diagonal(const Rat& x, const Rat& y, const Rat& z) {
  return G3Element({x, 0, 0, 0, y, 0, 0, 0, z});
}

G3Element G3Element::permutation(const std::array<int, 3>& perm) {
  std::array<Rat, 9> m{};
  for (int k = 0; k < 3; ++k) m[perm[k] * 3 + k] = 1;
  return G3Element(m);
}

LiePair::LiePair(Mat2 x1, Mat2 x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
  if (!is_zero(x1_.trace()) || !is_zero(x2_.trace())) throw std::invalid_argument("Lie pair is not traceless");
}

LiePair bracket(const LiePair& x, const LiePair& y) {
  return {x.first() * y.first() - y.first() * x.first(), x.second() * y.second() - y.second() * x.second()};
}

std::array<Mat2, 3> sl2_basis() {
  return {Mat2{1, 0, 0, -1}, Mat2{0, 1, 0, 0}, Mat2{0, 0, 1, 0}};
}

// ---- group actions ----

BinaryForm act(const Mat2& g, const BinaryForm& f) {
  if (is_zero(g.det())) throw std::domain_error("singular matrix");
  const auto [lx, ly] = substituted_pair(Ring::Binary, 0, g);
  const std::vector<std::vector<MPoly>> powers{powers_of(lx, f.degree()), powers_of(ly, f.degree())};
  return BinaryForm(f.degree(), substitute(f.poly(), powers));
}

BiForm act(const GroupPair& g, const BiForm& f) {
  const auto [x1, y1] = substituted_pair(Ring::Bi, 0, g.first());
  const auto [x2, y2] = substituted_pair(Ring::Bi, 2, g.second());
  const std::vector<std::vector<MPoly>> powers{powers_of(x1, f.a()), powers_of(y1, f.a()), powers_of(x2, f.b()),
                                               powers_of(y2, f.b())};
  return BiForm(f.a(), f.b(), substitute(f.poly(), powers));
}

TernaryForm act_ternary(const G3Element& g, const TernaryForm& f) {
  std::vector<std::vector<MPoly>> powers;
  for (int k = 0; k < 3; ++k) {
    MPoly image(Ring::Ternary);
    for (int i = 0; i < 3; ++i) image += g(i, k) * MPoly::variable(Ring::Ternary, i);
    powers.push_back(powers_of(image, max_exponent(f.poly(), k)));
  }
  return TernaryForm(f.degree(), substitute(f.poly(), powers));
}

QMat action_matrix(const Mat2& g, int d) {
  const auto basis = binary_basis(d);
  QMat m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto image = act(g, BinaryForm(d, MPoly::monomial(Ring::Binary, basis[j]))).coefficients();
    for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
  }
  return m;
}

// ---- Lie algebra ----

BinaryForm lie_act(const Mat2& x, const BinaryForm& f) {
  if (!is_zero(x.trace())) throw std::invalid_argument("Lie algebra element is not traceless");
  return BinaryForm(f.degree(), derive_pair(f.poly(), 0, x));
}

BiForm lie_act(const LiePair& x, const BiForm& f) {
  return BiForm(f.a(), f.b(), derive_pair(f.poly(), 0, x.first()) + derive_pair(f.poly(), 2, x.second()));
}

QMat lie_matrix(const Mat2& x, int d) {
  const auto basis = binary_basis(d);
  QMat m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto image = lie_act(x, BinaryForm(d, MPoly::monomial(Ring::Binary, basis[j]))).coefficients();
    for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
  }
  return m;
}

int projective_stabilizer_dim(const BiForm& f) {
  if (f.is_zero()) throw std::invalid_argument("projective stabilizer of the zero form");
  // Unknowns (t_1..t_6, c): sum_k t_k x_k . F - c F = 0.
  std::vector<std::vector<Rat>> columns;
  const Mat2 zero = Mat2::scalar(0);
  for (const Mat2& x : sl2_basis()) {
    columns.push_back(lie_act(LiePair(x, zero), f).coefficients());
    columns.push_back(lie_act(LiePair(zero, x), f).coefficients());
  }
  auto minus_f = f.coefficients();
  for (auto& v : minus_f) v = -v;
  columns.push_back(std::move(minus_f));
  const QMat system = QMat::from_columns(columns);
  return static_cast<int>(kernel_basis(system).dim());
}

int subspace_stabilizer_dim(const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  if (w.dim() == 0 || w.dim() >= n) throw std::invalid_argument("stabilizer needs a proper nonzero subspace");
  const int b = static_cast<int>(n) - 1;
  // Rows of the annihilator cut out W; x . w_j must satisfy all of them.
  const Subspace annihilator = kernel_basis(w.basis());
  const auto sl2 = sl2_basis();
  std::vector<QMat> lie(sl2.size());
  for (std::size_t k = 0; k < sl2.size(); ++k) lie[k] = lie_matrix(sl2[k], b);

  std::vector<std::vector<Rat>> equations;
  for (std::size_t j = 0; j < w.dim(); ++j) {
    const auto wj = w.basis_vector(j);
    std::vector<std::vector<Rat>> images;
    for (const auto& m : lie) images.push_back(m * std::span<const Rat>(wj));
    for (std::size_t u = 0; u < annihilator.dim(); ++u) {
      const auto functional = annihilator.basis_vector(u);
      std::vector<Rat> row(sl2.size());
      for (std::size_t k = 0; k < sl2.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) row[k] += functional[i] * images[k][i];
      }
      equations.push_back(std::move(row));
    }
  }
  const QMat system = QMat::from_rows(equations, sl2.size());
  return static_cast<int>(sl2.size() - rank(system));
}

Rat det_scalar(const Mat2& g, const Subspace& w) {
  const int b = static_cast<int>(w.ambient_dim()) - 1;
  const QMat m = action_matrix(g, b);
  const auto basis = basis_vectors(w);
  std::vector<std::vector<Rat>> coordinate_columns;
  for (const auto& v : basis) {
    const auto image = m * std::span<const Rat>(v);
    if (!w.contains(image)) throw std::invalid_argument("subspace is not invariant under g");
    coordinate_columns.push_back(w.coordinates(image));
  }
  return determinant(QMat::from_columns(coordinate_columns, w.dim()));
}

std::optional<int> weight_of(const BiForm& f, const Torus& torus) {
  std::optional<int> weight;
  for (const auto& [e, c] : f.poly().terms()) {
    int k = torus.twist;
    for (std::size_t v = 0; v < 4; ++v) k += torus.exponents[v] * e[v];
    if (weight && *weight != k) return std::nullopt;
    weight = k;
  }
  return weight;
}

}  // namespace biforms
