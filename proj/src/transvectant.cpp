#include "biforms/transvectant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace biforms {

namespace {

Exponent orders(int x1, int y1, int x2 = 0, int y2 = 0) {
  return {static_cast<std::uint16_t>(x1), static_cast<std::uint16_t>(y1), static_cast<std::uint16_t>(x2),
          static_cast<std::uint16_t>(y2)};
}

void check_index(int r, int d, int d_prime, const char* what) {
  if (r < 0 || r > std::min(d, d_prime)) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(r) + " out of range for degrees " +
                            std::to_string(d) + ", " + std::to_string(d_prime));
  }
}

}  // namespace

BinaryForm transvectant(const BinaryForm& p, const BinaryForm& q, int r) {
  check_index(r, p.degree(), q.degree(), "transvectant");
  MPoly sum(Ring::Binary);
  for (int i = 0; i <= r; ++i) {
    const MPoly dp = differentiate(p.poly(), orders(r - i, i));
    const MPoly dq = differentiate(q.poly(), orders(i, r - i));
    Rat c(binomial(r, i));
    if (i % 2) c = -c;
    sum += c * multiply(dp, dq);
  }
  return BinaryForm(p.degree() + q.degree() - 2 * r, std::move(sum));
}

BinaryForm apolar_diffop(const BinaryForm& p, const BinaryForm& q) {
  const int d = p.degree();
  const int dq = q.degree();
  if (dq > d) throw std::out_of_range("apolar_diffop needs deg q <= deg p");
  // X^i Y^(dq-i) in q becomes (-d/dY)^i (d/dX)^(dq-i).
  MPoly sum(Ring::Binary);
  for (int i = 0; i <= dq; ++i) {
    Rat c = q.coefficient(i);
    if (is_zero(c)) continue;
    if (i % 2) c = -c;
    sum += c * differentiate(p.poly(), orders(dq - i, i));
  }
  sum *= Rat(factorial(dq));
  return BinaryForm(d - dq, std::move(sum));
}

BiForm bitransvectant(const BiForm& f, const BiForm& g, int r, int s) {
  check_index(r, f.a(), g.a(), "bitransvectant first");
  check_index(s, f.b(), g.b(), "bitransvectant second");
  MPoly sum(Ring::Bi);
  if (f.is_zero() || g.is_zero()) return BiForm(f.a() + g.a() - 2 * r, f.b() + g.b() - 2 * s, std::move(sum));
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= s; ++j) {
      const MPoly df = differentiate(f.poly(), orders(r - i, i, s - j, j));
      if (df.is_zero()) continue;
      const MPoly dg = differentiate(g.poly(), orders(i, r - i, j, s - j));
      if (dg.is_zero()) continue;
      Rat c(binomial(r, i) * binomial(s, j));
      if ((i + j) % 2) c = -c;
      sum += c * multiply(df, dg);
    }
  }
  return BiForm(f.a() + g.a() - 2 * r, f.b() + g.b() - 2 * s, std::move(sum));
}

BiForm specialized_1s(const BiForm& f, const BiForm& g, int s) {
  if (f.a() != 1 || g.a() != 1) throw std::invalid_argument("specialized_1s needs operands of bidegree (1, *)");
  check_index(s, f.b(), g.b(), "specialized_1s");
  const auto [p, q] = split_linear(f);
  const auto [p_prime, q_prime] = split_linear(g);
  return from_second_factor(transvectant(p, q_prime, s) - transvectant(q, p_prime, s));
}

QMat transvectant_matrix(const BiForm& f, int r, int s, int source_a, int source_b, FixedSlot slot) {
  check_index(r, f.a(), source_a, "transvectant_matrix first");
  check_index(s, f.b(), source_b, "transvectant_matrix second");
  const int target_a = f.a() + source_a - 2 * r;
  const int target_b = f.b() + source_b - 2 * s;
  const auto source_basis = biform_basis(source_a, source_b);
  QMat m((target_a + 1) * (target_b + 1), source_basis.size());
  for (std::size_t j = 0; j < source_basis.size(); ++j) {
    const BiForm e(source_a, source_b, MPoly::monomial(Ring::Bi, source_basis[j]));
    const BiForm image = slot == FixedSlot::First ? bitransvectant(f, e, r, s) : bitransvectant(e, f, r, s);
    const auto column = image.coefficients();
    for (std::size_t i = 0; i < column.size(); ++i) m(i, j) = column[i];
  }
  return m;
}

std::vector<int> cg_components(int d, int d_prime) {
  if (d < 0 || d_prime < 0) throw std::invalid_argument("negative degree");
  std::vector<int> out;
  for (int r = 0; r <= std::min(d, d_prime); ++r) out.push_back(d + d_prime - 2 * r);
  return out;
}

}  // namespace biforms
