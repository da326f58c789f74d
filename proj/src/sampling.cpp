#include "biforms/sampling.hpp"

namespace biforms {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

BinaryForm Sampler::binary_form(int d) { return BinaryForm::from_coefficients(d, vector(d + 1)); }

BiForm Sampler::biform(int a, int b) {
  return BiForm::from_coefficients(a, b, vector(static_cast<std::size_t>((a + 1) * (b + 1))));
}

TernaryForm Sampler::ternary_form(int d) {
  return TernaryForm::from_coefficients(d, vector(static_cast<std::size_t>((d + 1) * (d + 2) / 2)));
}

std::vector<Rat> Sampler::vector(std::size_t n) {
  std::vector<Rat> v(n);
  for (auto& x : v) x = coefficient();
  return v;
}

Subspace Sampler::subspace(std::size_t n, std::size_t k) {
  std::vector<std::vector<Rat>> vectors;
  for (std::size_t i = 0; i < k; ++i) vectors.push_back(vector(n));
  return Subspace::span(n, vectors);
}

Mat2 Sampler::sl2_element() {
  const Mat2 upper{1, integer(-4, 4), 0, 1};
  const Mat2 lower{1, 0, integer(-4, 4), 1};
  int k = integer(1, 3);
  if (integer(0, 1)) k = -k;
  const Mat2 torus = Mat2::diagonal(k, Rat(1) / k);
  const int num = integer(-5, 5);
  const int den = integer(1, 3);
  const Mat2 upper2{1, Rat(num) / den, 0, 1};
  return upper * lower * torus * upper2;
}

Mat2 Sampler::gl2_element() {
  for (;;) {
    Mat2 g{coefficient(), coefficient(), coefficient(), coefficient()};
    if (!is_zero(g.det())) return g;
  }
}

Mat2 Sampler::sl2_lie_element() {
  const Rat h = coefficient();
  return {h, coefficient(), coefficient(), -h};
}

}  // namespace biforms
