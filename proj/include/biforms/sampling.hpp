#ifndef BIFORMS_SAMPLING_HPP
#define BIFORMS_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "biforms/actions.hpp"
#include "biforms/forms.hpp"
#include "biforms/linalg.hpp"

namespace biforms {

// Seeded generators for genericity sampling. Coefficients are integers in
// [-9, 9]; the same seed always reproduces the same sample.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  Rat coefficient() { return integer(-9, 9); }

  BinaryForm binary_form(int d);
  BiForm biform(int a, int b);
  TernaryForm ternary_form(int d);
  std::vector<Rat> vector(std::size_t n);
  // Span of k random vectors in Q^n; may come out smaller than k.
  Subspace subspace(std::size_t n, std::size_t k);

  // Product of elementary unipotent and diagonal factors; determinant 1.
  Mat2 sl2_element();
  GroupPair sl2_pair() { return {sl2_element(), sl2_element()}; }
  // Random invertible matrix with small integer entries.
  Mat2 gl2_element();
  // Random traceless matrix.
  Mat2 sl2_lie_element();

 private:
  std::mt19937_64 rng_;
};

}  // namespace biforms

#endif  // BIFORMS_SAMPLING_HPP
