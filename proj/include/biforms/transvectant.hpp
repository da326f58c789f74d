#ifndef BIFORMS_TRANSVECTANT_HPP
#define BIFORMS_TRANSVECTANT_HPP

#include <vector>

#include "biforms/forms.hpp"
#include "biforms/linalg.hpp"

namespace biforms {

// r-th transvectant with the Cayley normalization
//   T^(r)(p, q) = sum_i (-1)^i C(r,i) d^r p/dX^(r-i)dY^i * d^r q/dX^i dY^(r-i)
// and no further scaling. Throws std::out_of_range unless r <= min(d, d').
BinaryForm transvectant(const BinaryForm& p, const BinaryForm& q, int r);

// d'! * q(-d/dY, d/dX) applied to p, for deg q <= deg p. Under the Cayley
// normalization this agrees with transvectant(p, q, deg q).
BinaryForm apolar_diffop(const BinaryForm& p, const BinaryForm& q);

// (r, s)-th transvectant of biforms: the Cayley sum taken in both variable
// pairs, so that on decomposables
//   T^(r,s)(P1 P2, P1' P2') = T^(r)(P1, P1') T^(s)(P2, P2').
BiForm bitransvectant(const BiForm& f, const BiForm& g, int r, int s);

// T^(1,s) for two (1, *) biforms via X1 P + Y1 Q:
//   T^(1,s)(X1 P + Y1 Q, X1 P' + Y1 Q') = T^(s)(P, Q') - T^(s)(Q, P').
// Returns a (0, b + b' - 2s) biform.
BiForm specialized_1s(const BiForm& f, const BiForm& g, int s);

enum class FixedSlot { First, Second };

// Matrix of the linear map G -> T^(r,s)(F, G) (or G -> T^(r,s)(G, F) for
// FixedSlot::Second) from V_{a',b'} to the target, in the canonical
// biform bases. Column j is the image of the j-th basis monomial.
QMat transvectant_matrix(const BiForm& f, int r, int s, int source_a, int source_b,
                         FixedSlot slot = FixedSlot::First);

// Degrees d + d' - 2r for r = 0..min(d, d').
std::vector<int> cg_components(int d, int d_prime);

}  // namespace biforms

#endif  // BIFORMS_TRANSVECTANT_HPP
