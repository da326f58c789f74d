#ifndef BIFORMS_CURVES_HPP
#define BIFORMS_CURVES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "biforms/forms.hpp"
#include "biforms/linalg.hpp"

namespace biforms {

// The map P^1 -> P V_b attached to a biform of bidegree (a, b): F is read
// as sum_j c_j(X1, Y1) X2^j Y2^(b-j). Components are binary forms of degree
// a, with [X, Y] standing for [X1, Y1]; components[j] multiplies X2^j Y2^(b-j).
struct CurveMap {
  int a = 0;
  int b = 0;
  std::vector<BinaryForm> components;
};

// Throws std::invalid_argument for the zero form.
CurveMap phi_components(const BiForm& f);
BiForm reassemble(const CurveMap& cm);

// (b+1) x (a+1) matrix of F as a map V_a^dual -> V_b: column k holds the
// V_b coordinates (binary_basis(b) order) of the k-th monomial of
// binary_basis(a) in (X1, Y1).
QMat coefficient_matrix(const BiForm& f);
QMat coefficient_matrix(const CurveMap& cm);

// Projective dimension of the linear span of the curve.
int span_dim(const CurveMap& cm);

// Image of F in V_b; dim = span_dim + 1. Throws for the zero form.
Subspace image_subspace(const BiForm& f);

// Degree of the curve measured by a seeded random hyperplane: the degree
// of (lambda . phi) / gcd(components). Throws if every component is zero.
int hyperplane_degree(const CurveMap& cm, std::uint64_t seed);

// Determinant of the homogeneous Sylvester matrix of p (degree d) and
// q (degree e), both taken at their declared degrees; Res(X, Y) = 1.
// Vanishes iff p and q share a root in P^1. Requires d, e >= 1.
Rat sylvester_resultant(const BinaryForm& p, const BinaryForm& q);

struct BranchForm {
  BinaryForm form;          // degree 2a(b-1) in [X, Y] = [X1, Y1]
  bool degenerate = false;  // resultant vanished identically
};

// Res_{(X2,Y2)}(dF/dX2, dF/dY2) as a binary form in (X1, Y1). Its roots are
// the branch points of the first projection of the curve F = 0.
BranchForm branch_form(const BiForm& f);

using ProjectivePoint = std::array<Rat, 3>;

// Forms of degree d (ternary_basis(d) coordinates) singular at every given
// point. Throws std::invalid_argument if two points coincide in P^2.
Subspace singular_system(std::span<const ProjectivePoint> points, int d);

Subspace span_of_forms(const std::vector<TernaryForm>& forms, int d);
std::vector<TernaryForm> forms_of(const Subspace& s, int d);

}  // namespace biforms

#endif  // BIFORMS_CURVES_HPP
