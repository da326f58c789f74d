#ifndef BIFORMS_ACTIONS_HPP
#define BIFORMS_ACTIONS_HPP

#include <array>
#include <optional>

#include "biforms/forms.hpp"
#include "biforms/linalg.hpp"

namespace biforms {

// 2x2 rational matrix [[a, b], [c, d]].
struct Mat2 {
  Rat a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 scalar(const Rat& s) { return {s, 0, 0, s}; }
  static Mat2 diagonal(const Rat& x, const Rat& y) { return {x, 0, 0, y}; }

  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }
  Mat2 inverse() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(const Rat& s, const Mat2& m);

// Element of GL2 x GL2. Both factors must be invertible.
class GroupPair {
 public:
  GroupPair() = default;
  GroupPair(Mat2 g1, Mat2 g2);

  const Mat2& first() const { return g1_; }
  const Mat2& second() const { return g2_; }
  bool is_sl() const { return g1_.det() == 1 && g2_.det() == 1; }

  friend GroupPair operator*(const GroupPair& lhs, const GroupPair& rhs) {
    return {lhs.g1_ * rhs.g1_, lhs.g2_ * rhs.g2_};
  }
  friend bool operator==(const GroupPair&, const GroupPair&) = default;

 private:
  Mat2 g1_, g2_;
};

// Invertible 3x3 matrix, row-major.
class G3Element {
 public:
  explicit G3Element(std::array<Rat, 9> entries);
  static G3Element identity();
  static G3Element diagonal(const Rat& x, const Rat& y, const Rat& z);
  // Matrix sending the k-th variable to the perm[k]-th one.
  static G3Element permutation(const std::array<int, 3>& perm);

  const Rat& operator()(int i, int j) const { return m_[i * 3 + j]; }

 private:
  std::array<Rat, 9> m_;
};

// Element of sl2 x sl2. Both factors must be traceless.
class LiePair {
 public:
  LiePair() : x1_(Mat2::scalar(0)), x2_(Mat2::scalar(0)) {}
  LiePair(Mat2 x1, Mat2 x2);

  const Mat2& first() const { return x1_; }
  const Mat2& second() const { return x2_; }

 private:
  Mat2 x1_, x2_;
};

LiePair bracket(const LiePair& x, const LiePair& y);

// Standard basis of sl2: h = diag(1,-1), e = [[0,1],[0,0]], f = [[0,0],[1,0]].
std::array<Mat2, 3> sl2_basis();

// Direct substitution on row vectors: (X, Y) -> (X, Y) g, i.e.
//   X -> a X + c Y,  Y -> b X + d Y   for g = [[a, b], [c, d]].
// This is a left action: act(g h, F) = act(g, act(h, F)).
BinaryForm act(const Mat2& g, const BinaryForm& f);
BiForm act(const GroupPair& g, const BiForm& f);
TernaryForm act_ternary(const G3Element& g, const TernaryForm& f);

// Matrix of act(g, .) on V_d in binary_basis(d) coordinates.
QMat action_matrix(const Mat2& g, int d);

// Derivative of act at the identity:
//   x . F = (a X + c Y) dF/dX + (b X + d Y) dF/dY  per variable pair.
BinaryForm lie_act(const Mat2& x, const BinaryForm& f);
BiForm lie_act(const LiePair& x, const BiForm& f);

// Matrix of lie_act(x, .) on V_d in binary_basis(d) coordinates.
QMat lie_matrix(const Mat2& x, int d);

// dim { x in sl2 x sl2 : x . F is a multiple of F }. Throws
// std::invalid_argument for F = 0.
int projective_stabilizer_dim(const BiForm& f);

// dim { x in sl2 : x . W is contained in W } for W a subspace of V_b given in
// binary_basis(b) coordinates. Requires 0 < dim W < b + 1.
int subspace_stabilizer_dim(const Subspace& w);

// Scalar by which g acts on the top exterior power of W, a g-invariant
// subspace of V_b (b = ambient_dim - 1). Throws when g W != W.
Rat det_scalar(const Mat2& g, const Subspace& w);

// One-parameter torus t -> substitution X1 -> t^w[0] X1, Y1 -> t^w[1] Y1,
// X2 -> t^w[2] X2, Y2 -> t^w[3] Y2, followed by multiplication by t^twist.
struct Torus {
  std::array<int, 4> exponents{};
  int twist = 0;
};

// Weight k with t . F = t^k F, or nullopt if F is not a torus eigenvector.
// The zero form has no weight.
std::optional<int> weight_of(const BiForm& f, const Torus& torus);

}  // namespace biforms

#endif  // BIFORMS_ACTIONS_HPP
