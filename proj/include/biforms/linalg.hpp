#ifndef BIFORMS_LINALG_HPP
#define BIFORMS_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "biforms/rat.hpp"

namespace biforms {

// Dense row-major matrix over Q.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols = 0);
  static QMat from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rat> row(std::size_t i) const;
  std::vector<Rat> column(std::size_t j) const;
  QMat transpose() const;
  bool is_zero() const;

  friend bool operator==(const QMat&, const QMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMat operator*(const QMat& lhs, const QMat& rhs);
std::vector<Rat> operator*(const QMat& m, std::span<const Rat> v);

struct Echelon {
  QMat reduced;                     // reduced row-echelon form, same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

// Exact RREF. Rows are cleared to integers, eliminated fraction-free
// (Bareiss) and then normalized by back-substitution.
Echelon rref(const QMat& m);
std::size_t rank(const QMat& m);
Rat determinant(const QMat& m);

// A linear subspace of Q^n held as the nonzero rows of its canonical RREF
// basis, so equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}

  // Span of the given vectors (each of length ambient_dim).
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& vectors);
  static Subspace row_space(const QMat& m);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  std::vector<Rat> basis_vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Throws std::invalid_argument on an ambient dimension mismatch.
  bool contains(std::span<const Rat> v) const;
  // Coordinates of v in the canonical basis; v must lie in the subspace.
  std::vector<Rat> coordinates(std::span<const Rat> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const QMat& m);
Subspace column_space(const QMat& m);

bool subspace_contains(const Subspace& w, std::span<const Rat> v);
// Throws std::invalid_argument on an ambient dimension mismatch.
bool subspace_equal(const Subspace& w1, const Subspace& w2);
Subspace intersect(const Subspace& w1, const Subspace& w2);
Subspace sum(const Subspace& w1, const Subspace& w2);

// Maximal minors of a rows x cols matrix with rows >= cols: one per
// cols-element subset of row indices, subsets in lexicographic order.
// This is the Plücker vector of the column span.
std::vector<Rat> top_minors(const QMat& m);

}  // namespace biforms

#endif  // BIFORMS_LINALG_HPP
