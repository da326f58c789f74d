#include "biforms/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace biforms {

namespace {

using IntRows = std::vector<std::vector<Int>>;

// Scales each row by the lcm of its denominators. Row scaling preserves the
// row space, which is all the callers need (determinant() undoes it).
IntRows clear_denominators(const QMat& m, Int* scale = nullptr) {
  IntRows out(m.rows(), std::vector<Int>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    if (scale) *scale *= lcm;
  }
  return out;
}

struct FractionFree {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int swaps = 0;
};

// Bareiss forward elimination. After step k every entry below the pivot
// rows is a (k+1)-minor of the input, so the division by the previous
// pivot is exact.
FractionFree bareiss_forward(IntRows a, std::size_t cols) {
  FractionFree out;
  const std::size_t nrows = a.size();
  Int prev = 1;
  std::size_t r = 0;
  Int t;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++out.swaps;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j];
        t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

}  // namespace

// ---- QMat ----

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rat> QMat::row(std::size_t i) const {
  return std::vector<Rat>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Rat> QMat::column(std::size_t j) const {
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool QMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

QMat operator*(const QMat& lhs, const QMat& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix shape mismatch");
  QMat out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (sgn(lhs(i, k)) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  }
  return out;
}

std::vector<Rat> operator*(const QMat& m, std::span<const Rat> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rat> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

// ---- elimination ----

Echelon rref(const QMat& m) {
  FractionFree ff = bareiss_forward(clear_denominators(m), m.cols());
  Echelon out;
  out.rank = ff.pivots.size();
  out.pivots = ff.pivots;
  out.reduced = QMat(m.rows(), m.cols());
  QMat& r = out.reduced;
  for (std::size_t k = 0; k < out.rank; ++k) {
    const Int& pivot = ff.rows[k][out.pivots[k]];
    for (std::size_t j = out.pivots[k]; j < m.cols(); ++j) {
      r(k, j) = Rat(ff.rows[k][j], pivot);
      r(k, j).canonicalize();
    }
  }
  for (std::size_t k = out.rank; k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rat factor = r(i, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) r(i, j) -= factor * r(k, j);
    }
  }
  return out;
}

std::size_t rank(const QMat& m) { return bareiss_forward(clear_denominators(m), m.cols()).pivots.size(); }

Rat determinant(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Int scale;
  FractionFree ff = bareiss_forward(clear_denominators(m, &scale), m.cols());
  if (ff.pivots.size() < m.rows()) return 0;
  Rat det(ff.rows.back().back(), scale);
  det.canonicalize();
  return ff.swaps % 2 ? Rat(-det) : det;
}

// ---- Subspace ----

Subspace Subspace::row_space(const QMat& m) {
  Echelon e = rref(m);
  Subspace s(m.cols());
  s.basis_ = QMat(e.rank, m.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = e.reduced(i, j);
  }
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& vectors) {
  return row_space(QMat::from_rows(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(QMat::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Rat> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Rat> residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    const Rat factor = residual[pivots_[k]];
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= factor * basis_(k, j);
  }
  return std::all_of(residual.begin(), residual.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::vector<Rat> Subspace::coordinates(std::span<const Rat> v) const {
  if (!contains(v)) throw std::invalid_argument("vector does not lie in the subspace");
  std::vector<Rat> coords(dim());
  for (std::size_t k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
  return coords;
}

Subspace kernel_basis(const QMat& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.rank; ++k) v[e.pivots[k]] = -e.reduced(k, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace column_space(const QMat& m) { return Subspace::row_space(m.transpose()); }

bool subspace_contains(const Subspace& w, std::span<const Rat> v) { return w.contains(v); }

bool subspace_equal(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  return w1 == w2;
}

Subspace sum(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<std::vector<Rat>> vectors;
  for (std::size_t k = 0; k < w1.dim(); ++k) vectors.push_back(w1.basis_vector(k));
  for (std::size_t k = 0; k < w2.dim(); ++k) vectors.push_back(w2.basis_vector(k));
  return Subspace::span(w1.ambient_dim(), vectors);
}

Subspace intersect(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  // W1 ∩ W2 is cut out by the union of both annihilators.
  const Subspace ann1 = kernel_basis(w1.basis());
  const Subspace ann2 = kernel_basis(w2.basis());
  return kernel_basis(sum(ann1, ann2).basis());
}

std::vector<Rat> top_minors(const QMat& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  if (k > n) throw std::invalid_argument("top_minors needs rows >= cols");
  std::vector<Rat> minors;
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  QMat sub(k, k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(subset[i], j);
    }
    minors.push_back(determinant(sub));
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return minors;
}

}  // namespace biforms
