#ifndef LIEGEO_LINALG_HPP
#define LIEGEO_LINALG_HPP

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "liegeo/scalar.hpp"

namespace liegeo {

template <class S>
using Vector = std::vector<S>;

template <class S>
Vector<S> zero_vector(int dim) {
  return Vector<S>(static_cast<std::size_t>(dim), S(0));
}

template <class S>
Vector<S> basis_vector(int dim, int index) {
  Vector<S> v = zero_vector<S>(dim);
  v[static_cast<std::size_t>(index)] = S(1);
  return v;
}

template <class S>
bool is_zero_vector(const Vector<S>& v, double eps = kDefaultEpsilon) {
  for (const S& x : v)
    if (!scalar_traits<S>::is_zero(x, eps)) return false;
  return true;
}

template <class S>
Vector<S> add(const Vector<S>& u, const Vector<S>& v) {
  Vector<S> w(u);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
  return w;
}

template <class S>
Vector<S> sub(const Vector<S>& u, const Vector<S>& v) {
  Vector<S> w(u);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
  return w;
}

template <class S>
Vector<S> scale(const S& a, const Vector<S>& v) {
  Vector<S> w(v);
  for (S& x : w) x *= a;
  return w;
}

/// Dense row-major matrix, small dimensions only (dim <= 8 in practice).
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              S(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const S& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (scalar_traits<S>::is_zero(aik, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class S>
Vector<S> mat_vec(const Matrix<S>& a, const Vector<S>& v) {
  Vector<S> w = zero_vector<S>(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) w[i] += a(i, j) * v[j];
  return w;
}

namespace detail {

// Pivot row choice: first nonzero below `row` in exact mode, largest
// magnitude in float mode. Returns -1 if the column is (numerically) zero.
template <class S>
int pick_pivot(const Matrix<S>& m, int row, int col, double eps) {
  if constexpr (scalar_traits<S>::exact) {
    for (int r = row; r < m.rows(); ++r)
      if (!scalar_traits<S>::is_zero(m(r, col), eps)) return r;
    return -1;
  } else {
    int best = -1;
    double best_mag = eps;
    for (int r = row; r < m.rows(); ++r) {
      const double mag = std::fabs(scalar_traits<S>::to_double(m(r, col)));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    return best;
  }
}

}  // namespace detail

/// Reduced row-echelon form in place; returns the pivot column indices.
/// Exact mode runs the forward pass fraction-free (Bareiss updates), so
/// all intermediate divisions are exact; float mode uses partial pivoting
/// on magnitude with entries below eps treated as zero.
template <class S>
std::vector<int> rref(Matrix<S>& m, double eps = kDefaultEpsilon) {
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;
  int row = 0;
  S prev = S(1);
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    const int piv = detail::pick_pivot(m, row, col, eps);
    if (piv < 0) continue;
    if (piv != row) m.swap_rows(piv, row);
    const S pivot = m(row, col);
    for (int r = row + 1; r < m.rows(); ++r) {
      if constexpr (scalar_traits<S>::exact) {
        const S factor = m(r, col);
        for (int j = 0; j < m.cols(); ++j)
          m(r, j) = (m(r, j) * pivot - factor * m(row, j)) / prev;
      } else {
        const S factor = m(r, col) / pivot;
        for (int j = 0; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
        m(r, col) = S(0);
      }
    }
    if constexpr (scalar_traits<S>::exact) prev = pivot;
    pivot_cols.push_back(col);
    pivot_rows.push_back(row);
    ++row;
  }
  // Backward pass: unit pivots, eliminate above.
  for (int p = static_cast<int>(pivot_cols.size()) - 1; p >= 0; --p) {
    const int r = pivot_rows[p];
    const int c = pivot_cols[p];
    const S pivot = m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) /= pivot;
    for (int above = 0; above < r; ++above) {
      const S factor = m(above, c);
      if (scalar_traits<S>::is_zero(factor, 0.0)) continue;
      for (int j = 0; j < m.cols(); ++j) m(above, j) -= factor * m(r, j);
      m(above, c) = S(0);
    }
  }
  return pivot_cols;
}

/// Canonical nullspace basis: free variables set to 1 in column order,
/// pivot variables read off the RREF. Empty result = trivial nullspace.
template <class S>
std::vector<Vector<S>> nullspace(Matrix<S> m, double eps = kDefaultEpsilon) {
  const int n = m.cols();
  const std::vector<int> pivots = rref(m, eps);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<S>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> x = zero_vector<S>(n);
    x[static_cast<std::size_t>(free)] = S(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      x[static_cast<std::size_t>(pivots[p])] = -m(static_cast<int>(p), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Gauss-Jordan inverse; nullopt when rank-deficient.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a,
                                 double eps = kDefaultEpsilon) {
  const int n = a.rows();
  if (n != a.cols()) return std::nullopt;
  Matrix<S> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = S(1);
  }
  const std::vector<int> pivots = rref(aug, eps);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (int p = 0; p < n; ++p)
    if (pivots[static_cast<std::size_t>(p)] != p) return std::nullopt;
  Matrix<S> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class S>
S determinant(Matrix<S> m, double eps = kDefaultEpsilon) {
  const int n = m.rows();
  S det = S(1);
  for (int col = 0; col < n; ++col) {
    const int piv = detail::pick_pivot(m, col, col, eps);
    if (piv < 0) return S(0);
    if (piv != col) {
      m.swap_rows(piv, col);
      det = -det;
    }
    const S pivot = m(col, col);
    det *= pivot;
    for (int r = col + 1; r < n; ++r) {
      const S factor = m(r, col) / pivot;
      if (scalar_traits<S>::is_zero(factor, 0.0)) continue;
      for (int j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace liegeo

#endif
