#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "legdet/errors.hpp"
#include "legdet/numbers.hpp"

namespace legdet {

// Dense row-major matrix over an exact field.  The element type supplies
// +,-,*,/ plus the zero_like/one_like/is_zero hooks; everything here is
// written once against that contract and instantiated for rationals,
// integers mod p, and cyclotomic elements.
template <typename F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <typename Fn>
  static Matrix from(std::size_t rows, std::size_t cols, Fn&& entry) {
    std::vector<F> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data.push_back(entry(i, j));
    return Matrix(rows, cols, std::move(data));
  }

  static Matrix identity(std::size_t n, const F& one) {
    Matrix m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix outer(const std::vector<F>& u, const std::vector<F>& v) {
    return from(u.size(), v.size(), [&](std::size_t i, std::size_t j) { return u[i] * v[j]; });
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  std::vector<F> col(std::size_t j) const {
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    return from(cols_, rows_, [&](std::size_t i, std::size_t j) -> const F& { return (*this)(j, i); });
  }

  /// Matrix with row i and column j removed.
  Matrix minor_matrix(std::size_t i, std::size_t j) const {
    return from(rows_ - 1, cols_ - 1, [&](std::size_t r, std::size_t c) -> const F& {
      return (*this)(r < i ? r : r + 1, c < j ? c : c + 1);
    });
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return from(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    return from(a.rows_, a.cols_, [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: inner dimensions differ");
    return from(a.rows_, b.cols_, [&](std::size_t i, std::size_t j) {
      F acc = zero_like(a(0, 0));
      for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
      return acc;
    });
  }

  Matrix scaled(const F& s) const {
    return from(rows_, cols_, [&](std::size_t i, std::size_t j) { return s * (*this)(i, j); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw Error("matrix apply: size mismatch");
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      F acc = zero_like((*this)(0, 0));
      for (std::size_t j = 0; j < cols_; ++j) acc = acc + (*this)(i, j) * v[j];
      out.push_back(acc);
    }
    return out;
  }

 private:
  Matrix(std::size_t rows, std::size_t cols, std::vector<F>&& data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<F> data_;
};

namespace detail {
inline void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw NonSquareError("determinant of a non-square matrix");
  if (rows == 0) throw NonSquareError("determinant of an empty matrix");
}
}  // namespace detail

/// Fraction-free (Bareiss) determinant of an integer matrix.  Every division
/// in the recurrence is exact; a nonzero remainder is checked unconditionally
/// and reported as an internal error.
inline Int det_bareiss_int(Matrix<Int> m) {
  detail::require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return Int(0);
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw InternalError("Bareiss step produced a non-exact division");
        m(i, j) = q;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int d = m(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

/// Rational determinant: clear denominators row by row, run the integer
/// Bareiss elimination, divide the row scalings back out.
inline Rat det_bareiss(const Matrix<Rat>& m) {
  detail::require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Int scale = 1;
  Matrix<Int> mi(n, n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    Int d = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Int den = m(i, j).get_den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = m(i, j) * Rat(d);
      mi(i, j) = scaled.get_num();  // exact: d is the row lcm
    }
    scale *= d;
  }
  return make_rat(det_bareiss_int(std::move(mi)), scale);
}

/// Determinant over a field by ordinary Gaussian elimination with exact
/// division, pivoting on the first nonzero entry in column order.
template <typename F>
F det_gauss(Matrix<F> m) {
  detail::require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  F result = one_like(m(0, 0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(m(piv, k))) ++piv;
    if (piv == n) return zero_like(m(0, 0));
    if (piv != k) {
      m.swap_rows(piv, k);
      result = zero_like(result) - result;
    }
    result = result * m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      F factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - factor * m(k, j);
    }
  }
  return result;
}

template <typename F>
F det(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, Rat>) {
    return det_bareiss(m);
  } else {
    return det_gauss(m);
  }
}

/// Exact inverse by Gauss-Jordan elimination.
template <typename F>
Matrix<F> inverse(const Matrix<F>& m) {
  detail::require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Matrix<F> a = m;
  Matrix<F> inv = Matrix<F>::identity(n, one_like(m(0, 0)));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, k))) ++piv;
    if (piv == n) throw SingularMatrixError("matrix inverse", k);
    if (piv != k) {
      a.swap_rows(piv, k);
      inv.swap_rows(piv, k);
    }
    F d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = a(k, j) / d;
      inv(k, j) = inv(k, j) / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      F factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - factor * a(k, j);
        inv(i, j) = inv(i, j) - factor * inv(k, j);
      }
    }
  }
  return inv;
}

/// det(M + u v^T), evaluated both directly and through the matrix
/// determinant lemma det(M)(1 + v^T M^{-1} u).  The two routes must agree;
/// disagreement means broken arithmetic, not a theorem failure.
template <typename F>
F det_rank_one_update(const Matrix<F>& m, const std::vector<F>& u, const std::vector<F>& v) {
  if (!m.square() || u.size() != m.rows() || v.size() != m.rows())
    throw NonSquareError("det_rank_one_update: shape mismatch");
  F direct = det(m + Matrix<F>::outer(u, v));
  F base = det(m);
  if (is_zero(base)) throw SingularMatrixError("det_rank_one_update", 0);
  std::vector<F> y = inverse(m).apply(u);
  F dot = zero_like(base);
  for (std::size_t i = 0; i < v.size(); ++i) dot = dot + v[i] * y[i];
  F lemma = base * (one_like(base) + dot);
  if (!(direct == lemma))
    throw InternalError("det_rank_one_update: direct and lemma routes disagree");
  return direct;
}

/// Leibniz-expansion determinant; the brute-force companion used to check
/// closed forms at very small sizes (n <= 8).
template <typename F>
F det_leibniz(const Matrix<F>& m) {
  detail::require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n > 8) throw Error("det_leibniz: matrix too large");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  F acc = zero_like(m(0, 0));
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    F term = one_like(m(0, 0));
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    acc = (inversions % 2 == 0) ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// prod_{i<j} (x_j - x_i), self-checked against the determinant of the
/// power matrix (x_i^r).
template <typename F>
F vandermonde_det(const std::vector<F>& xs) {
  if (xs.empty()) throw Error("vandermonde_det: empty node list");
  const std::size_t n = xs.size();
  F prod = one_like(xs[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) prod = prod * (xs[j] - xs[i]);
  Matrix<F> power = Matrix<F>::from(n, n, [&](std::size_t i, std::size_t r) {
    F acc = one_like(xs[0]);
    for (std::size_t k = 0; k < r; ++k) acc = acc * xs[i];
    return acc;
  });
  if (!(det(power) == prod))
    throw InternalError("vandermonde_det: product formula disagrees with power matrix");
  return prod;
}

/// The entrywise matrix [ (X_r + Y_s) / (1 + X_r Y_s) ].
template <typename F>
Matrix<F> cauchy_matrix(const std::vector<F>& X, const std::vector<F>& Y) {
  if (X.size() != Y.size()) throw NonSquareError("cauchy_matrix: node counts differ");
  return Matrix<F>::from(X.size(), Y.size(), [&](std::size_t r, std::size_t s) {
    F den = one_like(X[0]) + X[r] * Y[s];
    if (is_zero(den)) throw PoleError("cauchy_matrix: 1 + X_r Y_s vanishes");
    return (X[r] + Y[s]) / den;
  });
}

/// Closed form of det[(X_r+Y_s)/(1+X_r Y_s)]:
///   (1/2){prod (1+X_r)(1+Y_r) + (-1)^N prod (1-X_r)(1-Y_r)}
///     * prod_{r<s}(X_r-X_s)(Y_s-Y_r) / prod_{r,s}(1+X_r Y_s).
/// Repeated nodes make both sides vanish, so they return 0.
template <typename F>
F cauchy_closed_form(const std::vector<F>& X, const std::vector<F>& Y) {
  if (X.size() != Y.size()) throw NonSquareError("cauchy_closed_form: node counts differ");
  if (X.empty()) throw Error("cauchy_closed_form: empty node list");
  const std::size_t n = X.size();
  const F one = one_like(X[0]);
  const F zero = zero_like(X[0]);

  F denom = one;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      F d = one + X[r] * Y[s];
      if (is_zero(d)) throw PoleError("cauchy_closed_form: 1 + X_r Y_s vanishes");
      denom = denom * d;
    }

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (X[r] == X[s] || Y[r] == Y[s]) return zero;

  F plus = one, minus = one;
  for (std::size_t r = 0; r < n; ++r) {
    plus = plus * (one + X[r]) * (one + Y[r]);
    minus = minus * (one - X[r]) * (one - Y[r]);
  }
  F head = (n % 2 == 0) ? plus + minus : plus - minus;
  head = head / (one + one);

  F vand = one;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) vand = vand * (X[r] - X[s]) * (Y[s] - Y[r]);

  return head * vand / denom;
}

}  // namespace legdet
