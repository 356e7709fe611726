#include "slcinv/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace slcinv {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor division keeps remainders in [0, |b|) which makes every reduction step
// strictly shrink the pivot row/column.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::column(std::size_t c) const {
  IntegerMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntegerMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).str();
    }
    s += "]";
  }
  return s + "]";
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition d{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n), {}};
  IntegerMatrix& s = d.S;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          if (s(r, c) == 0) continue;
          BigInt v = abs_value(s(r, c));
          if (!found || v < best) {
            found = true;
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (!found) return d;

      s.swap_rows(t, pr);
      d.U.swap_rows(t, pr);
      s.swap_cols(t, pc);
      d.V.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (s(r, t) == 0) continue;
        BigInt q = floor_div(s(r, t), s(t, t));
        s.add_row_multiple(r, t, -q);
        d.U.add_row_multiple(r, t, -q);
        dirty = dirty || s(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (s(t, c) == 0) continue;
        BigInt q = floor_div(s(t, c), s(t, t));
        s.add_col_multiple(c, t, -q);
        d.V.add_col_multiple(c, t, -q);
        dirty = dirty || s(t, c) != 0;
      }
      if (dirty) continue;

      // Pivot row and column are clear; enforce divisibility of the block.
      std::size_t bad_row = m;
      for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (s(r, c) % s(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == m) break;
      s.add_row_multiple(t, bad_row, 1);
      d.U.add_row_multiple(t, bad_row, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      d.U.negate_row(t);
    }
    d.divisors.push_back(s(t, t));
  }
  return d;
}

std::size_t rank(const IntegerMatrix& a) { return smith_normal_form(a).rank(); }

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  const std::size_t r = d.rank();
  IntegerMatrix k(a.cols(), a.cols() - r);
  for (std::size_t j = r; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, j - r) = d.V(i, j);
  return k;
}

AbelianGroup cokernel_invariants(const IntegerMatrix& a) {
  SmithDecomposition d = smith_normal_form(a);
  return AbelianGroup::from_cyclic_orders(a.rows() - d.rank(), d.divisors);
}

BigInt determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace slcinv
