#pragma once

// Exact linear algebra over the integers: Smith normal form with unimodular
// transforms, kernels and cokernels. All arithmetic is arbitrary precision.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "slcinv/abelian_group.hpp"

namespace slcinv {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix transpose() const;
  IntegerMatrix column(std::size_t c) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// U * A * V = S with U, V unimodular and S diagonal; the nonzero diagonal
// entries d1 | d2 | ... are positive and listed in `divisors`.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  std::vector<BigInt> divisors;

  std::size_t rank() const { return divisors.size(); }
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

// Columns form a Z-basis of {x : A x = 0}; the result is cols x k.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

// Z^rows / A Z^cols.
AbelianGroup cokernel_invariants(const IntegerMatrix& a);

// Fraction-free Bareiss elimination; requires a square matrix.
BigInt determinant(const IntegerMatrix& a);

}  // namespace slcinv
