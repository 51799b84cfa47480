#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "icc/linalg/integer.hpp"

namespace icc::linalg {

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Matrices act on column vectors: `M * v`. A product of matrices
/// `M1 * M2` therefore applies `M2` first.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  void set_row(std::size_t i, const IntVector& v);
  void swap_rows(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Fraction-free (Bareiss) determinant.
  Int determinant() const;
  bool is_unimodular() const;

  /// Exact inverse of a unimodular matrix; throws ValidationError otherwise.
  IntMatrix inverse_unimodular() const;

  IntMatrix pow(unsigned long long exponent) const;

  /// Entry-wise reduction into [0, modulus).
  IntMatrix reduce_mod(unsigned modulus) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& m, const IntVector& v);

  IntMatrix scaled(const Int& s) const;

  std::string to_string() const;
  const std::vector<Int>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Throws ValidationError unless `m` is square with determinant +1 or -1.
void require_unimodular(const IntMatrix& m);

}  // namespace icc::linalg
