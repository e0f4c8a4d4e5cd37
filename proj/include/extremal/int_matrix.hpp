#pragma once

// Dense matrices over Z with arbitrary-precision entries, and the exact
// algorithms the polarization certificate relies on.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace extremal {

using BigInt = boost::multiprecision::cpp_int;

class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ZMatrix identity(std::size_t n);
  /// [[0, I_g], [-I_g, 0]].
  static ZMatrix standard_symplectic(std::size_t g);
  static ZMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZMatrix transpose() const;
  ZMatrix operator-() const;
  bool is_skew() const;
  /// Largest absolute entry.
  BigInt max_abs() const;
  /// Row-major copy; throws Error(InternalConsistency) if an entry overflows.
  std::vector<std::vector<std::int64_t>> to_int64() const;

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

ZMatrix matrix_power(const ZMatrix& m, unsigned exponent);

/// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const ZMatrix& m);

/// Exact Pfaffian of a skew-symmetric matrix by fraction-free elimination on
/// leading principal Pfaffians. Throws Error(InvalidInput) on odd dimension
/// or non-skew input.
BigInt pfaffian(const ZMatrix& m);

/// Unimodular U with U^T E U = J_std for an integral skew E of Pfaffian +-1.
/// Columns of U are e_1..e_g, f_1..f_g with E(e_i, f_i) = 1. Throws
/// Error(InternalConsistency) if E is not unimodular.
ZMatrix symplectic_basis(const ZMatrix& form);

}  // namespace extremal
