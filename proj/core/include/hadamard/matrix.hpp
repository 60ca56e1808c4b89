#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/sh_vector.hpp"

namespace hadamard {

/// Plain ±1 square matrix, row-major. The general-purpose representation
/// used by file IO, verification and normalization; no structural
/// invariants beyond entries being ±1.
class SignMatrix {
 public:
  SignMatrix(int order, std::vector<std::int8_t> row_major);

  static SignMatrix from_rows(const std::vector<std::string>& pm_rows);

  int order() const { return order_; }
  int entry(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * order_ + col];
  }

  /// M^T M as exact integers.
  std::vector<std::vector<int>> gram() const;

  bool first_column_ones() const;
  bool first_row_ones() const;

  SignMatrix with_negated_row(int row) const;
  SignMatrix with_negated_column(int col) const;

  std::string row_string(int row) const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int order_;
  std::vector<std::int8_t> data_;
};

/// 4k-order candidate matrix: column 0 is the unity vector, columns 1..4k-1
/// are pairwise distinct SH vectors. Not necessarily orthogonal.
class QshMatrix {
 public:
  QshMatrix(int order, std::vector<ShVector> sh_columns);

  int order() const { return order_; }
  int k() const { return order_ / 4; }

  /// Column i for i in 1..order-1.
  const ShVector& column(int i) const {
    return cols_[static_cast<std::size_t>(i - 1)];
  }
  std::span<const ShVector> sh_columns() const { return cols_; }

  int entry(int row, int col) const {
    return col == 0 ? 1 : cols_[static_cast<std::size_t>(col - 1)].entry(row);
  }

  SignMatrix to_sign_matrix() const;

  friend bool operator==(const QshMatrix&, const QshMatrix&) = default;

 private:
  int order_;
  std::vector<ShVector> cols_;
};

/// Q^T Q; symmetric, diagonal entries all equal to the order.
std::vector<std::vector<int>> gram_matrix(const QshMatrix& q);

bool is_hadamard(const QshMatrix& q);
bool is_hadamard(const SignMatrix& m);

/// Sum of absolute off-diagonal Gram entries; zero exactly for Hadamard
/// matrices. The span overload tolerates duplicate columns (used while
/// annealing, where duplicates carry |±4k| energy).
std::int64_t energy(int order, std::span<const ShVector> sh_columns);
std::int64_t energy(const QshMatrix& q);
std::int64_t energy(const SignMatrix& m);

/// Verified seminormalized Hadamard matrix: a QshMatrix with Q^T Q = 4k*I.
class ShMatrix {
 public:
  explicit ShMatrix(QshMatrix q);

  int order() const { return q_.order(); }
  int k() const { return q_.k(); }
  const QshMatrix& qsh() const { return q_; }
  const ShVector& column(int i) const { return q_.column(i); }
  SignMatrix to_sign_matrix() const { return q_.to_sign_matrix(); }

  friend bool operator==(const ShMatrix&, const ShMatrix&) = default;

 private:
  QshMatrix q_;
};

/// Kronecker-doubling Hadamard matrix of order 2^power; first column (and
/// row) all-ones by construction. Returned as a SignMatrix because orders
/// 2^0 and 2^1 are not multiples of 4.
SignMatrix sylvester(int power);

/// Requires order divisible by 4, unity first column, balanced distinct
/// remaining columns.
QshMatrix to_qsh_matrix(const SignMatrix& m);

}  // namespace hadamard
