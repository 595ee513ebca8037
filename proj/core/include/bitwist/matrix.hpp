#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bitwist {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);
  /// Convenience for literals in tests: {{1, 2}, {3, 4}}.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_r with
/// 2 <= d_1 | d_2 | ... | d_r.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  /// Group order; 0 encodes an infinite group.
  Integer order() const;
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  /// "0", "Z/3", "Z/2 + Z/2", "Z^2", "Z + Z/5"
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// U * input * V = diagonal, with U and V unimodular.
struct SmithDecomposition {
  IntMatrix left;      // U, rows x rows
  IntMatrix diagonal;  // D, rows x cols, non-negative divisibility chain
  IntMatrix right;     // V, cols x cols
};

/// Elementary row/column reduction with the smallest non-zero entry as pivot.
SmithDecomposition smith_decomposition(const IntMatrix& mat);

/// Invariants of the cokernel of mat acting on Z^cols (rows are relations).
AbelianInvariants smith_normal_form(const IntMatrix& mat);

/// Fraction-free Gaussian elimination; requires a square matrix.
Integer determinant(const IntMatrix& mat);

}  // namespace bitwist
