#pragma once

#include <cstdint>
#include <vector>

namespace basym {

/// Dense integer matrix, row-major, with overflow-checked elementary operations.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const;
  std::vector<std::int64_t> col(std::size_t j) const;

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, std::int64_t k);
  /// col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, std::int64_t k);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, one vector per entry.
std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a);

/// Reduced row echelon (Hermite) basis of the lattice spanned by the given rows:
/// pivots positive, entries above each pivot reduced into [0, pivot).
std::vector<std::vector<std::int64_t>> hermite_basis(const std::vector<std::vector<std::int64_t>>& rows,
                                                     std::size_t cols);

}  // namespace basym
