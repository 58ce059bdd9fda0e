#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "streamcode/galois.hpp"

namespace sc {

class FieldVector {
 public:
  FieldVector(FieldPtr field, std::size_t length);
  FieldVector(FieldPtr field, std::vector<std::uint32_t> values);

  std::size_t size() const { return values_.size(); }
  const FieldPtr& field() const { return field_; }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }
  std::uint32_t& operator[](std::size_t i) { return values_[i]; }
  std::span<const std::uint32_t> values() const { return values_; }
  bool is_zero() const;
  /// Indices of nonzero entries, ascending.
  std::vector<std::size_t> support() const;
  std::size_t weight() const { return support().size(); }

  bool operator==(const FieldVector& o) const {
    return values_ == o.values_ && same_field(*field_, *o.field_);
  }

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> values_;
};

/// Dense row-major matrix over GF(q).
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

  static FieldMatrix identity(FieldPtr field, std::size_t n);
  static FieldMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);
  static FieldMatrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<std::uint32_t>> rows);
  /// Matrix whose columns are the given vectors (all of equal length).
  static FieldMatrix from_columns(FieldPtr field, std::size_t rows, const std::vector<FieldVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FieldVector row_vector(std::size_t r) const;
  FieldVector column(std::size_t c) const;
  std::span<const std::uint32_t> entries() const { return data_; }

  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldVector operator*(const FieldVector& v) const;
  bool is_zero() const;
  std::vector<std::vector<std::uint32_t>> to_rows() const;

  bool operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && same_field(*field_, *o.field_);
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);

/// Reduced row-echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, first-nonzero pivoting.
RowEchelon row_reduce(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);
/// True iff v is a linear combination of the columns of basis_columns.
bool in_span(const FieldVector& v, const FieldMatrix& basis_columns);
FieldMatrix submatrix(const FieldMatrix& m, std::span<const std::size_t> row_set,
                      std::span<const std::size_t> col_set);
/// Contiguous index range [first, last] (inclusive), empty when last < first.
std::vector<std::size_t> index_range(std::size_t first, std::size_t last);
/// Solution of A x = b with free variables set to zero, or nullopt when inconsistent.
std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b);

/// Solution of A x = b plus, per unknown, whether every solution agrees on it.
struct SolveResult {
  FieldVector x;
  std::vector<bool> determined;
};
std::optional<SolveResult> solve_with_uniqueness(const FieldMatrix& a, const FieldVector& b);

/// Rows form a basis of { x : A x = 0 }.
FieldMatrix nullspace(const FieldMatrix& a);
/// Rows form a basis of the row space of m.
FieldMatrix row_space_basis(const FieldMatrix& m);
/// Inverse of a square matrix, nullopt when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& m);

/// Parity-check matrix of the code punctured on [tau+i+1 : n-1], read off a
/// systematic-form H = [P' | I]: H([0 : tau-k+i], [0 : tau+i]) while i <= n-tau-2,
/// H itself afterwards. Requires k <= tau <= n-1.
FieldMatrix punctured_parity(const FieldMatrix& h, std::size_t n, std::size_t k, std::size_t tau, std::size_t i);

/// Parity-check matrix of the code punctured to its first `keep` coordinates,
/// for an arbitrary parity-check matrix h: basis of the row-space vectors that
/// vanish on [keep : n-1], restricted to [0 : keep-1].
FieldMatrix shortened_dual(const FieldMatrix& h, std::size_t keep);

}  // namespace sc
