#include "streamcode/matrix.hpp"

#include <stdexcept>
#include <string>

namespace sc {

namespace {

void require_same(const Field& a, const Field& b) {
  if (!same_field(a, b)) throw FieldMismatch("matrix operands from " + a.name() + " and " + b.name());
}

}  // namespace

FieldVector::FieldVector(FieldPtr field, std::size_t length) : field_(std::move(field)), values_(length, 0) {}

FieldVector::FieldVector(FieldPtr field, std::vector<std::uint32_t> values)
    : field_(std::move(field)), values_(std::move(values)) {
  for (auto v : values_)
    if (!field_->contains(v)) throw std::out_of_range("vector entry outside field");
}

bool FieldVector::is_zero() const {
  for (auto v : values_)
    if (v) return false;
  return true;
}

std::vector<std::size_t> FieldVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i]) s.push_back(i);
  return s;
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  for (auto v : data_)
    if (!field_->contains(v)) throw std::out_of_range("matrix entry outside field");
}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<std::uint32_t> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    data.insert(data.end(), row.begin(), row.end());
  }
  return {std::move(field), r, c, std::move(data)};
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field,
                                   std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  std::vector<std::vector<std::uint32_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(std::move(field), v);
}

FieldMatrix FieldMatrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<FieldVector>& cols) {
  FieldMatrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

FieldVector FieldMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {field_, std::vector<std::uint32_t>(s.begin(), s.end())};
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  require_same(*field_, *o.field_);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  const Field& f = *field_;
  FieldMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(r, k);
      if (!a) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = f.add(out(r, c), f.mul(a, o(k, c)));
    }
  return out;
}

FieldVector FieldMatrix::operator*(const FieldVector& v) const {
  require_same(*field_, *v.field());
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  const Field& f = *field_;
  FieldVector out(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

bool FieldMatrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> FieldMatrix::to_rows() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
  require_same(*a.field(), *b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  FieldMatrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
  require_same(*a.field(), *b.field());
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  std::vector<std::uint32_t> data(a.entries().begin(), a.entries().end());
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return {a.field(), a.rows() + b.rows(), a.cols(), std::move(data)};
}

RowEchelon row_reduce(FieldMatrix m) {
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    const std::uint32_t s = f.inv(m(lead, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const std::uint32_t factor = m(r, c);
      if (!factor) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) {
  // forward elimination only
  FieldMatrix a = m;
  const Field& f = *a.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    const std::uint32_t s = f.inv(a(lead, c));
    for (std::size_t r = lead + 1; r < a.rows(); ++r) {
      const std::uint32_t factor = f.mul(a(r, c), s);
      if (!factor) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
    }
    ++lead;
  }
  return lead;
}

bool in_span(const FieldVector& v, const FieldMatrix& basis_columns) {
  if (v.size() != basis_columns.rows()) throw std::invalid_argument("in_span dimension mismatch");
  require_same(*v.field(), *basis_columns.field());
  if (v.is_zero()) return true;
  if (basis_columns.cols() == 0) return false;
  FieldMatrix aug = hstack(basis_columns, FieldMatrix::from_columns(v.field(), v.size(), {v}));
  return rank(aug) == rank(basis_columns);
}

FieldMatrix submatrix(const FieldMatrix& m, std::span<const std::size_t> row_set,
                      std::span<const std::size_t> col_set) {
  FieldMatrix out(m.field(), row_set.size(), col_set.size());
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    if (row_set[i] >= m.rows()) throw std::out_of_range("submatrix row index " + std::to_string(row_set[i]));
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      if (col_set[j] >= m.cols()) throw std::out_of_range("submatrix column index " + std::to_string(col_set[j]));
      out(i, j) = m(row_set[i], col_set[j]);
    }
  }
  return out;
}

std::vector<std::size_t> index_range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t i = first; i <= last && last != static_cast<std::size_t>(-1); ++i) out.push_back(i);
  return out;
}

std::optional<SolveResult> solve_with_uniqueness(const FieldMatrix& a, const FieldVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve dimension mismatch");
  require_same(*a.field(), *b.field());
  auto [red, pivots] = row_reduce(hstack(a, FieldMatrix::from_columns(a.field(), b.size(), {b})));
  const std::size_t n = a.cols();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  SolveResult out{FieldVector(a.field(), n), std::vector<bool>(n, false)};
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t p = pivots[r];
    out.x[p] = red(r, n);
    bool free_dependence = false;
    for (std::size_t c = p + 1; c < n && !free_dependence; ++c)
      if (!is_pivot[c] && red(r, c)) free_dependence = true;
    out.determined[p] = !free_dependence;
  }
  return out;
}

std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b) {
  auto r = solve_with_uniqueness(a, b);
  if (!r) return std::nullopt;
  return std::move(r->x);
}

FieldMatrix nullspace(const FieldMatrix& a) {
  const Field& f = *a.field();
  auto [red, pivots] = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::uint32_t> data;
  std::size_t count = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(red(r, free));
    data.insert(data.end(), v.begin(), v.end());
    ++count;
  }
  return {a.field(), count, n, std::move(data)};
}

FieldMatrix row_space_basis(const FieldMatrix& m) {
  auto [red, pivots] = row_reduce(m);
  std::vector<std::size_t> rows = index_range(0, pivots.size() - 1);
  if (pivots.empty()) rows.clear();
  return submatrix(red, rows, index_range(0, m.cols() - 1));
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto [red, pivots] = row_reduce(hstack(m, FieldMatrix::identity(m.field(), n)));
  if (pivots.size() < n || (n && pivots[n - 1] != n - 1)) return std::nullopt;
  std::vector<std::size_t> cols = index_range(n, 2 * n - 1);
  return submatrix(red, index_range(0, n - 1), cols);
}

FieldMatrix punctured_parity(const FieldMatrix& h, std::size_t n, std::size_t k, std::size_t tau, std::size_t i) {
  if (tau < k) throw std::domain_error("punctured parity shortcut needs tau >= k");
  if (tau > n - 1) throw std::domain_error("tau must not exceed n-1");
  if (i > n - 1) throw std::out_of_range("symbol index beyond code length");
  if (h.rows() != n - k || h.cols() != n) throw std::invalid_argument("parity-check matrix shape mismatch");
  if (i + tau + 2 > n) return h;  // i >= n - tau - 1
  return submatrix(h, index_range(0, tau - k + i), index_range(0, tau + i));
}

FieldMatrix shortened_dual(const FieldMatrix& h, std::size_t keep) {
  const std::size_t n = h.cols();
  if (keep > n) throw std::out_of_range("keep exceeds code length");
  if (keep == n) return row_space_basis(h);
  // Reorder columns so the deleted coordinates are eliminated first.
  std::vector<std::size_t> order = index_range(keep, n - 1);
  for (std::size_t c = 0; c < keep; ++c) order.push_back(c);
  auto [red, pivots] = row_reduce(submatrix(h, index_range(0, h.rows() - 1), order));
  const std::size_t tail = n - keep;
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= tail) rows.push_back(r);
  return submatrix(red, rows, index_range(tail, n - 1));
}

}  // namespace sc
