#include "streamcode/block_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "streamcode/omp_kernels.hpp"

namespace sc {

namespace {

FieldMatrix systematic_parity_check(const FieldMatrix& parity, std::size_t n, std::size_t k) {
  const Field& f = *parity.field();
  FieldMatrix h(parity.field(), n - k, n);
  for (std::size_t r = 0; r < n - k; ++r) {
    for (std::size_t c = 0; c < k; ++c) h(r, c) = f.neg(parity(c, r));
    h(r, k + r) = 1;
  }
  return h;
}

// Incremental row-echelon basis of short vectors; rows are kept with a unit pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field& f, std::size_t dim) : f_(f), dim_(dim) {}

  // Reduces v in place against the basis; true iff it reduces to zero.
  bool reduce(std::uint32_t* v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::uint32_t c = v[pivots_[r]];
      if (!c) continue;
      const std::uint32_t* row = rows_.data() + r * dim_;
      for (std::size_t j = 0; j < dim_; ++j)
        if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j]) return false;
    return true;
  }

  // Adds v unless dependent; returns true iff v was independent.
  bool insert(std::span<const std::uint32_t> v) {
    scratch_.assign(v.begin(), v.end());
    if (reduce(scratch_.data())) return false;
    std::size_t p = 0;
    while (!scratch_[p]) ++p;
    const std::uint32_t s = f_.inv(scratch_[p]);
    for (auto& x : scratch_) x = f_.mul(x, s);
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::span<const std::uint32_t> v) {
    scratch_.assign(v.begin(), v.end());
    return reduce(scratch_.data());
  }

 private:
  const Field& f_;
  std::size_t dim_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> scratch_;
};

// Column j of m as a vector.
std::vector<std::uint32_t> column_of(const FieldMatrix& m, std::size_t j) {
  std::vector<std::uint32_t> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, j);
  return v;
}

void check_patterns_fit(std::span<const ErasurePattern> patterns, std::size_t n) {
  for (const auto& p : patterns)
    for (std::size_t t = n; t < p.horizon(); ++t)
      if (p.erased(t)) throw std::out_of_range("pattern erases a slot beyond the code length");
}

}  // namespace

SystematicCode::SystematicCode(std::size_t n, std::size_t k, FieldMatrix parity, Construction construction)
    : n_(n),
      k_(k),
      parity_(std::move(parity)),
      generator_(parity_.field(), 0, 0),
      parity_check_(parity_.field(), 0, 0),
      construction_(std::move(construction)) {
  if (k < 1 || k >= n) throw std::invalid_argument("systematic code needs 0 < k < n");
  if (parity_.rows() != k || parity_.cols() != n - k) throw std::invalid_argument("P must be k x (n-k)");
  generator_ = hstack(FieldMatrix::identity(field(), k), parity_);
  parity_check_ = systematic_parity_check(parity_, n, k);
}

FieldVector SystematicCode::encode(const FieldVector& message) const {
  if (message.size() != k_) throw std::invalid_argument("message length must equal k");
  return generator_.transpose() * message;
}

CausalCode::CausalCode(FieldMatrix generator) : generator_(std::move(generator)) {
  const std::size_t k = generator_.rows();
  if (k < 1 || k >= generator_.cols()) throw std::invalid_argument("causal code needs 0 < k < n");
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (generator_(r, c)) throw std::invalid_argument("G(:, [0:k-1]) must be upper-triangular");
}

std::size_t delay_tau_star(std::size_t k, std::size_t z, std::size_t b) {
  if (k < 1 || z < 1 || b < 1) throw std::invalid_argument("tau* needs positive k, z, b");
  return std::max(k + (z - 1) * b, z * b);
}

SystematicCode build_mds(std::size_t n, std::size_t k, const FieldPtr& field, MdsKind kind) {
  if (k < 1 || k >= n) throw std::invalid_argument("MDS code needs 0 < k < n");
  const Field& f = *field;
  const Construction tag{kind == MdsKind::cauchy ? "mds-cauchy" : "mds-vandermonde",
                         {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}}};
  if (f.order() < n) {
    // single parity and repetition codes are MDS over every field
    if (k == n - 1 || k == 1) {
      FieldMatrix p(field, k, n - k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n - k; ++c) p(r, c) = 1;
      return {n, k, std::move(p), tag};
    }
    throw std::invalid_argument("field " + f.name() + " too small for an [" + std::to_string(n) + "," +
                                std::to_string(k) + "] MDS code (need q >= n)");
  }
  FieldMatrix p(field, k, n - k);
  if (kind == MdsKind::cauchy) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n - k; ++c)
        p(r, c) = f.inv(f.sub(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(k + c)));
    return {n, k, std::move(p), tag};
  }
  // Vandermonde rows alpha_c^r on the points 0..n-1, then made systematic.
  FieldMatrix v(field, k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) v(r, c) = f.pow(static_cast<std::uint32_t>(c), r);
  auto left_inv = inverse(submatrix(v, index_range(0, k - 1), index_range(0, k - 1)));
  if (!left_inv) throw std::logic_error("Vandermonde block unexpectedly singular");
  const FieldMatrix g = *left_inv * v;
  return {n, k, submatrix(g, index_range(0, k - 1), index_range(k, n - 1)), tag};
}

SystematicCode build_multi_burst(std::size_t k, std::size_t z, std::size_t b, const FieldPtr& field) {
  if (k < 1 || z < 1 || b < 1) throw std::invalid_argument("multi-burst code needs positive k, z, b");
  if (k % b != 0)
    throw std::invalid_argument("b=" + std::to_string(b) + " does not divide k=" + std::to_string(k) +
                                " (equivalently b does not divide tau*): no causal [k+zb,k] code is delay-tau* "
                                "decodable for every (z,b)-burst");
  const std::size_t kc = k / b;
  const std::size_t nc = kc + z;
  SystematicCode component = [&] {
    try {
      return build_mds(nc, kc, field);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("component code: ") + e.what());
    }
  }();
  const std::size_t n = k + z * b;
  FieldMatrix p(field, k, n - k);
  for (std::size_t j = 0; j < kc; ++j)
    for (std::size_t l = 0; l < z; ++l)
      for (std::size_t r = 0; r < b; ++r) p(j * b + r, l * b + r) = component.parity()(j, l);
  return {n,
          k,
          std::move(p),
          {"multi-burst",
           {{"k", static_cast<std::int64_t>(k)}, {"z", static_cast<std::int64_t>(z)}, {"b", static_cast<std::int64_t>(b)}}}};
}

SystematicCode causal_to_systematic(const CausalCode& code) {
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  auto u_inv = inverse(submatrix(code.generator(), index_range(0, k - 1), index_range(0, k - 1)));
  if (!u_inv) throw std::domain_error("U is singular");
  const FieldMatrix g_hat = *u_inv * code.generator();
  return {n, k, submatrix(g_hat, index_range(0, k - 1), index_range(k, n - 1)), {"causal-to-systematic", {}}};
}

DelayChecker::DelayChecker(const SystematicCode& code, std::size_t tau)
    : n_(code.n()), k_(code.k()), field_(code.field().get()), keep_alive_(code.field()) {
  if (tau < code.k() || tau > code.n() - 1)
    throw std::domain_error("tau must lie in [k, n-1] for the systematic delay check");
  if (n_ > 64) throw std::invalid_argument("delay check supports n <= 64");
  columns_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    const FieldMatrix hi = punctured_parity(code.parity_check(), n_, k_, tau, i);
    columns_[i].reserve(hi.cols());
    for (std::size_t j = 0; j < hi.cols(); ++j) columns_[i].push_back(column_of(hi, j));
  }
}

std::optional<std::size_t> DelayChecker::first_failure(std::uint64_t erased_mask) const {
  for (std::size_t i = 0; i < k_; ++i) {
    if (!((erased_mask >> i) & 1)) continue;
    const auto& cols = columns_[i];
    const std::size_t height = cols[i].size();
    EchelonBasis basis(*field_, height);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i && ((erased_mask >> j) & 1)) basis.insert(cols[j]);
    if (basis.contains(cols[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> DelayChecker::first_failure(const ErasurePattern& pattern) const {
  for (std::size_t t = n_; t < pattern.horizon(); ++t)
    if (pattern.erased(t)) throw std::out_of_range("pattern erases a slot beyond the code length");
  return first_failure(pattern.resized(n_).mask());
}

namespace {

template <class FirstIndex>
VerifyResult run_verify(const SystematicCode& code, std::size_t tau, std::span<const ErasurePattern> patterns,
                        FirstIndex&& first_index) {
  check_patterns_fit(patterns, code.n());
  const DelayChecker checker(code, tau);
  std::vector<std::uint64_t> masks;
  masks.reserve(patterns.size());
  for (const auto& p : patterns) masks.push_back(p.resized(code.n()).mask());
  auto bad = first_index(masks.size(), [&](std::size_t idx) { return checker.first_failure(masks[idx]).has_value(); });
  VerifyResult out;
  if (!bad) {
    out.patterns_checked = patterns.size();
    return out;
  }
  out.decodable = false;
  out.patterns_checked = *bad + 1;
  out.counterexample = Counterexample{patterns[*bad], *bad, *checker.first_failure(masks[*bad])};
  return out;
}

}  // namespace

VerifyResult verify_delay_decodable(const SystematicCode& code, std::size_t tau,
                                    std::span<const ErasurePattern> patterns) {
  return run_verify(code, tau, patterns,
                    [](std::size_t count, auto&& pred) { return parallel_first_index(count, pred); });
}

VerifyResult verify_delay_decodable_serial(const SystematicCode& code, std::size_t tau,
                                           std::span<const ErasurePattern> patterns) {
  return run_verify(code, tau, patterns,
                    [](std::size_t count, auto&& pred) { return serial_first_index(count, pred); });
}

VerifyResult verify_delay_decodable_general(const FieldMatrix& generator, std::size_t tau,
                                            std::span<const ErasurePattern> patterns) {
  const std::size_t k = generator.rows();
  const std::size_t n = generator.cols();
  if (k < 1 || k >= n) throw std::invalid_argument("generator must be k x n with 0 < k < n");
  check_patterns_fit(patterns, n);
  const FieldMatrix dual = nullspace(generator);
  std::vector<FieldMatrix> shortened;
  for (std::size_t i = 0; i < k; ++i) shortened.push_back(shortened_dual(dual, std::min(i + tau, n - 1) + 1));

  VerifyResult out;
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const ErasurePattern& p = patterns[idx];
    for (std::size_t i = 0; i < k; ++i) {
      if (!p.erased(i)) continue;
      const FieldMatrix& hs = shortened[i];
      std::vector<FieldVector> others;
      for (std::size_t j = 0; j < hs.cols(); ++j)
        if (j != i && p.erased(j)) others.push_back(hs.column(j));
      const bool lost = in_span(hs.column(i), FieldMatrix::from_columns(hs.field(), hs.rows(), others));
      if (lost) {
        out.decodable = false;
        out.patterns_checked = idx + 1;
        out.counterexample = Counterexample{p, idx, i};
        return out;
      }
    }
  }
  out.patterns_checked = patterns.size();
  return out;
}

std::optional<FieldVector> undecodable_witness(const SystematicCode& code, std::size_t tau,
                                               const ErasurePattern& pattern, std::size_t i) {
  if (i >= code.k()) throw std::out_of_range("message position beyond k");
  const std::size_t last = std::min(i + tau, code.n() - 1);
  std::vector<std::size_t> avail;
  for (std::size_t j = 0; j <= last; ++j)
    if (!pattern.erased(j)) avail.push_back(j);
  const FieldMatrix& g = code.generator();
  // messages u with (uG)_j = 0 on the available slots
  const FieldMatrix constraints = submatrix(g, index_range(0, code.k() - 1), avail).transpose();
  const FieldMatrix kernel =
      avail.empty() ? FieldMatrix::identity(code.field(), code.k()) : nullspace(constraints);
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    if (kernel(r, i)) return code.encode(kernel.row_vector(r));
  return std::nullopt;
}

bool check_full_rank_property(const SystematicCode& code, std::size_t z, std::size_t b) {
  if (code.n() != code.k() + z * b) throw std::invalid_argument("full-rank property needs n = k + z*b");
  if (code.k() < b) return true;  // no column windows to test
  const FieldMatrix& h = code.parity_check();
  for (std::size_t l = 0; l < z; ++l)
    for (std::size_t j = 0; j + b <= code.k(); ++j)
      if (rank(submatrix(h, index_range(l * b, (l + 1) * b - 1), index_range(j, j + b - 1))) != b) return false;
  return true;
}

TwoRowWindowProperties check_two_row_window_matrix(const FieldMatrix& a, std::size_t b, std::size_t m) {
  if (b < 2 || m < 2) throw std::invalid_argument("two-row window check needs b >= 2 and m >= 2");
  if (a.rows() != 2 || a.cols() != m * b) throw std::invalid_argument("matrix must be 2 x (m*b)");
  const std::vector<std::size_t> both{0, 1};
  auto window_rank = [&](std::size_t first, std::size_t len) {
    return rank(submatrix(a, both, index_range(first, first + len - 1)));
  };
  TwoRowWindowProperties out;
  out.p1 = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c + 1 < b; ++c)
      if (a(i, c)) out.p1 = false;
  out.p2 = true;
  for (std::size_t i = 0; i < 2 && out.p2; ++i) {
    std::size_t run = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      run = a(i, c) ? 0 : run + 1;
      if (run >= b) {
        out.p2 = false;
        break;
      }
    }
  }
  out.p3 = true;
  for (std::size_t j = b - 1; j <= (m - 1) * b && out.p3; ++j) out.p3 = window_rank(j, b) == 1;
  out.p4 = true;
  for (std::size_t j = 0; j <= (m - 2) * b && out.p4; ++j) out.p4 = window_rank(j, 2 * b) == 2;
  out.conclusion_holds = a(0, m * b - 1) != 0 && a(1, m * b - 1) != 0;
  return out;
}

}  // namespace sc
