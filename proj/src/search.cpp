#include "streamcode/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "streamcode/omp_kernels.hpp"

namespace sc {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / base) throw std::invalid_argument(std::string(what) + " exceeds the configured guard");
    v *= base;
  }
  return v;
}

}  // namespace

bool brute_force_decodable(const SystematicCode& code, std::size_t tau, const ErasurePattern& pattern) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const Field& f = *code.field();
  const std::uint64_t total = checked_power(f.order(), k, std::uint64_t{1} << 20, "codebook size q^k");
  for (std::size_t t = n; t < pattern.horizon(); ++t)
    if (pattern.erased(t)) throw std::out_of_range("pattern erases a slot beyond the code length");

  std::vector<std::size_t> erased;
  for (std::size_t i = 0; i < k; ++i)
    if (pattern.erased(i)) erased.push_back(i);
  if (erased.empty()) return true;

  const FieldMatrix& g = code.generator();
  std::vector<std::uint32_t> u(k, 0);
  std::vector<std::uint32_t> c(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(u[i], g(i, j)));
      c[j] = acc;
    }
    for (std::size_t i : erased) {
      if (!u[i]) continue;
      const std::size_t last = std::min(i + tau, n - 1);
      bool silent = true;  // codeword looks like zero on everything the decoder sees
      for (std::size_t j = 0; j <= last && silent; ++j)
        if (!pattern.erased(j) && c[j]) silent = false;
      if (silent) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (++u[i] < f.order()) break;
      u[i] = 0;
    }
  }
  return true;
}

CrossValidation cross_validate(const SystematicCode& code, std::size_t tau, std::span<const ErasurePattern> patterns) {
  const DelayChecker checker(code, tau);
  CrossValidation out;
  out.patterns = patterns.size();
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const bool analytic = !checker.first_failure(patterns[idx]).has_value();
    if (analytic != brute_force_decodable(code, tau, patterns[idx])) {
      ++out.disagreements;
      if (!out.first_disagreement) out.first_disagreement = idx;
    }
  }
  out.agree = out.disagreements == 0;
  return out;
}

FieldMatrix candidate_parity(std::uint64_t index, std::size_t k, std::size_t r, const FieldPtr& field) {
  const std::uint64_t q = field->order();
  FieldMatrix p(field, k, r);
  for (std::size_t e = k * r; e-- > 0;) {
    p(e / r, e % r) = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  if (index) throw std::out_of_range("candidate index beyond the search space");
  return p;
}

std::vector<ErasurePattern> search_pattern_order(std::size_t n, std::size_t z, std::size_t b) {
  std::vector<ErasurePattern> all = burst_family(n, z, b);
  std::vector<ErasurePattern> front;
  if (z >= 2) {
    for (std::size_t j = b; j + b <= n; ++j) {
      ErasurePattern p(n);
      for (std::size_t s = 0; s < b; ++s) {
        p.set(s);
        p.set(j + s);
      }
      front.push_back(p);
    }
  }
  std::vector<ErasurePattern> out = front;
  for (const auto& p : all)
    if (std::find(front.begin(), front.end(), p) == front.end()) out.push_back(p);
  return out;
}

SearchResult search_nonexistence(std::size_t n, std::size_t k, std::size_t z, std::size_t b, std::size_t tau,
                                 const FieldPtr& field, const SearchOptions& options) {
  if (k < 1 || z < 1 || b < 1 || n != k + z * b) throw std::invalid_argument("search needs n = k + z*b");
  if (tau < k || tau > n - 1) throw std::domain_error("tau must lie in [k, n-1]");
  const std::size_t r = n - k;
  SearchResult out;
  out.space = checked_power(field->order(), k * r, options.max_space, "candidate space");
  if (options.resume_from > out.space) throw std::invalid_argument("resume cursor beyond the search space");

  std::vector<std::uint64_t> masks;
  for (const auto& p : search_pattern_order(n, z, b)) masks.push_back(p.mask());

  // per-worker pattern order; a pattern that rejects a candidate moves to the front
  const int workers = options.parallel ? omp_get_max_threads() : 1;
  std::vector<std::vector<std::size_t>> order(static_cast<std::size_t>(workers));
  for (auto& o : order) {
    o.resize(masks.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
  }

  auto passes = [&](std::uint64_t index) {
    const SystematicCode code(n, k, candidate_parity(index, k, r, field));
    const DelayChecker checker(code, tau);
    auto& o = order[options.parallel ? static_cast<std::size_t>(omp_get_thread_num()) : 0];
    for (std::size_t pos = 0; pos < o.size(); ++pos) {
      if (checker.first_failure(masks[o[pos]])) {
        std::rotate(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(pos), o.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        return false;
      }
    }
    return true;
  };

  std::uint64_t cursor = options.resume_from;
  while (cursor < out.space) {
    const std::uint64_t end = std::min(out.space, cursor + std::max<std::uint64_t>(options.block, 1));
    const auto count = static_cast<std::size_t>(end - cursor);
    auto pred = [&](std::size_t i) { return passes(cursor + i); };
    const auto hit = options.parallel ? parallel_first_index(count, pred) : serial_first_index(count, pred);
    if (hit) {
      out.found = true;
      out.witness_index = cursor + *hit;
      out.witness = SystematicCode(n, k, candidate_parity(*out.witness_index, k, r, field),
                                   {"search-witness", {{"index", static_cast<std::int64_t>(*out.witness_index)}}});
      cursor = *out.witness_index + 1;
      if (options.progress) options.progress(cursor, out.space);
      break;
    }
    cursor = end;
    if (options.progress) options.progress(cursor, out.space);
  }
  out.exhausted = cursor;
  out.examined = cursor - options.resume_from;
  return out;
}

}  // namespace sc
