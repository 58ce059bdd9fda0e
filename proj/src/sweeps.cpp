#include "streamcode/sweeps.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "streamcode/omp_kernels.hpp"

namespace sc {

namespace {

enum Status : std::uint8_t { exact = 0, ambiguous = 1, failed = 2 };

Status classify(const DecodeReport& r) {
  if (r.success) return exact;
  return r.ambiguities ? ambiguous : failed;
}

SweepResult tally(const std::vector<std::uint8_t>& status) {
  SweepResult out;
  out.patterns = status.size();
  for (std::size_t i = 0; i < status.size(); ++i) {
    switch (status[i]) {
      case exact: ++out.exact; break;
      case ambiguous: ++out.ambiguous; break;
      default: ++out.failed; break;
    }
    if (status[i] != exact && !out.first_failure) out.first_failure = i;
  }
  return out;
}

template <class Fn>
void run(bool parallel, std::size_t count, Fn&& fn) {
  if (parallel) parallel_for(count, fn);
  else serial_for(count, fn);
}

}  // namespace

FieldMatrix random_messages(const FieldPtr& field, std::size_t count, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, field->order() - 1);
  FieldMatrix m(field, count, k);
  for (std::size_t t = 0; t < count; ++t)
    for (std::size_t i = 0; i < k; ++i) m(t, i) = pick(rng);
  return m;
}

SweepResult erasure_sweep(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                          const ErasureSweepOptions& options) {
  if (model.is_error()) throw std::invalid_argument("erasure sweep needs an erasure model");
  const auto patterns = enumerate_admissible(model, options.horizon, options.support_bound);
  const FieldMatrix messages = random_messages(code.field(), options.horizon, code.k(), options.seed);
  std::vector<std::uint8_t> status(patterns.size());
  run(options.parallel, patterns.size(),
      [&](std::size_t i) { status[i] = classify(simulate(code, tau, model, patterns[i], messages)); });
  return tally(status);
}

SweepResult error_sweep(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                        const ErrorSweepOptions& options) {
  if (!model.is_error()) throw std::invalid_argument("error sweep needs an error model");
  const auto supports = enumerate_admissible(model, options.horizon, options.support_bound);
  const FieldPtr& field = code.field();
  const std::size_t n = code.n();
  const std::uint64_t q = field->order();
  const std::uint64_t per_slot = (q - 1) * n;

  // cases per support, then prefix offsets into one flat index space
  std::vector<std::uint64_t> offset{0};
  for (const auto& s : supports) {
    std::uint64_t c = options.values == ErrorValues::random ? options.samples : 1;
    if (options.values == ErrorValues::unit_multiples) {
      for (std::size_t i = 0; i < s.weight(); ++i) {
        if (c > options.max_cases / per_slot) throw std::invalid_argument("error sweep exceeds the case guard");
        c *= per_slot;
      }
    }
    if (offset.back() + c > options.max_cases) throw std::invalid_argument("error sweep exceeds the case guard");
    offset.push_back(offset.back() + c);
  }
  const std::size_t total = static_cast<std::size_t>(offset.back());
  const FieldMatrix messages = random_messages(field, options.horizon, code.k(), options.seed);

  std::vector<std::uint8_t> status(total);
  run(options.parallel, total, [&](std::size_t idx) {
    const auto it = std::upper_bound(offset.begin(), offset.end(), idx) - 1;
    const auto si = static_cast<std::size_t>(it - offset.begin());
    std::uint64_t local = idx - *it;
    const auto slots = supports[si].support();
    ErrorPattern e(field, options.horizon, n);
    if (options.values == ErrorValues::unit_multiples) {
      for (std::size_t t : slots) {
        const std::uint64_t d = local % per_slot;
        local /= per_slot;
        e.set(t, static_cast<std::size_t>(d / (q - 1)), static_cast<std::uint32_t>(d % (q - 1) + 1));
      }
    } else {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(si), local};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
      for (std::size_t t : slots) {
        std::vector<std::uint32_t> packet(n, 0);
        while (std::all_of(packet.begin(), packet.end(), [](std::uint32_t v) { return v == 0; }))
          for (auto& v : packet) v = pick(rng);
        e.set_packet(t, packet);
      }
    }
    status[idx] = classify(simulate(code, tau, model, e, messages));
  });
  return tally(status);
}

}  // namespace sc
