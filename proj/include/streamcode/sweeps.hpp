#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "streamcode/block_code.hpp"
#include "streamcode/channel.hpp"
#include "streamcode/streaming.hpp"

namespace sc {

/// Tally of end-to-end simulations over a pattern family.
struct SweepResult {
  std::size_t patterns = 0;
  std::size_t exact = 0;      // every payload packet recovered correctly by its deadline
  std::size_t ambiguous = 0;  // error decoder signalled ambiguity
  std::size_t failed = 0;     // any other miss
  std::optional<std::size_t> first_failure;

  bool operator==(const SweepResult&) const = default;
};

/// Uniform random messages, reproducible from the seed.
FieldMatrix random_messages(const FieldPtr& field, std::size_t count, std::size_t k, std::uint64_t seed);

struct ErasureSweepOptions {
  std::size_t horizon = 15;
  std::optional<std::size_t> support_bound;  // last slot that may be erased
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Simulates every admissible erasure pattern of the model over the horizon.
SweepResult erasure_sweep(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                          const ErasureSweepOptions& options = {});

enum class ErrorValues {
  unit_multiples,  // every packet alpha * e_c, alpha != 0, all combinations
  random,          // `samples` random nonzero packets per support
};

struct ErrorSweepOptions {
  std::size_t horizon = 10;
  std::optional<std::size_t> support_bound;
  ErrorValues values = ErrorValues::unit_multiples;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  bool parallel = true;
  std::uint64_t max_cases = std::uint64_t{1} << 24;
};

/// Simulates error patterns on every support admissible in the error model.
SweepResult error_sweep(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                        const ErrorSweepOptions& options = {});

}  // namespace sc
