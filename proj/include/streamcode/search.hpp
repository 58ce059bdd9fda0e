#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "streamcode/block_code.hpp"
#include "streamcode/channel.hpp"

namespace sc {

/// Codeword-consistency oracle: message symbol i is recoverable iff every
/// codeword vanishing on the unerased positions <= i+tau has u_i = 0 (by
/// linearity, the same as all codewords agreeing with the received symbols
/// agreeing on u_i). Enumerates all q^k messages; needs q^k <= 2^20.
bool brute_force_decodable(const SystematicCode& code, std::size_t tau, const ErasurePattern& pattern);

struct CrossValidation {
  bool agree = true;
  std::size_t patterns = 0;
  std::size_t disagreements = 0;
  std::optional<std::size_t> first_disagreement;
};

/// Runs verify-style checking and the brute-force oracle on every pattern.
CrossValidation cross_validate(const SystematicCode& code, std::size_t tau, std::span<const ErasurePattern> patterns);

/// P matrix of candidate `index`: base-q digits, row-major, first entry most significant.
FieldMatrix candidate_parity(std::uint64_t index, std::size_t k, std::size_t r, const FieldPtr& field);

struct SearchOptions {
  std::uint64_t resume_from = 0;
  std::uint64_t max_space = std::uint64_t{1} << 24;
  std::uint64_t block = std::uint64_t{1} << 14;  // candidates between progress reports
  bool parallel = true;
  /// Called after each block with the cursor (next unexamined index) and the space size.
  std::function<void(std::uint64_t cursor, std::uint64_t space)> progress;
};

struct SearchResult {
  bool found = false;
  std::optional<SystematicCode> witness;
  std::optional<std::uint64_t> witness_index;
  std::uint64_t space = 0;
  std::uint64_t exhausted = 0;  // cursor reached: every index below it was examined
  std::uint64_t examined = 0;   // candidates examined by this run
};

/// Looks for a systematic [n,k] code (n = k+zb) over the field that is delay-tau
/// decodable for every (z,b)-burst. Returns the smallest passing candidate.
SearchResult search_nonexistence(std::size_t n, std::size_t k, std::size_t z, std::size_t b, std::size_t tau,
                                 const FieldPtr& field, const SearchOptions& options = {});

/// (z,b)-burst family reordered so the two-burst shapes [0:b-1] u [j:j+b-1] come first.
std::vector<ErasurePattern> search_pattern_order(std::size_t n, std::size_t z, std::size_t b);

}  // namespace sc
