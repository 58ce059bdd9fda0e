#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace sc {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string to_string() const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct RateBound {
  Rational value;
  std::string context;  // e.g. "(2,5)-SW"

  bool operator==(const RateBound& o) const { return value == o.value; }
};

/// (w-a)/w; needs 0 < a < w.
RateBound rate_sw_erasure(std::size_t a, std::size_t w);
/// (w-2a)/w; needs 0 < 2a < w.
RateBound rate_sw_error(std::size_t a, std::size_t w);
/// (w-1-(z-1)b)/(w-1+b); needs w > zb.
RateBound rate_mbsw_bound(std::size_t z, std::size_t b, std::size_t w);
/// (w-1-(2z-1)b)/(w-1+b); needs w > 2zb.
RateBound rate_mbsw_error_bound(std::size_t z, std::size_t b, std::size_t w);

/// Whether a diagonally embedded block code can meet the MBSW bound: b | (w-1).
/// z == 1 or b == 1 always returns true (optimal constructions are known there).
bool de_achievable(std::size_t z, std::size_t b, std::size_t w);

/// Whether a causal [k+zb, k] code decodes every (z,b)-burst within delay tau.
/// Only answers for k >= b.
bool causal_code_exists(std::size_t k, std::size_t z, std::size_t b, std::size_t tau);

}  // namespace sc
