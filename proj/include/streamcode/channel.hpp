#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "streamcode/galois.hpp"
#include "streamcode/matrix.hpp"

namespace sc {

/// Finite prefix e_0..e_{T-1} of an erasure pattern; slots past the horizon read as unerased.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  explicit ErasurePattern(std::size_t horizon) : flags_(horizon, 0) {}
  explicit ErasurePattern(std::vector<std::uint8_t> flags);
  static ErasurePattern from_support(std::size_t horizon, std::span<const std::size_t> support);
  /// "10010" style, one character per slot.
  static ErasurePattern from_string(const std::string& bits);

  std::size_t horizon() const { return flags_.size(); }
  bool erased(std::size_t t) const { return t < flags_.size() && flags_[t]; }
  void set(std::size_t t, bool erased = true);
  std::span<const std::uint8_t> flags() const { return flags_; }
  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  std::string to_string() const;
  /// Bit t set iff slot t erased; horizon must be <= 64.
  std::uint64_t mask() const;
  ErasurePattern resized(std::size_t horizon) const;

  auto operator<=>(const ErasurePattern&) const = default;

 private:
  std::vector<std::uint8_t> flags_;
};

/// Packet error realization: e(t) in GF(q)^n for t in [0, T-1].
class ErrorPattern {
 public:
  ErrorPattern(FieldPtr field, std::size_t horizon, std::size_t packet_size);

  const FieldPtr& field() const { return field_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t packet_size() const { return n_; }
  std::span<const std::uint32_t> packet(std::size_t t) const { return {data_.data() + t * n_, n_}; }
  void set_packet(std::size_t t, std::span<const std::uint32_t> values);
  void set(std::size_t t, std::size_t coord, std::uint32_t value);
  bool nonzero(std::size_t t) const;
  std::vector<std::size_t> support() const;
  /// e_t = 1 iff e(t) != 0.
  ErasurePattern support_pattern() const;

  bool operator==(const ErrorPattern& o) const {
    return horizon_ == o.horizon_ && n_ == o.n_ && data_ == o.data_ && same_field(*field_, *o.field_);
  }

 private:
  FieldPtr field_;
  std::size_t horizon_;
  std::size_t n_;
  std::vector<std::uint32_t> data_;
};

enum class ChannelKind { sw, mbsw, sw_err, mbsw_err };

/// Adversarial sliding-window channel: (a,w)-SW, (z,b,w)-MBSW and their error variants.
struct ChannelModel {
  ChannelKind kind = ChannelKind::sw;
  std::size_t a = 0;  // SW kinds
  std::size_t z = 0;  // MBSW kinds
  std::size_t b = 0;
  std::size_t w = 0;

  static ChannelModel sw(std::size_t a, std::size_t w);
  /// b == 1 normalizes to sw(z, w).
  static ChannelModel mbsw(std::size_t z, std::size_t b, std::size_t w);
  static ChannelModel sw_err(std::size_t a, std::size_t w);
  static ChannelModel mbsw_err(std::size_t z, std::size_t b, std::size_t w);

  bool is_error() const { return kind == ChannelKind::sw_err || kind == ChannelKind::mbsw_err; }
  bool is_burst() const { return kind == ChannelKind::mbsw || kind == ChannelKind::mbsw_err; }
  /// Same window constraint applied to erasures: SW_ERR(a,w) -> SW(a,w), MBSW_ERR -> MBSW.
  ChannelModel support_model() const;
  /// Erasure model an error-correcting code must handle: SW(2a,w) or MBSW(2z,b,w).
  ChannelModel doubled() const;
  bool admits(const ErasurePattern& p) const;
  std::string to_string() const;

  bool operator==(const ChannelModel&) const = default;
};

/// Number of left-anchored length-b intervals greedy covering needs for the erased slots.
std::size_t greedy_burst_count(std::span<const std::uint8_t> flags, std::size_t b);

bool is_admissible_sw(const ErasurePattern& p, std::size_t a, std::size_t w);
bool is_admissible_mbsw(const ErasurePattern& p, std::size_t z, std::size_t b, std::size_t w);

/// Visits every pattern of horizon T admissible under `model` (support model for
/// error kinds), lexicographically (e_0 most significant, 0 < 1). When
/// support_bound is given, slots beyond it stay unerased. Returning false from
/// the visitor stops the walk.
void for_each_admissible(const ChannelModel& model, std::size_t horizon, std::optional<std::size_t> support_bound,
                         const std::function<bool(const ErasurePattern&)>& visit);
std::vector<ErasurePattern> enumerate_admissible(const ChannelModel& model, std::size_t horizon,
                                                 std::optional<std::size_t> support_bound = std::nullopt);
std::size_t count_admissible(const ChannelModel& model, std::size_t horizon,
                             std::optional<std::size_t> support_bound = std::nullopt);

/// Nonempty supports on [0, n-1] coverable by <= z intervals of length <= b, lexicographic.
std::vector<ErasurePattern> burst_family(std::size_t n, std::size_t z, std::size_t b);
/// Nonempty supports on [0, n-1] with at most a erasures, lexicographic.
std::vector<ErasurePattern> random_erasure_family(std::size_t n, std::size_t a);
/// Nonempty patterns on [0, n-1] admissible under the model, lexicographic.
std::vector<ErasurePattern> block_family(const ChannelModel& model, std::size_t n);

/// e'_t = 1 iff e(t) - e~(t) != 0.
ErasurePattern error_to_erasure(const ErrorPattern& e, const ErrorPattern& e_tilde);

/// Splits the sorted support into even-indexed and odd-indexed slots; each
/// error packet is the unit vector on coordinate 0.
std::pair<ErrorPattern, ErrorPattern> erasure_to_error_split(const ErasurePattern& p, std::size_t packet_size,
                                                             const FieldPtr& field);

/// Period w-1+b: the first z*b slots erased, the remaining w-1-(z-1)b clear.
ErasurePattern periodic_mbsw_pattern(std::size_t z, std::size_t b, std::size_t w, std::size_t periods);

}  // namespace sc
