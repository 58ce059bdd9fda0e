#include "streamcode/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace sc {

ErasurePattern::ErasurePattern(std::vector<std::uint8_t> flags) : flags_(std::move(flags)) {
  for (auto& f : flags_) f = f ? 1 : 0;
}

ErasurePattern ErasurePattern::from_support(std::size_t horizon, std::span<const std::size_t> support) {
  ErasurePattern p(horizon);
  for (auto t : support) p.set(t);
  return p;
}

ErasurePattern ErasurePattern::from_string(const std::string& bits) {
  ErasurePattern p(bits.size());
  for (std::size_t t = 0; t < bits.size(); ++t) {
    if (bits[t] != '0' && bits[t] != '1') throw std::invalid_argument("pattern flags must be 0 or 1");
    p.flags_[t] = bits[t] == '1';
  }
  return p;
}

void ErasurePattern::set(std::size_t t, bool erased) {
  if (t >= flags_.size()) throw std::out_of_range("erasure slot beyond pattern horizon");
  flags_[t] = erased ? 1 : 0;
}

std::vector<std::size_t> ErasurePattern::support() const {
  std::vector<std::size_t> s;
  for (std::size_t t = 0; t < flags_.size(); ++t)
    if (flags_[t]) s.push_back(t);
  return s;
}

std::size_t ErasurePattern::weight() const {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

std::string ErasurePattern::to_string() const {
  std::string s;
  s.reserve(flags_.size());
  for (auto f : flags_) s.push_back(f ? '1' : '0');
  return s;
}

std::uint64_t ErasurePattern::mask() const {
  std::uint64_t m = 0;
  for (std::size_t t = 0; t < flags_.size(); ++t) {
    if (!flags_[t]) continue;
    if (t >= 64) throw std::out_of_range("pattern too long for a 64-bit mask");
    m |= std::uint64_t{1} << t;
  }
  return m;
}

ErasurePattern ErasurePattern::resized(std::size_t horizon) const {
  auto f = flags_;
  f.resize(horizon, 0);
  return ErasurePattern(std::move(f));
}

ErrorPattern::ErrorPattern(FieldPtr field, std::size_t horizon, std::size_t packet_size)
    : field_(std::move(field)), horizon_(horizon), n_(packet_size), data_(horizon * packet_size, 0) {}

void ErrorPattern::set_packet(std::size_t t, std::span<const std::uint32_t> values) {
  if (t >= horizon_) throw std::out_of_range("error slot beyond pattern horizon");
  if (values.size() != n_) throw std::invalid_argument("error packet has wrong length");
  for (std::size_t j = 0; j < n_; ++j) {
    if (!field_->contains(values[j])) throw std::out_of_range("error value outside field");
    data_[t * n_ + j] = values[j];
  }
}

void ErrorPattern::set(std::size_t t, std::size_t coord, std::uint32_t value) {
  if (t >= horizon_ || coord >= n_) throw std::out_of_range("error index out of range");
  if (!field_->contains(value)) throw std::out_of_range("error value outside field");
  data_[t * n_ + coord] = value;
}

bool ErrorPattern::nonzero(std::size_t t) const {
  if (t >= horizon_) return false;
  for (auto v : packet(t))
    if (v) return true;
  return false;
}

std::vector<std::size_t> ErrorPattern::support() const {
  std::vector<std::size_t> s;
  for (std::size_t t = 0; t < horizon_; ++t)
    if (nonzero(t)) s.push_back(t);
  return s;
}

ErasurePattern ErrorPattern::support_pattern() const {
  auto s = support();
  return ErasurePattern::from_support(horizon_, s);
}

ChannelModel ChannelModel::sw(std::size_t a, std::size_t w) {
  if (w < 1 || a < 1 || a >= w) throw std::invalid_argument("(a,w)-SW needs 1 <= a < w");
  return {ChannelKind::sw, a, 0, 0, w};
}

ChannelModel ChannelModel::mbsw(std::size_t z, std::size_t b, std::size_t w) {
  if (z < 1 || b < 1) throw std::invalid_argument("(z,b,w)-MBSW needs z >= 1 and b >= 1");
  if (b == 1) return sw(z, w);
  if (z * b >= w) throw std::invalid_argument("(z,b,w)-MBSW needs z*b < w");
  return {ChannelKind::mbsw, 0, z, b, w};
}

ChannelModel ChannelModel::sw_err(std::size_t a, std::size_t w) {
  if (w < 1 || a < 1 || 2 * a >= w) throw std::invalid_argument("(a,w)-SW_ERR needs 1 <= a and 2a < w");
  return {ChannelKind::sw_err, a, 0, 0, w};
}

ChannelModel ChannelModel::mbsw_err(std::size_t z, std::size_t b, std::size_t w) {
  if (z < 1 || b < 1) throw std::invalid_argument("(z,b,w)-MBSW_ERR needs z >= 1 and b >= 1");
  if (b == 1) return sw_err(z, w);
  if (2 * z * b >= w) throw std::invalid_argument("(z,b,w)-MBSW_ERR needs 2*z*b < w");
  return {ChannelKind::mbsw_err, 0, z, b, w};
}

ChannelModel ChannelModel::support_model() const {
  switch (kind) {
    case ChannelKind::sw_err: return {ChannelKind::sw, a, 0, 0, w};
    case ChannelKind::mbsw_err: return {ChannelKind::mbsw, 0, z, b, w};
    default: return *this;
  }
}

ChannelModel ChannelModel::doubled() const {
  switch (kind) {
    case ChannelKind::sw_err: return sw(2 * a, w);
    case ChannelKind::mbsw_err: return mbsw(2 * z, b, w);
    default: throw std::logic_error("doubling applies to error channels only");
  }
}

bool ChannelModel::admits(const ErasurePattern& p) const {
  if (is_burst()) return is_admissible_mbsw(p, z, b, w);
  return is_admissible_sw(p, a, w);
}

std::string ChannelModel::to_string() const {
  auto s = [](std::size_t v) { return std::to_string(v); };
  switch (kind) {
    case ChannelKind::sw: return "(" + s(a) + "," + s(w) + ")-SW";
    case ChannelKind::mbsw: return "(" + s(z) + "," + s(b) + "," + s(w) + ")-MBSW";
    case ChannelKind::sw_err: return "(" + s(a) + "," + s(w) + ")-SW_ERR";
    case ChannelKind::mbsw_err: return "(" + s(z) + "," + s(b) + "," + s(w) + ")-MBSW_ERR";
  }
  return "?";
}

std::size_t greedy_burst_count(std::span<const std::uint8_t> flags, std::size_t b) {
  std::size_t count = 0;
  std::size_t t = 0;
  while (t < flags.size()) {
    if (flags[t]) {
      ++count;
      t += b;
    } else {
      ++t;
    }
  }
  return count;
}

bool is_admissible_sw(const ErasurePattern& p, std::size_t a, std::size_t w) {
  if (w < 1) throw std::invalid_argument("window length must be positive");
  const auto f = p.flags();
  std::size_t in_window = 0;
  // sliding count over [t, t+w-1], zero-padded past the horizon
  for (std::size_t t = 0; t < f.size() && t < w; ++t) in_window += f[t];
  if (in_window > a) return false;
  for (std::size_t t = 1; t < f.size(); ++t) {
    in_window -= f[t - 1];
    if (t + w - 1 < f.size()) in_window += f[t + w - 1];
    if (in_window > a) return false;
  }
  return true;
}

bool is_admissible_mbsw(const ErasurePattern& p, std::size_t z, std::size_t b, std::size_t w) {
  if (w < 1) throw std::invalid_argument("window length must be positive");
  const auto f = p.flags();
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (!f[t]) continue;  // a window starting on a clear slot is covered by the next start
    const std::size_t len = std::min(w, f.size() - t);
    if (greedy_burst_count(f.subspan(t, len), b) > z) return false;
  }
  return true;
}

namespace {

using SuffixOk = std::function<bool(std::span<const std::uint8_t>)>;

// Depth-first lexicographic walk; `window_ok` judges the trailing window ending at the newest slot.
bool walk(std::vector<std::uint8_t>& flags, std::size_t t, std::size_t limit, std::size_t w,
          const SuffixOk& window_ok, const std::function<bool(const ErasurePattern&)>& visit) {
  if (t == flags.size()) return visit(ErasurePattern(flags));
  const std::size_t start = t + 1 >= w ? t + 1 - w : 0;
  for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
    if (v && t > limit) break;
    flags[t] = v;
    if (v && !window_ok(std::span<const std::uint8_t>(flags).subspan(start, t - start + 1))) continue;
    if (!walk(flags, t + 1, limit, w, window_ok, visit)) {
      flags[t] = 0;
      return false;
    }
  }
  flags[t] = 0;
  return true;
}

SuffixOk window_predicate(const ChannelModel& m) {
  if (m.is_burst()) {
    const std::size_t z = m.z, b = m.b;
    return [z, b](std::span<const std::uint8_t> win) { return greedy_burst_count(win, b) <= z; };
  }
  const std::size_t a = m.a;
  return [a](std::span<const std::uint8_t> win) {
    return static_cast<std::size_t>(std::count(win.begin(), win.end(), std::uint8_t{1})) <= a;
  };
}

}  // namespace

void for_each_admissible(const ChannelModel& model, std::size_t horizon, std::optional<std::size_t> support_bound,
                         const std::function<bool(const ErasurePattern&)>& visit) {
  const ChannelModel m = model.support_model();
  std::vector<std::uint8_t> flags(horizon, 0);
  const std::size_t limit = support_bound.value_or(horizon ? horizon - 1 : 0);
  walk(flags, 0, limit, m.w, window_predicate(m), visit);
}

std::vector<ErasurePattern> enumerate_admissible(const ChannelModel& model, std::size_t horizon,
                                                 std::optional<std::size_t> support_bound) {
  std::vector<ErasurePattern> out;
  for_each_admissible(model, horizon, support_bound, [&](const ErasurePattern& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::size_t count_admissible(const ChannelModel& model, std::size_t horizon,
                             std::optional<std::size_t> support_bound) {
  std::size_t count = 0;
  for_each_admissible(model, horizon, support_bound, [&](const ErasurePattern&) {
    ++count;
    return true;
  });
  return count;
}

namespace {

std::vector<ErasurePattern> nonempty_family(std::size_t n, const SuffixOk& ok) {
  std::vector<ErasurePattern> out;
  std::vector<std::uint8_t> flags(n, 0);
  walk(flags, 0, n ? n - 1 : 0, n, ok, [&](const ErasurePattern& p) {
    if (p.weight()) out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace

std::vector<ErasurePattern> burst_family(std::size_t n, std::size_t z, std::size_t b) {
  if (z < 1 || b < 1) throw std::invalid_argument("burst family needs z >= 1 and b >= 1");
  return nonempty_family(n, [z, b](std::span<const std::uint8_t> win) { return greedy_burst_count(win, b) <= z; });
}

std::vector<ErasurePattern> random_erasure_family(std::size_t n, std::size_t a) {
  return nonempty_family(n, [a](std::span<const std::uint8_t> win) {
    return static_cast<std::size_t>(std::count(win.begin(), win.end(), std::uint8_t{1})) <= a;
  });
}

std::vector<ErasurePattern> block_family(const ChannelModel& model, std::size_t n) {
  std::vector<ErasurePattern> out;
  for_each_admissible(model, n, std::nullopt, [&](const ErasurePattern& p) {
    if (p.weight()) out.push_back(p);
    return true;
  });
  return out;
}

ErasurePattern error_to_erasure(const ErrorPattern& e, const ErrorPattern& e_tilde) {
  if (e.horizon() != e_tilde.horizon() || e.packet_size() != e_tilde.packet_size())
    throw std::invalid_argument("error patterns differ in shape");
  if (!same_field(*e.field(), *e_tilde.field())) throw FieldMismatch("error patterns over different fields");
  const Field& f = *e.field();
  ErasurePattern out(e.horizon());
  for (std::size_t t = 0; t < e.horizon(); ++t) {
    auto x = e.packet(t);
    auto y = e_tilde.packet(t);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (f.sub(x[j], y[j]) != 0) {
        out.set(t);
        break;
      }
  }
  return out;
}

std::pair<ErrorPattern, ErrorPattern> erasure_to_error_split(const ErasurePattern& p, std::size_t packet_size,
                                                             const FieldPtr& field) {
  if (packet_size < 1) throw std::invalid_argument("packet size must be positive");
  ErrorPattern even(field, p.horizon(), packet_size);
  ErrorPattern odd(field, p.horizon(), packet_size);
  const auto support = p.support();
  for (std::size_t j = 0; j < support.size(); ++j) (j % 2 == 0 ? even : odd).set(support[j], 0, 1);
  return {std::move(even), std::move(odd)};
}

ErasurePattern periodic_mbsw_pattern(std::size_t z, std::size_t b, std::size_t w, std::size_t periods) {
  if (z < 1 || b < 1 || w <= z * b) throw std::invalid_argument("periodic pattern needs w > z*b");
  const std::size_t period = w - 1 + b;
  ErasurePattern p(period * periods);
  for (std::size_t r = 0; r < periods; ++r)
    for (std::size_t s = 0; s < z * b; ++s) p.set(r * period + s);
  return p;
}

}  // namespace sc
