#include "streamcode/streaming.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sc {

namespace {

using i64 = std::int64_t;

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* what) {
  if (!same_field(*a, *b)) throw FieldMismatch(std::string(what) + " over a different field than the code");
}

DecodeReport empty_report(const SystematicCode& code, std::size_t tau, const PacketStream& s) {
  DecodeReport r;
  r.n = code.n();
  r.k = code.k();
  r.tau = tau;
  r.field = code.field()->name();
  r.payload = s.payload;
  r.horizon = s.horizon();
  return r;
}

void check_stream(const SystematicCode& code, const PacketStream& s) {
  if (s.n != code.n() || s.k != code.k()) throw std::invalid_argument("stream dimensions do not match the code");
  require_same_field(s.field(), code.field(), "stream");
  if (s.payload > s.horizon()) throw std::invalid_argument("payload longer than the stream");
}

// Coded symbol x_j(t) from (possibly estimated) messages; rows before 0 are zero.
std::uint32_t coded_symbol(const SystematicCode& code, const FieldMatrix& u, i64 t, std::size_t j) {
  const std::size_t k = code.k();
  if (j < k) return t >= 0 ? u(static_cast<std::size_t>(t), j) : 0;
  const Field& f = *code.field();
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const i64 s = t - static_cast<i64>(j) + static_cast<i64>(i);
    if (s < 0) continue;
    acc = f.add(acc, f.mul(code.parity()(i, j - k), u(static_cast<std::size_t>(s), i)));
  }
  return acc;
}

// Scores decisions against the true messages and fills per_packet/failures.
void score(DecodeReport& r, const FieldMatrix& truth, const FieldMatrix& estimate,
           const std::vector<std::optional<std::size_t>>& time, const std::vector<std::string>& reason) {
  for (std::size_t t = 0; t < r.payload; ++t) {
    PacketOutcome o;
    o.t = t;
    o.deadline = t + r.tau;
    o.time = time[t];
    std::string why = reason[t];
    if (o.time) {
      bool same = true;
      for (std::size_t i = 0; i < r.k; ++i) same = same && estimate(t, i) == truth(t, i);
      if (!same) why = "wrong-value";
      else if (*o.time > o.deadline) why = "deadline";
    } else if (why.empty()) {
      why = "deadline";
    }
    o.recovered = why.empty();
    if (!o.recovered) r.failures.push_back({t, why});
    r.per_packet.push_back(o);
  }
  r.success = r.failures.empty();
}

}  // namespace

std::optional<std::size_t> DecodeReport::first_failure() const {
  if (failures.empty()) return std::nullopt;
  return failures.front().t;
}

std::size_t flush_length(const SystematicCode& code, std::size_t tau) { return std::max(tau, code.n() - 1); }

PacketStream de_encode(const SystematicCode& code, const FieldMatrix& messages, std::size_t tail) {
  if (messages.cols() != code.k()) throw std::invalid_argument("message packets must have k symbols");
  require_same_field(messages.field(), code.field(), "messages");
  const std::size_t horizon = messages.rows() + tail;
  FieldMatrix u(code.field(), horizon, code.k());
  for (std::size_t t = 0; t < messages.rows(); ++t)
    for (std::size_t i = 0; i < code.k(); ++i) u(t, i) = messages(t, i);
  FieldMatrix x(code.field(), horizon, code.n());
  for (std::size_t t = 0; t < horizon; ++t)
    for (std::size_t j = 0; j < code.n(); ++j) x(t, j) = coded_symbol(code, u, static_cast<i64>(t), j);
  PacketStream s{code.n(), code.k(), messages.rows(), std::move(u), std::move(x)};
  return s;
}

PacketStream add_errors(const PacketStream& stream, const ErrorPattern& errors) {
  require_same_field(errors.field(), stream.field(), "error pattern");
  if (errors.packet_size() != stream.n) throw std::invalid_argument("error packets must have n symbols");
  PacketStream out = stream;
  const Field& f = *stream.field();
  const std::size_t last = std::min(errors.horizon(), stream.horizon());
  for (std::size_t t = 0; t < last; ++t) {
    auto e = errors.packet(t);
    for (std::size_t j = 0; j < stream.n; ++j) out.packets(t, j) = f.add(out.packets(t, j), e[j]);
  }
  return out;
}

DecodeReport decode_erasures(const SystematicCode& code, std::size_t tau, const PacketStream& received,
                             const ErasurePattern& pattern) {
  check_stream(code, received);
  DecodeReport report = empty_report(code, tau, received);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const i64 horizon = static_cast<i64>(received.horizon());
  const i64 payload = static_cast<i64>(received.payload);
  const FieldMatrix& g = code.generator();

  FieldMatrix estimate(code.field(), received.payload, k);
  // per message symbol: decision time, or none
  std::vector<std::optional<std::size_t>> symbol_time(received.payload * k);

  for (i64 d = -static_cast<i64>(k - 1); d < payload; ++d) {
    // known rows of the per-codeword system: unerased symbols and messages before time 0
    std::vector<std::size_t> known_zero;
    for (std::size_t i = 0; i < k; ++i)
      if (d + static_cast<i64>(i) < 0) known_zero.push_back(i);
    std::vector<std::size_t> avail;
    std::vector<bool> pending(k, false);
    bool any_pending = false;
    for (std::size_t i = 0; i < k; ++i) {
      const i64 t = d + static_cast<i64>(i);
      if (t < 0 || t >= payload) continue;
      if (!pattern.erased(static_cast<std::size_t>(t))) {
        estimate(static_cast<std::size_t>(t), i) = received.packets(static_cast<std::size_t>(t), i);
        symbol_time[static_cast<std::size_t>(t) * k + i] = static_cast<std::size_t>(t);
      } else {
        pending[i] = true;
        any_pending = true;
      }
    }
    if (!any_pending) continue;

    const i64 last = std::min(d + static_cast<i64>(k - 1 + tau), horizon - 1);
    for (i64 now = std::max<i64>(d, 0); now <= last && any_pending; ++now) {
      const i64 j_new = now - d;
      if (j_new >= static_cast<i64>(n) || pattern.erased(static_cast<std::size_t>(now))) continue;
      avail.push_back(static_cast<std::size_t>(j_new));

      const std::size_t rows = avail.size() + known_zero.size();
      FieldMatrix a(code.field(), rows, k);
      FieldVector rhs(code.field(), rows);
      std::size_t r = 0;
      for (std::size_t j : avail) {
        for (std::size_t i = 0; i < k; ++i) a(r, i) = g(i, j);
        rhs[r++] = received.packets(static_cast<std::size_t>(d + static_cast<i64>(j)), j);
      }
      for (std::size_t i : known_zero) a(r++, i) = 1;
      const auto sol = solve_with_uniqueness(a, rhs);
      if (!sol) continue;  // corrupted input; nothing to conclude
      any_pending = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!pending[i]) continue;
        const i64 t = d + static_cast<i64>(i);
        if (sol->determined[i] && now <= t + static_cast<i64>(tau)) {
          estimate(static_cast<std::size_t>(t), i) = sol->x[i];
          symbol_time[static_cast<std::size_t>(t) * k + i] = static_cast<std::size_t>(std::max(now, t));
          pending[i] = false;
        } else {
          any_pending = true;
        }
      }
    }
  }

  std::vector<std::optional<std::size_t>> time(received.payload);
  for (std::size_t t = 0; t < received.payload; ++t) {
    std::size_t worst = t;
    bool all = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& st = symbol_time[t * k + i];
      if (!st) all = false;
      else worst = std::max(worst, *st);
    }
    if (all) time[t] = worst;
  }
  score(report, received.messages, estimate, time, std::vector<std::string>(received.payload));
  return report;
}

DecodeReport decode_errors(const SystematicCode& code, std::size_t tau, const PacketStream& received,
                           const ChannelModel& model) {
  check_stream(code, received);
  DecodeReport report = empty_report(code, tau, received);
  report.model = model.to_string();
  const ChannelModel support = model.support_model();
  const Field& f = *code.field();
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t horizon = received.horizon();
  const FieldMatrix& p = code.parity();

  FieldMatrix estimate(code.field(), horizon, k);
  std::vector<std::uint8_t> past(horizon, 0);  // decided error support before t
  std::vector<std::optional<std::size_t>> time(received.payload);
  std::vector<std::string> reason(received.payload);
  bool desync = false;

  for (std::size_t t = 0; t < received.payload; ++t) {
    if (desync) {
      reason[t] = "desync";
      continue;
    }
    const std::size_t last = std::min(t + tau, horizon - 1);
    bool decided = false;
    std::string why = "ambiguous";
    for (std::size_t now = t; now <= last && !decided; ++now) {
      const std::size_t span = now - t + 1;
      const std::size_t unknowns = span * k;
      std::optional<std::vector<std::uint32_t>> agreed;
      bool consistent_any = false;
      bool unanimous = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << span) && unanimous; ++mask) {
        std::vector<std::uint8_t> flags(past.begin(), past.begin() + static_cast<std::ptrdiff_t>(t));
        for (std::size_t s = 0; s < span; ++s) flags.push_back((mask >> s) & 1);
        if (!support.admits(ErasurePattern(std::move(flags)))) continue;

        const std::size_t clear = span - static_cast<std::size_t>(__builtin_popcountll(mask));
        FieldMatrix a(code.field(), clear * n, unknowns);
        FieldVector rhs(code.field(), clear * n);
        std::size_t r = 0;
        for (std::size_t s = t; s <= now; ++s) {
          if ((mask >> (s - t)) & 1) continue;
          for (std::size_t j = 0; j < n; ++j, ++r) {
            std::uint32_t known = 0;
            auto term = [&](std::size_t i, std::uint32_t coeff) {
              const i64 src = static_cast<i64>(s) - static_cast<i64>(j) + static_cast<i64>(i);
              if (src < 0) return;
              if (src < static_cast<i64>(t)) {
                known = f.add(known, f.mul(coeff, estimate(static_cast<std::size_t>(src), i)));
              } else {
                a(r, (static_cast<std::size_t>(src) - t) * k + i) = coeff;
              }
            };
            if (j < k) {
              term(j, 1);
            } else {
              for (std::size_t i = 0; i < k; ++i)
                if (p(i, j - k)) term(i, p(i, j - k));
            }
            rhs[r] = f.sub(received.packets(s, j), known);
          }
        }
        const auto sol = solve_with_uniqueness(a, rhs);
        if (!sol) continue;
        consistent_any = true;
        std::vector<std::uint32_t> value(k);
        for (std::size_t i = 0; i < k; ++i) {
          if (!sol->determined[i]) unanimous = false;
          value[i] = sol->x[i];
        }
        if (!unanimous) break;
        if (!agreed) agreed = value;
        else if (*agreed != value) unanimous = false;
      }
      if (!consistent_any) {
        why = "inconsistent";
        break;
      }
      if (unanimous && agreed) {
        for (std::size_t i = 0; i < k; ++i) estimate(t, i) = (*agreed)[i];
        time[t] = now;
        decided = true;
      }
    }
    if (!decided) {
      reason[t] = why;
      if (why == "ambiguous") ++report.ambiguities;
      desync = true;
      continue;
    }
    bool corrupted = false;
    for (std::size_t j = 0; j < n; ++j)
      corrupted = corrupted || coded_symbol(code, estimate, static_cast<i64>(t), j) != received.packets(t, j);
    past[t] = corrupted ? 1 : 0;
  }

  FieldMatrix payload_estimate(code.field(), received.payload, k);
  for (std::size_t t = 0; t < received.payload; ++t)
    for (std::size_t i = 0; i < k; ++i) payload_estimate(t, i) = estimate(t, i);
  score(report, received.messages, payload_estimate, time, reason);
  return report;
}

DecodeReport simulate(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                      const ChannelRealization& realization, const FieldMatrix& messages) {
  const PacketStream clean = de_encode(code, messages, flush_length(code, tau));
  if (const auto* erasures = std::get_if<ErasurePattern>(&realization)) {
    if (model.is_error()) throw std::invalid_argument("erasure pattern given for an error model");
    DecodeReport r = decode_erasures(code, tau, clean, *erasures);
    r.model = model.to_string();
    r.admissible = model.admits(*erasures);
    return r;
  }
  const auto& errors = std::get<ErrorPattern>(realization);
  if (!model.is_error()) throw std::invalid_argument("error pattern given for an erasure model");
  DecodeReport r = decode_errors(code, tau, add_errors(clean, errors), model);
  r.admissible = model.admits(errors.support_pattern());
  return r;
}

}  // namespace sc
