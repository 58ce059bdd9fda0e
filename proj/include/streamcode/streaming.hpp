#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "streamcode/block_code.hpp"
#include "streamcode/channel.hpp"
#include "streamcode/matrix.hpp"

namespace sc {

/// Message packets u(t) (rows of `messages`, k wide) and coded packets x(t)
/// (rows of `packets`, n wide) for t in [0, horizon). The first `payload`
/// messages are the caller's; the rest are the zero flush tail.
struct PacketStream {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t payload = 0;
  FieldMatrix messages;
  FieldMatrix packets;

  const FieldPtr& field() const { return packets.field(); }
  std::size_t horizon() const { return packets.rows(); }
};

/// Diagonal embedding: symbol j of the codeword starting at time d goes to
/// x_j(d+j), its message symbol i is u_i(d+i). Messages before t=0 are zero.
/// `tail` zero messages are appended so late diagonals can complete.
PacketStream de_encode(const SystematicCode& code, const FieldMatrix& messages, std::size_t tail = 0);

/// Tail length that lets every payload packet reach its deadline: max(tau, n-1).
std::size_t flush_length(const SystematicCode& code, std::size_t tau);

/// y(t) = x(t) + e(t); slots past the error horizon are left untouched.
PacketStream add_errors(const PacketStream& stream, const ErrorPattern& errors);

struct PacketOutcome {
  std::size_t t = 0;
  bool recovered = false;
  std::optional<std::size_t> time;  // when the decoder committed to u(t)
  std::size_t deadline = 0;
};

struct Failure {
  std::size_t t = 0;
  std::string reason;  // "deadline", "wrong-value", "ambiguous", "inconsistent", "desync"
};

struct DecodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t tau = 0;
  std::string field;
  std::string model;  // empty when no model was declared
  std::size_t payload = 0;
  std::size_t horizon = 0;
  bool admissible = true;  // false flags an input outside the declared model
  std::vector<PacketOutcome> per_packet;
  bool success = true;
  std::vector<Failure> failures;
  std::size_t ambiguities = 0;

  /// Earliest payload packet that was not recovered in time.
  std::optional<std::size_t> first_failure() const;
};

/// Per-codeword erasure decoding over the payload packets of `received`.
/// u_i(t) is decided at the first t' <= t+tau at which the unerased symbols
/// of its diagonal up to time t' pin it down. `received.messages` is read
/// only to score the estimates.
DecodeReport decode_erasures(const SystematicCode& code, std::size_t tau, const PacketStream& received,
                             const ErasurePattern& pattern);

/// Sequential error decoding under an error model. With u(0..t-1) already
/// decided, every support S within [t, t'] that keeps the known past support
/// admissible is tried as an erasure set; the message u(t) is committed at the
/// first t' <= t+tau where every consistent S determines it to the same value.
/// Disagreement at the deadline is reported as ambiguity. After a failure the
/// past error support is unknown, so later packets are marked "desync".
DecodeReport decode_errors(const SystematicCode& code, std::size_t tau, const PacketStream& received,
                           const ChannelModel& model);

using ChannelRealization = std::variant<ErasurePattern, ErrorPattern>;

/// Encode with the flush tail, apply the pattern, decode, score.
DecodeReport simulate(const SystematicCode& code, std::size_t tau, const ChannelModel& model,
                      const ChannelRealization& realization, const FieldMatrix& messages);

}  // namespace sc
