#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "streamcode/channel.hpp"
#include "streamcode/galois.hpp"
#include "streamcode/matrix.hpp"

namespace sc {

/// How a code was built; carried into code descriptors.
struct Construction {
  std::string tag = "explicit";
  std::vector<std::pair<std::string, std::int64_t>> params;

  bool operator==(const Construction&) const = default;
};

/// [n,k] systematic code with G = [I_k | P] and H = [-P^T | I_{n-k}].
class SystematicCode {
 public:
  SystematicCode(std::size_t n, std::size_t k, FieldMatrix parity, Construction construction = {});

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const FieldPtr& field() const { return parity_.field(); }
  /// P, k x (n-k).
  const FieldMatrix& parity() const { return parity_; }
  const FieldMatrix& generator() const { return generator_; }
  /// H in systematic form, (n-k) x n.
  const FieldMatrix& parity_check() const { return parity_check_; }
  const Construction& construction() const { return construction_; }

  FieldVector encode(const FieldVector& message) const;

  bool operator==(const SystematicCode& o) const { return n_ == o.n_ && k_ == o.k_ && parity_ == o.parity_; }

 private:
  std::size_t n_;
  std::size_t k_;
  FieldMatrix parity_;
  FieldMatrix generator_;
  FieldMatrix parity_check_;
  Construction construction_;
};

/// [n,k] code with G = [U | P], U upper-triangular with nonzero diagonal.
class CausalCode {
 public:
  explicit CausalCode(FieldMatrix generator);

  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const FieldPtr& field() const { return generator_.field(); }
  const FieldMatrix& generator() const { return generator_; }

 private:
  FieldMatrix generator_;
};

struct BurstSpec {
  std::size_t z = 1;
  std::size_t b = 1;
};

std::size_t delay_tau_star(std::size_t k, std::size_t z, std::size_t b);

enum class MdsKind { vandermonde, cauchy };

/// Systematic [n,k] MDS code. Needs q >= n except for the k = 1 and k = n-1
/// cases (repetition / single parity), which exist over every field.
SystematicCode build_mds(std::size_t n, std::size_t k, const FieldPtr& field, MdsKind kind = MdsKind::vandermonde);

/// [k+zb, k] code: a [k/b+z, k/b] MDS code interleaved to depth b, so slot
/// j*b+r carries symbol j of component r. Needs b | k.
SystematicCode build_multi_burst(std::size_t k, std::size_t z, std::size_t b, const FieldPtr& field);

/// G_hat = U^{-1} G; same code, systematic generator.
SystematicCode causal_to_systematic(const CausalCode& code);

struct Counterexample {
  ErasurePattern pattern;
  std::size_t pattern_index = 0;
  std::size_t symbol = 0;  // erased message position that cannot be recovered in time
};

struct VerifyResult {
  bool decodable = true;
  std::optional<Counterexample> counterexample;
  std::size_t patterns_checked = 0;
};

/// Delay-tau check for one code, reusable across patterns. For an erased
/// message position i it tests H^(i)_i against the span of the other erased
/// columns of H^(i) (columns past tau+i are punctured away).
class DelayChecker {
 public:
  DelayChecker(const SystematicCode& code, std::size_t tau);

  /// Smallest erased message position not recoverable within the delay, if any.
  std::optional<std::size_t> first_failure(const ErasurePattern& pattern) const;
  std::optional<std::size_t> first_failure(std::uint64_t erased_mask) const;
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::size_t k_;
  const Field* field_;
  FieldPtr keep_alive_;
  // columns_[i][j] holds column j of H^(i).
  std::vector<std::vector<std::vector<std::uint32_t>>> columns_;
};

/// True iff every pattern is delay-tau decodable (k <= tau <= n-1). The
/// reported counterexample is the first failing pattern in sequence order.
VerifyResult verify_delay_decodable(const SystematicCode& code, std::size_t tau,
                                    std::span<const ErasurePattern> patterns);
VerifyResult verify_delay_decodable_serial(const SystematicCode& code, std::size_t tau,
                                           std::span<const ErasurePattern> patterns);

/// Same question answered from an arbitrary generator: for each erased
/// position i < k, c_i must be recoverable from the unerased symbols in
/// [0, min(i+tau, n-1)], tested on the dual of the punctured code built by
/// shortening a nullspace basis. Valid for any tau and for causal codes.
VerifyResult verify_delay_decodable_general(const FieldMatrix& generator, std::size_t tau,
                                            std::span<const ErasurePattern> patterns);

/// Nonzero codeword c with c_i != 0 and c_j = 0 on every unerased j <= min(i+tau, n-1),
/// i.e. a certificate that message symbol i is lost; nullopt if none exists.
std::optional<FieldVector> undecodable_witness(const SystematicCode& code, std::size_t tau,
                                               const ErasurePattern& pattern, std::size_t i);

/// rank(H([lb:(l+1)b-1], [j:j+b-1])) == b for l in [0, z-1], j in [0, k-b]. Needs n = k+zb.
bool check_full_rank_property(const SystematicCode& code, std::size_t z, std::size_t b);

struct TwoRowWindowProperties {
  bool p1 = false;  // A(i, [0:b-2]) = 0
  bool p2 = false;  // no row has b consecutive zeros
  bool p3 = false;  // rank(A(:, [j:j+b-1])) = 1 for j in [b-1, (m-1)b]
  bool p4 = false;  // rank(A(:, [j:j+2b-1])) = 2 for j in [0, (m-2)b]
  bool conclusion_holds = false;  // both entries of the last column nonzero

  bool premises() const { return p1 && p2 && p3 && p4; }
};

/// Evaluates the four premises and the conclusion on a 2 x mb matrix (b, m >= 2).
TwoRowWindowProperties check_two_row_window_matrix(const FieldMatrix& a, std::size_t b, std::size_t m);

}  // namespace sc
