#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(q), q = p (prime, p < 256) or q = 2^m (1 <= m <= 16).
///
/// Elements are the integers [0, q-1]. For extension fields an element's bits
/// are the coefficients of a polynomial over GF(2) reduced modulo `modulus()`.
/// Multiplication goes through log/antilog tables built once at construction;
/// a Field is immutable afterwards and safe to share between threads.
class Field {
 public:
  static FieldPtr prime(std::uint32_t p);
  /// modulus == 0 selects default_modulus(m).
  static FieldPtr binary_extension(unsigned m, std::uint32_t modulus = 0);
  /// GF(q) for q prime or a power of two, default modulus.
  static FieldPtr of_order(std::uint32_t q);
  /// {p, m, modulus} as stored in code descriptors; modulus is 0 for prime fields.
  static FieldPtr from_descriptor(std::uint32_t p, unsigned m, std::uint32_t modulus);

  /// Smallest (as an integer) irreducible polynomial of degree m over GF(2).
  static std::uint32_t default_modulus(unsigned m);
  static bool is_irreducible_gf2(std::uint32_t poly);

  std::uint32_t characteristic() const { return p_; }
  unsigned extension_degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return q_; }
  /// A generator of the multiplicative group.
  std::uint32_t primitive_element() const { return q_ == 2 ? 1 : exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2 || a == 0) return a;
    return p_ - a;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t element_order(std::uint32_t a) const;

  bool contains(std::uint32_t v) const { return v < q_; }
  std::string name() const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  Field(std::uint32_t p, unsigned m, std::uint32_t modulus);
  void build_tables();
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[i] = g^i
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
};

bool same_field(const Field& a, const Field& b);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t value);

  std::uint32_t value() const { return value_; }
  const FieldPtr& field() const { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool is_zero() const { return value_ == 0; }

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && same_field(*field_, *o.field_);
  }

 private:
  const Field& checked(const FieldElement& o) const;

  FieldPtr field_;
  std::uint32_t value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
/// All q elements in ascending value order.
std::vector<FieldElement> enumerate(const FieldPtr& field);

bool is_prime(std::uint32_t v);

}  // namespace sc
