#include "streamcode/galois.hpp"

#include <algorithm>
#include <bit>

namespace sc {

namespace {

unsigned degree(std::uint32_t poly) { return poly ? std::bit_width(poly) - 1 : 0; }

std::uint32_t gf2_poly_mod(std::uint32_t a, std::uint32_t m) {
  const unsigned dm = degree(m);
  while (a && degree(a) >= dm) a ^= m << (degree(a) - dm);
  return a;
}

}  // namespace

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool Field::is_irreducible_gf2(std::uint32_t poly) {
  const unsigned d = degree(poly);
  if (d == 0) return false;
  if (d == 1) return true;
  // trial division by every polynomial of degree 1..d/2
  for (std::uint32_t f = 2; degree(f) <= d / 2; ++f)
    if (gf2_poly_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t Field::default_modulus(unsigned m) {
  if (m < 1 || m > 16) throw std::invalid_argument("extension degree must be in [1, 16]");
  for (std::uint32_t f = 1u << m; f < (2u << m); ++f)
    if (is_irreducible_gf2(f)) return f;
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(std::uint32_t p, unsigned m, std::uint32_t modulus)
    : p_(p), m_(m), modulus_(modulus), q_(m == 1 ? p : (1u << m)) {
  build_tables();
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= 256) throw std::invalid_argument("prime field order must be a prime below 256");
  return FieldPtr(new Field(p, 1, 0));
}

FieldPtr Field::binary_extension(unsigned m, std::uint32_t modulus) {
  if (m < 1 || m > 16) throw std::invalid_argument("extension degree must be in [1, 16]");
  if (m == 1) {
    if (modulus != 0) throw std::invalid_argument("GF(2) takes no modulus");
    return prime(2);
  }
  if (modulus == 0) modulus = default_modulus(m);
  if (degree(modulus) != m) throw std::invalid_argument("modulus degree does not match extension degree");
  if (!is_irreducible_gf2(modulus)) throw std::invalid_argument("modulus polynomial is reducible");
  return FieldPtr(new Field(2, m, modulus));
}

FieldPtr Field::of_order(std::uint32_t q) {
  if (q >= 2 && std::has_single_bit(q)) return binary_extension(std::countr_zero(q));
  if (is_prime(q)) return prime(q);
  throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                              " (need a prime below 256 or a power of two up to 2^16)");
}

FieldPtr Field::from_descriptor(std::uint32_t p, unsigned m, std::uint32_t modulus) {
  if (m == 1) {
    if (modulus != 0) throw std::invalid_argument("prime field descriptor must carry modulus 0");
    return prime(p);
  }
  if (p != 2) throw std::invalid_argument("extension fields are supported in characteristic 2 only");
  if (modulus == 0) throw std::invalid_argument("extension field descriptor needs a modulus");
  return binary_extension(m, modulus);
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & q_) a ^= modulus_;
  }
  return r;
}

void Field::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    return;
  }
  // first element whose powers cover the whole multiplicative group
  std::vector<std::uint8_t> seen(q_);
  for (std::uint32_t g = 2; g < q_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t x = 1;
    std::uint32_t i = 0;
    for (; i < n; ++i) {
      if (seen[x]) break;
      seen[x] = 1;
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g);
    }
    if (i == n) {
      for (std::uint32_t j = 0; j < n; ++j) exp_[n + j] = exp_[j];
      return;
    }
  }
  throw std::logic_error("multiplicative group has no generator");
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint32_t n = q_ - 1;
  return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * (e % n)) % n)];
}

std::uint32_t Field::element_order(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t x = a;
  std::uint32_t ord = 1;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

FieldElement::FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("null field");
  if (!field_->contains(value)) throw std::out_of_range("value outside field");
}

const Field& FieldElement::checked(const FieldElement& o) const {
  if (!same_field(*field_, *o.field_))
    throw FieldMismatch("operands from " + field_->name() + " and " + o.field_->name());
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, checked(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, checked(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, checked(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, checked(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

std::vector<FieldElement> enumerate(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (std::uint32_t v = 0; v < field->order(); ++v) out.emplace_back(field, v);
  return out;
}

}  // namespace sc
