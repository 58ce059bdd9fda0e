#include "streamcode/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "streamcode/block_code.hpp"

namespace sc {

namespace {

std::string sw_context(std::size_t a, std::size_t w) {
  return "(" + std::to_string(a) + "," + std::to_string(w) + ")-SW";
}

std::string mbsw_context(std::size_t z, std::size_t b, std::size_t w) {
  return "(" + std::to_string(z) + "," + std::to_string(b) + "," + std::to_string(w) + ")-MBSW";
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
}

RateBound rate_sw_erasure(std::size_t a, std::size_t w) {
  if (a == 0 || a >= w) throw std::invalid_argument("SW erasure rate needs 0 < a < w");
  return {Rational(as_int(w - a), as_int(w)), sw_context(a, w)};
}

RateBound rate_sw_error(std::size_t a, std::size_t w) {
  if (a == 0 || 2 * a >= w) throw std::invalid_argument("SW error rate needs 0 < 2a < w");
  return {Rational(as_int(w - 2 * a), as_int(w)), sw_context(a, w) + "_ERR"};
}

RateBound rate_mbsw_bound(std::size_t z, std::size_t b, std::size_t w) {
  if (z == 0 || b == 0 || w <= z * b) throw std::invalid_argument("MBSW bound needs z, b >= 1 and w > zb");
  return {Rational(as_int(w - 1 - (z - 1) * b), as_int(w - 1 + b)), mbsw_context(z, b, w)};
}

RateBound rate_mbsw_error_bound(std::size_t z, std::size_t b, std::size_t w) {
  if (z == 0 || b == 0 || w <= 2 * z * b) throw std::invalid_argument("MBSW error bound needs z, b >= 1 and w > 2zb");
  return {Rational(as_int(w - 1 - (2 * z - 1) * b), as_int(w - 1 + b)), mbsw_context(z, b, w) + "_ERR"};
}

bool de_achievable(std::size_t z, std::size_t b, std::size_t w) {
  if (z == 0 || b == 0 || w <= z * b) throw std::invalid_argument("DE achievability needs z, b >= 1 and w > zb");
  if (z == 1 || b == 1) return true;
  return (w - 1) % b == 0;
}

bool causal_code_exists(std::size_t k, std::size_t z, std::size_t b, std::size_t tau) {
  if (k < b) throw std::invalid_argument("causal code existence is only characterized for k >= b");
  const std::size_t star = delay_tau_star(k, z, b);
  if (tau < star) return false;
  if (tau > star) return true;
  return star % b == 0;
}

}  // namespace sc
