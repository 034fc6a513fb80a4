#include "surreal/dyadic.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "surreal/error.hpp"

namespace surreal {

Dyadic::Dyadic(Integer numerator, std::uint32_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  // Strip common factors of two.
  unsigned shift = boost::multiprecision::lsb(boost::multiprecision::abs(numerator_));
  if (shift > exponent_) shift = exponent_;
  if (shift != 0) {
    numerator_ >>= shift;  // exact: the low bits are zero
    exponent_ -= shift;
  }
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  if (r.numerator_ < 0) r.numerator_ = -r.numerator_;
  return r;
}

Integer Dyadic::floor() const {
  if (exponent_ == 0) return numerator_;
  Integer denominator = Integer(1) << exponent_;
  Integer q = numerator_ / denominator;  // truncates toward zero
  if (numerator_ < 0) q -= 1;          // never exact here: the numerator is odd
  return q;
}

Integer Dyadic::ceil() const {
  if (exponent_ == 0) return numerator_;
  return floor() + 1;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

namespace {

// Both numerators brought over the common denominator 2^max(ka, kb).
std::pair<Integer, Integer> aligned(const Dyadic& a, const Dyadic& b) {
  if (a.exponent() >= b.exponent()) {
    return {a.numerator(), b.numerator() << (a.exponent() - b.exponent())};
  }
  return {a.numerator() << (b.exponent() - a.exponent()), b.numerator()};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  auto [na, nb] = aligned(a, b);
  return Dyadic(na + nb, std::max(a.exponent_, b.exponent_));
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  auto [na, nb] = aligned(a, b);
  return Dyadic(na + nb, std::max(a.exponent_, b.exponent_) + 1);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  auto [na, nb] = aligned(a, b);
  if (na < nb) return std::strong_ordering::less;
  if (na > nb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + (Integer(1) << exponent_).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text, std::size_t offset) {
  bool negative = false;
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw SyntaxError(offset, "expected an integer, got '" + std::string(text) + "'");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

std::uint32_t parse_exponent(std::string_view digits, std::size_t offset) {
  if (!all_digits(digits) || digits.size() > 9) {
    throw SyntaxError(offset, "expected a small exponent, got '" + std::string(digits) + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text, 0), 0);

  Integer numerator = parse_integer(text.substr(0, slash), 0);
  std::string_view denom = text.substr(slash + 1);
  std::size_t denom_offset = slash + 1;

  if (denom.size() > 2 && denom.substr(0, 2) == "2^") {
    return Dyadic(std::move(numerator), parse_exponent(denom.substr(2), denom_offset + 2));
  }
  if (!all_digits(denom)) {
    throw SyntaxError(denom_offset, "expected a denominator, got '" + std::string(denom) + "'");
  }
  Integer d{std::string(denom)};
  if (d == 0 || (d & (d - 1)) != 0) {
    throw NonDyadicDenominator("denominator " + d.str() + " is not a power of two");
  }
  auto exponent = static_cast<std::uint32_t>(boost::multiprecision::msb(d));
  return Dyadic(std::move(numerator), exponent);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& q) { return os << q.to_string(); }

std::uint64_t canonical_birthday(const Dyadic& q) {
  Integer ceiling = q.abs().ceil();
  if (ceiling > std::numeric_limits<std::uint64_t>::max() - q.exponent()) {
    throw std::overflow_error("canonical birthday does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(ceiling) + q.exponent();
}

}  // namespace surreal
