#pragma once

// Exact dyadic rationals n / 2^k.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace surreal {

using Integer = boost::multiprecision::cpp_int;

// Always held in lowest terms: the exponent is 0 or the numerator is odd,
// so field equality is value equality.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : numerator_(value) {}  // NOLINT(implicit)
  Dyadic(Integer numerator, std::uint32_t exponent);

  const Integer& numerator() const { return numerator_; }
  std::uint32_t exponent() const { return exponent_; }

  bool is_integer() const { return exponent_ == 0; }
  int sign() const { return numerator_.sign(); }
  Dyadic abs() const;

  // Smallest integer >= value, computed by integer division.
  Integer ceil() const;
  Integer floor() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  // (a + b) / 2
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "n" for integers, otherwise "n/d" with d = 2^k.
  std::string to_string() const;

  // Accepts "n", "n/d" with d a power of two, and "n/2^k".
  // Throws SyntaxError on malformed text, NonDyadicDenominator for e.g. "1/3".
  static Dyadic parse(std::string_view text);

 private:
  void normalize();

  Integer numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& q);

// Birthday of the canonical form of q = n/2^k in lowest terms: ceil(|q|) + k.
std::uint64_t canonical_birthday(const Dyadic& q);

}  // namespace surreal
