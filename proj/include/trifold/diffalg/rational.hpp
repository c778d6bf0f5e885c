#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trifold {

/// Exact rational number. Values whose reduced numerator and denominator fit
/// in 64 bits are stored inline; anything larger spills to a shared GMP value.
/// Always reduced, denominator positive, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  /// Parses "p", "-p", "p/q" with arbitrary-size integers.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  /// Only meaningful for small values; used for exponents and indices.
  std::optional<std::int64_t> to_int64() const;

  /// Image in Z/pZ, or nullopt when p divides the denominator.
  std::optional<std::uint64_t> mod(std::uint64_t p) const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational pow(unsigned e) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void assign_reduced(const mpq_class& q);
  static Rational from_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// gcd of numerators over lcm of denominators; gcd(0, x) = |x|.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace trifold
