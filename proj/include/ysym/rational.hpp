#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ysym {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is held in a GMP rational. The two representations never
/// overlap: a value that fits is always demoted back to the inline form, so
/// equality never has to compare across representations.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<long long>::min()) assign_wide(value, 1);
    else num_ = value;
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "-p" or "p/q" (q may be negative; result is normalized).
  static Rational parse(std::string_view text);

  /// Canonical "p/q" text; the denominator is always printed.
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_wide(__int128 num, __int128 den);
  void assign_mpq(mpq_class q);
  bool is_big() const { return static_cast<bool>(big_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ysym
