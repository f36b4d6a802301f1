#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace antichain {

/// Signed integer of unbounded precision. All counts in the library are
/// carried in this type; there is no fixed-width fast path.
class ExactInteger {
 public:
  ExactInteger() = default;
  ExactInteger(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT
  explicit ExactInteger(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed run of decimal digits. No whitespace,
  /// no exponent, no leading '+'. Throws std::invalid_argument otherwise.
  static ExactInteger parse(std::string_view text);

  static ExactInteger pow(const ExactInteger& base, std::uint64_t exponent);

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  ExactInteger abs() const;
  bool fits_int64() const { return value_.fits_slong_p(); }
  std::int64_t to_int64() const;

  /// Exact quotient; the caller guarantees that `divisor` divides *this.
  ExactInteger divexact(const ExactInteger& divisor) const;

  const mpz_class& mpz() const { return value_; }

  ExactInteger& operator+=(const ExactInteger& o) { value_ += o.value_; return *this; }
  ExactInteger& operator-=(const ExactInteger& o) { value_ -= o.value_; return *this; }
  ExactInteger& operator*=(const ExactInteger& o) { value_ *= o.value_; return *this; }

  friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
  friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
  friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }
  friend ExactInteger operator-(const ExactInteger& a) { return ExactInteger(mpz_class(-a.value_)); }

  friend bool operator==(const ExactInteger& a, const ExactInteger& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactInteger& v);

/// Rational number kept in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT
  ExactRational(const ExactInteger& v) : value_(v.mpz()) {}        // NOLINT
  /// Throws std::domain_error on a zero denominator.
  ExactRational(const ExactInteger& numerator, const ExactInteger& denominator);
  explicit ExactRational(mpq_class v);

  /// Accepts "p" or "p/q".
  static ExactRational parse(std::string_view text);

  ExactInteger numerator() const { return ExactInteger(mpz_class(value_.get_num())); }
  ExactInteger denominator() const { return ExactInteger(mpz_class(value_.get_den())); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  ExactRational abs() const;
  const mpq_class& mpq() const { return value_; }

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.value_)); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

/// C(a, b) for any integers; zero whenever b < 0 or b > a (this covers
/// negative a with b >= 0). Multiplicative formula with exact running
/// division, so intermediates never exceed the final value times b.
ExactInteger binomial(std::int64_t a, std::int64_t b);

/// k!; throws std::domain_error for negative k.
ExactInteger factorial(std::int64_t k);

/// Decimal rendering of `q` with `digits` significant digits, rounded
/// half-to-even at the last digit. Plain positional notation, never an
/// exponent: 3/4 at 5 digits is "0.75000", 12345 at 2 digits is "12000".
/// Zero renders as "0" followed by digits-1 fractional zeros.
/// Throws std::invalid_argument if digits < 1.
std::string decimal_expansion(const ExactRational& q, int digits);

}  // namespace antichain
