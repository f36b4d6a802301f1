#include "antichain/numeric.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace antichain {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ExactInteger ExactInteger::parse(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return ExactInteger(mpz_class(std::string(text), 10));
}

ExactInteger ExactInteger::pow(const ExactInteger& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return ExactInteger(std::move(r));
}

ExactInteger ExactInteger::abs() const {
  mpz_class r;
  mpz_abs(r.get_mpz_t(), value_.get_mpz_t());
  return ExactInteger(std::move(r));
}

std::int64_t ExactInteger::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return value_.get_si();
}

ExactInteger ExactInteger::divexact(const ExactInteger& divisor) const {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return ExactInteger(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& v) { return os << v.to_string(); }

ExactRational::ExactRational(const ExactInteger& numerator, const ExactInteger& denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class v) : value_(std::move(v)) {
  if (sgn(value_.get_den()) == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(ExactInteger::parse(text));
  auto den = text.substr(slash + 1);
  if (!den.empty() && den.front() == '-') throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
  return ExactRational(ExactInteger::parse(text.substr(0, slash)), ExactInteger::parse(den));
}

ExactRational ExactRational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), value_.get_mpq_t());
  return ExactRational(std::move(r));
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

ExactInteger binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return ExactInteger(0);
  const std::int64_t k = std::min(b, a - b);
  mpz_class r = 1;
  // After step i the accumulator is C(a-k+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<long>(a - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return ExactInteger(std::move(r));
}

ExactInteger factorial(std::int64_t k) {
  if (k < 0) throw std::domain_error("factorial of negative number: " + std::to_string(k));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return ExactInteger(std::move(r));
}

std::string decimal_expansion(const ExactRational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (q.sign() == 0) {
    return digits == 1 ? std::string("0") : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  }
  const mpz_class num = abs(q.mpq().get_num());
  const mpz_class den = q.mpq().get_den();

  // exponent e with 10^e <= |q| < 10^(e+1); start from the digit-count
  // estimate and correct by at most one step either way.
  long e = static_cast<long>(num.get_str(10).size()) - static_cast<long>(den.get_str(10).size());
  auto pow10 = [](long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
  };
  auto at_least_pow10 = [&](long k) {  // |q| >= 10^k
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least_pow10(e)) --e;
  while (at_least_pow10(e + 1)) ++e;

  // scaled = |q| * 10^(digits-1-e), rounded half-to-even to an integer.
  const long shift = digits - 1 - e;
  mpz_class scaled_num = num;
  mpz_class scaled_den = den;
  if (shift >= 0) scaled_num *= pow10(shift);
  else scaled_den *= pow10(-shift);
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  const int half = cmp(mpz_class(rem * 2), scaled_den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;
  if (quot == pow10(digits)) {
    quot /= 10;
    ++e;
  }

  std::string mantissa = quot.get_str(10);
  std::string out = q.sign() < 0 ? "-" : "";
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
  } else if (e + 1 >= digits) {
    out += mantissa + std::string(static_cast<std::size_t>(e + 1 - digits), '0');
  } else {
    out += mantissa.substr(0, static_cast<std::size_t>(e + 1)) + "." + mantissa.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

}  // namespace antichain
