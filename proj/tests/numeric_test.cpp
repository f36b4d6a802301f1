#include "antichain/numeric.hpp"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

using namespace antichain;

namespace {

// Pascal's triangle in 64-bit integers; exact for rows up to 60.
std::vector<std::vector<std::uint64_t>> pascal_rows(int rows) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(rows) + 1);
  for (int a = 0; a <= rows; ++a) {
    auto& row = t[static_cast<std::size_t>(a)];
    row.assign(static_cast<std::size_t>(a) + 1, 1);
    for (int b = 1; b < a; ++b) row[static_cast<std::size_t>(b)] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

// Schoolbook long division of p/q (0 < p < q): the first `count` digits after the point.
std::string long_division_digits(std::uint64_t p, std::uint64_t q, int count) {
  std::string digits;
  for (int i = 0; i < count; ++i) {
    p *= 10;
    digits += static_cast<char>('0' + p / q);
    p %= q;
  }
  return digits;
}

// p/q in (0, 1) to `sig` significant digits, half-to-even, by long division
// with explicit carry propagation on the digit string.
std::string rounded_by_long_division(std::uint64_t p, std::uint64_t q, int sig) {
  std::string digits;
  int leading_zeros = 0;
  while (static_cast<int>(digits.size()) < sig) {
    p *= 10;
    const auto d = static_cast<char>('0' + p / q);
    p %= q;
    if (digits.empty() && d == '0') {
      ++leading_zeros;
      continue;
    }
    digits += d;
  }
  // remainder p/q in [0, 1) decides the rounding: compare 2p with q
  const bool round_up = 2 * p > q || (2 * p == q && (digits.back() - '0') % 2 == 1);
  if (round_up) {
    int i = sig - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') digits[static_cast<std::size_t>(i--)] = '0';
    if (i >= 0) {
      ++digits[static_cast<std::size_t>(i)];
    } else {
      digits.insert(digits.begin(), '1');
      digits.pop_back();
      if (leading_zeros == 0) return "1." + digits.substr(1);
      --leading_zeros;
    }
  }
  return "0." + std::string(static_cast<std::size_t>(leading_zeros), '0') + digits;
}

ExactInteger random_integer(std::mt19937_64& rng, int max_digits) {
  std::uniform_int_distribution<int> len(1, max_digits), digit(0, 9), coin(0, 1);
  std::string s(static_cast<std::size_t>(len(rng)), '0');
  for (auto& c : s) c = static_cast<char>('0' + digit(rng));
  s[0] = static_cast<char>('1' + digit(rng) % 9);
  if (coin(rng)) s.insert(s.begin(), '-');
  return ExactInteger::parse(s);
}

}  // namespace

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), ExactInteger(6));
  EXPECT_EQ(binomial(3, 5), ExactInteger(0));
  EXPECT_EQ(binomial(2, -1), ExactInteger(0));
  EXPECT_EQ(binomial(-3, 2), ExactInteger(0));
  EXPECT_EQ(binomial(-1, -1), ExactInteger(0));
  EXPECT_EQ(binomial(0, 0), ExactInteger(1));
}

TEST(Binomial, MatchesPascalTriangle) {
  const auto t = pascal_rows(60);
  for (int a = 0; a <= 60; ++a) {
    for (int b = 0; b <= a; ++b) {
      EXPECT_EQ(binomial(a, b).to_string(), std::to_string(t[a][b])) << a << " choose " << b;
    }
  }
}

TEST(Binomial, PascalIdentityUnderZeroExtension) {
  for (std::int64_t a = -5; a <= 30; ++a) {
    for (std::int64_t b = -5; b <= 30; ++b) {
      // The identity fails only at (0, 0) under the zero convention, where
      // C(-1, -1) + C(-1, 0) = 0 but C(0, 0) = 1.
      if (a == 0 && b == 0) continue;
      EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << "," << b;
    }
  }
}

TEST(Binomial, Symmetry) {
  for (std::int64_t a = 0; a <= 40; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) EXPECT_EQ(binomial(a, b), binomial(a, a - b));
  }
}

TEST(Binomial, LargeArguments) {
  // C(1000, 500) has 300 digits; check it against the row identity sum C(1000, k) = 2^1000.
  ExactInteger sum(0);
  for (std::int64_t k = 0; k <= 1000; ++k) sum += binomial(1000, k);
  EXPECT_EQ(sum, ExactInteger::pow(ExactInteger(2), 1000));
  EXPECT_EQ(binomial(1000, 500).to_string().size(), 300u);
}

TEST(Factorial, Examples) {
  EXPECT_EQ(factorial(0), ExactInteger(1));
  EXPECT_EQ(factorial(5), ExactInteger(120));
  std::uint64_t oracle = 1;
  for (std::uint64_t k = 2; k <= 20; ++k) oracle *= k;
  EXPECT_EQ(factorial(20).to_string(), std::to_string(oracle));
  EXPECT_EQ(factorial(20).to_string(), "2432902008176640000");
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(ExactInteger, ParseRejectsMalformed) {
  for (const char* bad : {"", "-", "+5", "1e5", " 7", "12a", "--3"}) {
    EXPECT_THROW(ExactInteger::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(ExactInteger::parse("-0"), ExactInteger(0));
}

TEST(ExactInteger, DecimalRoundTripProperty) {
  std::mt19937_64 rng(20240917);
  for (int i = 0; i < 500; ++i) {
    const ExactInteger x = random_integer(rng, 1000);
    EXPECT_EQ(ExactInteger::parse(x.to_string()), x);
  }
}

TEST(ExactInteger, ArithmeticProperties) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const ExactInteger a = random_integer(rng, 60), b = random_integer(rng, 60);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ((a * b).divexact(b), a);
    EXPECT_EQ(a * b, b * a);
  }
  EXPECT_TRUE(ExactInteger(5).fits_int64());
  EXPECT_FALSE(ExactInteger::pow(ExactInteger(2), 64).fits_int64());
  EXPECT_THROW(ExactInteger::pow(ExactInteger(2), 64).to_int64(), std::overflow_error);
}

TEST(ExactRational, NormalizedAfterEveryOperation) {
  std::mt19937_64 rng(11);
  auto lowest_terms = [](const ExactRational& q) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.numerator().mpz().get_mpz_t(), q.denominator().mpz().get_mpz_t());
    return g == 1 && q.denominator().sign() > 0;
  };
  for (int i = 0; i < 300; ++i) {
    ExactInteger den = random_integer(rng, 20);
    if (den.is_zero()) den = ExactInteger(3);
    const ExactRational a(random_integer(rng, 20), den);
    const ExactRational b(random_integer(rng, 20), random_integer(rng, 20) * ExactInteger(2) + ExactInteger(1));
    EXPECT_TRUE(lowest_terms(a));
    EXPECT_TRUE(lowest_terms(a + b));
    EXPECT_TRUE(lowest_terms(a - b));
    EXPECT_TRUE(lowest_terms(a * b));
    if (b.sign() != 0) EXPECT_TRUE(lowest_terms(a / b));
  }
  EXPECT_EQ(ExactRational(ExactInteger(6), ExactInteger(-8)).to_string(), "-3/4");
  EXPECT_THROW(ExactRational(ExactInteger(1), ExactInteger(0)), std::domain_error);
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
  EXPECT_EQ(ExactRational::parse("115/192"), ExactRational(ExactInteger(115), ExactInteger(192)));
  EXPECT_EQ(ExactRational::parse("10/4").to_string(), "5/2");
  EXPECT_THROW(ExactRational::parse("1/-2"), std::invalid_argument);
}

TEST(DecimalExpansion, Examples) {
  EXPECT_EQ(decimal_expansion(ExactRational::parse("3/4"), 5), "0.75000");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("2/3"), 5), "0.66667");
  EXPECT_EQ(decimal_expansion(ExactRational(1), 1), "1");
  EXPECT_EQ(decimal_expansion(ExactRational(1), 3), "1.00");
  EXPECT_EQ(decimal_expansion(ExactRational(12345), 2), "12000");
  EXPECT_EQ(decimal_expansion(ExactRational(-12345), 7), "-12345.00");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("1/1000"), 2), "0.0010");
  EXPECT_EQ(decimal_expansion(ExactRational(0), 4), "0.000");
  EXPECT_THROW(decimal_expansion(ExactRational(1), 0), std::invalid_argument);
}

TEST(DecimalExpansion, AgreesWithLongDivision) {
  const std::string oracle = long_division_digits(115, 192, 19);  // 18 digits + 1 for rounding
  ASSERT_EQ(oracle.substr(0, 6), "598958");
  // next digit after the 17th is '3', so rounding leaves the prefix untouched
  ASSERT_LT(oracle[17], '5');
  EXPECT_EQ(decimal_expansion(ExactRational::parse("115/192"), 17), "0." + oracle.substr(0, 17));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> den(2, 100000);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t q = den(rng);
    std::uniform_int_distribution<std::uint64_t> num(1, q - 1);
    const std::uint64_t p = num(rng);
    const std::string rendered = decimal_expansion(ExactRational(ExactInteger(static_cast<std::int64_t>(p)),
                                                                 ExactInteger(static_cast<std::int64_t>(q))),
                                                   12);
    EXPECT_EQ(rendered, rounded_by_long_division(p, q, 12)) << p << "/" << q;
  }
}

TEST(DecimalExpansion, RoundsHalfToEven) {
  EXPECT_EQ(decimal_expansion(ExactRational::parse("1/8"), 2), "0.12");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("3/8"), 2), "0.38");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("5/2"), 1), "2");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("7/2"), 1), "4");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("-5/2"), 1), "-2");
  // carry into a new leading digit
  EXPECT_EQ(decimal_expansion(ExactRational::parse("9999/10000"), 3), "1.00");
  EXPECT_EQ(decimal_expansion(ExactRational::parse("99999/10"), 3), "10000");
}
