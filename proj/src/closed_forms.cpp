#include "antichain/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace antichain {

namespace {

void add_signed(ExactInteger& acc, std::int64_t index, const ExactInteger& term) {
  if (index % 2) acc -= term;
  else acc += term;
}

// sum_{i=0}^{floor((r-dims)/(m-1))} (-1)^i C(dims, i) C(r - i m - 1, r - i m - dims),
// the inner sum as written for dims = n - 1 coordinates. The upper limit is
// looser than needed; the surplus terms vanish through the zero convention.
ExactInteger rank_mass_as_written(std::int64_t m, std::int64_t dims, std::int64_t r, std::int64_t limit_numerator) {
  ExactInteger acc(0);
  if (limit_numerator < 0) return acc;
  const std::int64_t upper = limit_numerator / (m - 1);
  for (std::int64_t i = 0; i <= upper; ++i) {
    add_signed(acc, i, binomial(dims, i) * binomial(r - i * m - 1, r - i * m - dims));
  }
  return acc;
}

}  // namespace

ExactInteger sander_homogeneous(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("sander_homogeneous needs m >= 1 and n >= 1");
  const std::int64_t g = n * (m - 1) / 2;
  ExactInteger acc(0);
  for (std::int64_t j = 0; j <= g / m; ++j) {
    add_signed(acc, j, binomial(n, j) * binomial(n - 1 + g - m * j, n - 1));
  }
  return acc;
}

ExactInteger hetero_largest_antichain(const ShapeVector& shape, SubsetBound bound, SubsetEnumeration enumeration) {
  const std::int64_t n = shape.size();
  const std::int64_t h = median_rank(shape);
  const std::int64_t limit = bound == SubsetBound::non_strict ? h - n : h - n - 1;
  const auto table =
      enumeration == SubsetEnumeration::grouped ? signed_subset_sums(shape, limit) : signed_subset_sums_direct(shape, limit);
  ExactInteger acc(0);
  for (const auto& [subset_sum, weight] : table) acc += weight * binomial(h - subset_sum - 1, n - 1);
  return acc;
}

ExactInteger theorem2_homogeneous(std::int64_t m, std::int64_t n, OddCaseMode mode) {
  if (m < 2) throw std::invalid_argument("theorem2_homogeneous requires m >= 2 (use the heterogeneous form for m = 1)");
  if (n < 2) throw std::invalid_argument("theorem2_homogeneous requires n >= 2");
  const std::int64_t h = n * (m + 1) / 2;
  const std::int64_t dims = n - 1;

  ExactInteger below(0);
  for (std::int64_t r = n - 1; r <= h - m - 1; ++r) below += rank_mass_as_written(m, dims, r, r - n + 1);

  ExactInteger result = ExactInteger::pow(ExactInteger(m), static_cast<std::uint64_t>(n - 1)) - below - below;
  if ((n * (m + 1)) % 2 == 0) return result;

  // Reflecting y -> (m+1) - y maps {sum >= h} onto {sum <= h - m}, one rank
  // more than the lower tail, so rank h - m is subtracted once more.
  const std::int64_t trailing_rank = mode == OddCaseMode::corrected ? h - m : h;
  return result - rank_mass_as_written(m, dims, trailing_rank, h - m - n + 1);
}

ExactInteger corollary_small_n(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("corollary_small_n requires m >= 1");
  const ExactInteger mm(m);
  switch (n) {
    case 2:
      return mm;
    case 3:
      return (ExactInteger(3) * mm * mm + ExactInteger(m % 2 ? 1 : 0)).divexact(ExactInteger(4));
    case 4:
      return (ExactInteger(2) * mm * mm * mm + mm).divexact(ExactInteger(3));
    default:
      throw std::invalid_argument("corollary_small_n covers n = 2, 3, 4 only, got n = " + std::to_string(n));
  }
}

ExactInteger sperner_binary(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sperner_binary requires n >= 1");
  return binomial(n, n / 2);
}

ExactRational sperner_approximation_value(std::int64_t n, int digits, int guard_digits) {
  if (n < 1) throw std::invalid_argument("sperner_approximation requires n >= 1");
  if (digits < 1 || guard_digits < 0) throw std::invalid_argument("digit counts must be positive");
  // decimal digits -> bits, plus room for the 2^n scale which is exact anyway
  const auto bits = static_cast<mpfr_prec_t>(std::ceil((digits + guard_digits) * 3.3219280948873623)) + 16;

  mpfr_t pi, x;
  mpfr_init2(pi, bits);
  mpfr_init2(x, bits);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(pi, pi, static_cast<long>(n), MPFR_RNDN);
  mpfr_si_div(x, 2, pi, MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_mul_2si(x, x, static_cast<long>(n), MPFR_RNDN);

  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  mpfr_clear(pi);
  mpfr_clear(x);
  return ExactRational(std::move(q));
}

std::string sperner_approximation(std::int64_t n, int digits) {
  return decimal_expansion(sperner_approximation_value(n, digits), digits);
}

}  // namespace antichain
