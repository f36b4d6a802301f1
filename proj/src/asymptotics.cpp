#include "antichain/asymptotics.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "antichain/closed_forms.hpp"

namespace antichain {

namespace {

// sum_{j=0}^{last_j} sum_{i=0}^{j} (-1)^i ((1+j-i)^(n-1) - (j-i)^(n-1)) / (i! (n-1-i)!)
ExactRational staircase_sum(std::int64_t n, std::int64_t last_j, const std::vector<ExactInteger>& fact) {
  ExactRational acc(0);
  const auto e = static_cast<std::uint64_t>(n - 1);
  for (std::int64_t j = 0; j <= last_j; ++j) {
    for (std::int64_t i = 0; i <= j; ++i) {
      ExactInteger diff = ExactInteger::pow(ExactInteger(1 + j - i), e) - ExactInteger::pow(ExactInteger(j - i), e);
      ExactRational term(diff, fact[static_cast<std::size_t>(i)] * fact[static_cast<std::size_t>(n - 1 - i)]);
      if (i % 2) acc -= term;
      else acc += term;
    }
  }
  return acc;
}

}  // namespace

ExactRational g_exact(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("g(n) is defined for n >= 2");
  std::vector<ExactInteger> fact(static_cast<std::size_t>(n));
  fact[0] = ExactInteger(1);
  for (std::int64_t k = 1; k < n; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * ExactInteger(k);

  if (n % 2 == 0) return ExactRational(1) - ExactRational(2) * staircase_sum(n, (n - 4) / 2, fact);

  // (n/2 - 1 - i) = (n - 2 - 2i)/2 and ((n-3)/2 - i) = (n - 3 - 2i)/2
  const auto e = static_cast<std::uint64_t>(n - 1);
  const ExactInteger scale = ExactInteger::pow(ExactInteger(2), e);
  ExactRational tail(0);
  for (std::int64_t i = 0; i <= (n - 3) / 2; ++i) {
    ExactInteger diff =
        ExactInteger::pow(ExactInteger(n - 2 - 2 * i), e) - ExactInteger::pow(ExactInteger(n - 3 - 2 * i), e);
    ExactRational term(diff, scale * fact[static_cast<std::size_t>(i)] * fact[static_cast<std::size_t>(n - 1 - i)]);
    if (i % 2) tail -= term;
    else tail += term;
  }
  // (n - 5) / 2 truncates toward zero at n = 3, so spell out the empty range.
  const std::int64_t last_j = n >= 5 ? (n - 5) / 2 : -1;
  return ExactRational(1) - ExactRational(2) * staircase_sum(n, last_j, fact) - ExactRational(2) * tail;
}

std::string g_decimal(std::int64_t n, int digits) { return decimal_expansion(g_exact(n), digits); }

std::vector<ConvergencePoint> convergence_series(std::int64_t n, std::span<const std::int64_t> m_values) {
  const ExactRational limit = g_exact(n);
  std::vector<ConvergencePoint> points;
  points.reserve(m_values.size());
  for (auto m : m_values) {
    if (m < 2) throw std::invalid_argument("convergence points need m >= 2");
    ExactRational ratio(sander_homogeneous(m, n), ExactInteger::pow(ExactInteger(m), static_cast<std::uint64_t>(n - 1)));
    ExactRational deviation = (ratio - limit).abs();
    points.push_back({m, std::move(ratio), std::move(deviation)});
  }
  return points;
}

std::vector<std::int64_t> power_of_two_grid(int lo_log2, int hi_log2) {
  if (lo_log2 < 0 || hi_log2 > 62) throw std::invalid_argument("log2 bounds must lie in [0, 62]");
  std::vector<std::int64_t> grid;
  for (int k = lo_log2; k <= hi_log2; ++k) grid.push_back(std::int64_t{1} << k);
  return grid;
}

std::string convergence_csv(std::int64_t n, std::span<const ConvergencePoint> points, int digits) {
  const std::string limit = g_decimal(n, digits);
  std::ostringstream out;
  out << "m,log2_m,ratio_decimal,g_decimal,deviation_decimal\n";
  for (const auto& p : points) {
    out << p.m << ',';
    if (std::has_single_bit(static_cast<std::uint64_t>(p.m))) {
      out << std::countr_zero(static_cast<std::uint64_t>(p.m));
    } else {
      out << std::setprecision(17) << std::log2(static_cast<double>(p.m));
    }
    out << ',' << decimal_expansion(p.ratio, digits) << ',' << limit << ',' << decimal_expansion(p.deviation, digits)
        << '\n';
  }
  return out.str();
}

}  // namespace antichain
