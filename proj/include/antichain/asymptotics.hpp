#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "antichain/numeric.hpp"

namespace antichain {

/// One sample of S(m, n) / m^(n-1) against its limit g(n).
struct ConvergencePoint {
  std::int64_t m;
  ExactRational ratio;
  ExactRational deviation;  // |ratio - g(n)|
};

/// Leading coefficient g(n) = lim_{m -> inf} S(m, n) / m^(n-1), in exact
/// rational arithmetic. Odd n uses half-integer bases, carried as
/// numerators over 2^(n-1). Throws std::invalid_argument for n < 2.
ExactRational g_exact(std::int64_t n);

/// decimal_expansion(g_exact(n), digits).
std::string g_decimal(std::int64_t n, int digits);

/// Ratio and deviation at each m, in input order. S(m, n) comes from
/// sander_homogeneous. Throws std::invalid_argument for any m < 2.
std::vector<ConvergencePoint> convergence_series(std::int64_t n, std::span<const std::int64_t> m_values);

/// Powers of two 2^lo ... 2^hi.
std::vector<std::int64_t> power_of_two_grid(int lo_log2, int hi_log2);

/// CSV with header m,log2_m,ratio_decimal,g_decimal,deviation_decimal.
/// log2_m is an integer for powers of two, otherwise a 17-digit decimal.
std::string convergence_csv(std::int64_t n, std::span<const ConvergencePoint> points, int digits = 17);

}  // namespace antichain
