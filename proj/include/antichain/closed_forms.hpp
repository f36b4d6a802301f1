#pragma once

#include <cstdint>
#include <string>

#include "antichain/numeric.hpp"
#include "antichain/rank.hpp"

namespace antichain {

/// S(m, n) = sum_{j=0}^{floor(g/m)} (-1)^j C(n, j) C(n - 1 + g - m j, n - 1),
/// g = floor(n (m - 1) / 2). Requires m, n >= 1.
ExactInteger sander_homogeneous(std::int64_t m, std::int64_t n);

/// Which subsets enter the heterogeneous inclusion-exclusion sum.
enum class SubsetBound {
  non_strict,  // m_I <= h - n; agrees with enumeration
  strict,      // m_I <  h - n; drops the boundary term, kept for comparison
};

enum class SubsetEnumeration {
  grouped,  // signed subset-sum table over distinct values
  direct,   // all 2^n subsets, n <= 25
};

/// s(m) = sum over I with m_I bounded by h - n of (-1)^|I| C(h - m_I - 1, n - 1),
/// with h the median rank of the shape.
ExactInteger hetero_largest_antichain(const ShapeVector& shape, SubsetBound bound = SubsetBound::non_strict,
                                      SubsetEnumeration enumeration = SubsetEnumeration::grouped);

enum class OddCaseMode {
  corrected,     // trailing term counts rank h - m of [m]^(n-1)
  paper_literal  // trailing binomials use h - i m, as printed
};

/// S(m, n) as m^(n-1) minus twice the mass of [m]^(n-1) below rank h - m,
/// minus (when n (m + 1) is odd) the trailing single-rank term selected by
/// `mode`. h = floor(n (m + 1) / 2). Throws std::invalid_argument for m < 2
/// or n < 2.
ExactInteger theorem2_homogeneous(std::int64_t m, std::int64_t n, OddCaseMode mode = OddCaseMode::corrected);

/// The n = 2, 3, 4 specialisations: m; 3m^2/4 or (3m^2+1)/4; (2m^3+m)/3.
/// Throws std::invalid_argument for other n or m < 1.
ExactInteger corollary_small_n(std::int64_t m, std::int64_t n);

/// C(n, floor(n/2)), the largest antichain of the Boolean lattice [2]^n.
ExactInteger sperner_binary(std::int64_t n);

/// Stirling estimate 2^n sqrt(2 / (pi n)) computed in binary floating point
/// with `digits` + `guard_digits` decimal digits of working precision, then
/// converted exactly to a rational.
ExactRational sperner_approximation_value(std::int64_t n, int digits = 17, int guard_digits = 30);

/// Same, rendered with decimal_expansion at `digits` significant digits.
std::string sperner_approximation(std::int64_t n, int digits = 17);

}  // namespace antichain
