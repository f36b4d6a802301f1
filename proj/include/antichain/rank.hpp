#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "antichain/numeric.hpp"

namespace antichain {

/// Chain lengths (m_1, ..., m_n) of a product of linear orders [m_1] x ... x [m_n].
class ShapeVector {
 public:
  /// Throws std::invalid_argument when empty, when an entry is < 1, or when
  /// the coordinate sum n + sum(m_i) would not fit comfortably in 64 bits.
  explicit ShapeVector(std::vector<std::int64_t> entries);

  /// (m, ..., m) with n entries.
  static ShapeVector homogeneous(std::int64_t m, std::int64_t n);

  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t sum() const { return sum_; }
  ExactInteger element_count() const;
  bool is_homogeneous() const;

  std::string to_string() const;  // "5,5,10"

  friend bool operator==(const ShapeVector&, const ShapeVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t sum_ = 0;
};

/// Whitney numbers of a ranked poset, stored densely from the lowest to
/// the highest nonempty rank. Ranks outside the window read as zero.
class RankProfile {
 public:
  RankProfile(std::int64_t min_rank, std::vector<ExactInteger> counts);

  std::int64_t min_rank() const { return min_rank_; }
  std::int64_t max_rank() const { return min_rank_ + static_cast<std::int64_t>(counts_.size()) - 1; }
  const std::vector<ExactInteger>& counts() const { return counts_; }
  const ExactInteger& at(std::int64_t rank) const;

  ExactInteger total() const;
  /// p_i == p_{min+max-i} for every stored rank.
  bool is_symmetric() const;
  /// Weakly increasing up to some peak, weakly decreasing after it.
  bool is_unimodal() const;

  nlohmann::json to_json() const;  // {"min_rank": r, "counts": ["1", ...]}
  static RankProfile from_json(const nlohmann::json& j);

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::int64_t min_rank_;
  std::vector<ExactInteger> counts_;
};

/// floor((n + sum m_i) / 2), the rank holding a largest antichain.
std::int64_t median_rank(const ShapeVector& shape);

/// The chain [m] ranked 1..m, one element per rank.
RankProfile chain_profile(std::int64_t m);

/// Whitney numbers of the product poset: r_l = sum_i p_i q_{l-i}.
RankProfile convolve(const RankProfile& p, const RankProfile& q);

/// Left fold of convolve over the chain profiles of the shape, so that the
/// minimal element (1, ..., 1) sits at rank n.
RankProfile product_profile(const ShapeVector& shape);

/// Size of the median rank, read off product_profile.
ExactInteger max_rank_size(const ShapeVector& shape);

/// Signed subset-sum table: for each value s <= limit, the sum of (-1)^|I|
/// over subsets I with m_I = s. Built over the distinct entry values with
/// their multiplicities, so the work is bounded by the number of reachable
/// sums rather than 2^n.
std::map<std::int64_t, ExactInteger> signed_subset_sums(const ShapeVector& shape, std::int64_t limit);

/// Same table by visiting all 2^n subsets; requires n <= 25.
std::map<std::int64_t, ExactInteger> signed_subset_sums_direct(const ShapeVector& shape, std::int64_t limit);

/// |{y in [m]^dims : sum y = r}| = sum_i (-1)^i C(dims, i) C(r - i m - 1, dims - 1).
/// Any r is accepted; out-of-range ranks give zero. Requires dims >= 1.
ExactInteger homogeneous_bounded_composition_count(std::int64_t m, std::int64_t dims, std::int64_t r);

/// |{y in prod [m_i] : sum y = r}| by inclusion-exclusion over the set of
/// coordinates that overflow their bound: sum_I (-1)^|I| C(r - m_I - 1, n - 1).
ExactInteger subset_bounded_composition_count(const ShapeVector& shape, std::int64_t r);

/// Dispatches to the homogeneous form when all entries are equal.
ExactInteger bounded_composition_count(const ShapeVector& shape, std::int64_t r);

}  // namespace antichain
