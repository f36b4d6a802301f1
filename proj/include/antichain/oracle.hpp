#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "antichain/numeric.hpp"
#include "antichain/rank.hpp"

namespace antichain {

/// Raised when an oracle computation would exceed its element cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Point = std::vector<std::int64_t>;

/// x precedes-or-equals y iff x_i <= y_i for every coordinate.
bool dominated_by(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

/// True iff no two distinct points are comparable.
bool is_antichain(std::span<const Point> points);

/// An explicit chain product: every tuple of [m_1] x ... x [m_n], listed in
/// lexicographic order unless shuffled.
class PosetInstance {
 public:
  static constexpr std::int64_t kDefaultCap = 2000;

  /// Throws CapExceeded when the product exceeds `cap`.
  explicit PosetInstance(ShapeVector shape, std::int64_t cap = kDefaultCap);

  const ShapeVector& shape() const { return shape_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Point>& elements() const { return elements_; }
  const Point& operator[](std::size_t i) const { return elements_[i]; }
  bool precedes(std::size_t i, std::size_t j) const { return dominated_by(elements_[i], elements_[j]); }

  /// Reorders the element list; the order itself is unchanged.
  void shuffle(std::mt19937_64& rng);

  /// Samples random triples and checks reflexivity, antisymmetry and
  /// transitivity. Returns false on the first violation.
  bool check_order_axioms(std::mt19937_64& rng, int samples) const;

 private:
  ShapeVector shape_;
  std::vector<Point> elements_;
};

struct AntichainWitness {
  std::vector<Point> elements;
  std::size_t size() const { return elements.size(); }
  nlohmann::json to_json() const;  // [[1,3],[2,2],[3,1]]
};

struct DilworthResult {
  ExactInteger size;
  std::size_t min_chain_cover;  // equals size
  AntichainWitness witness;
};

/// Histogram of coordinate sums over the full product. Throws CapExceeded
/// when the product exceeds `cap`.
RankProfile enumerate_rank_profile(const ShapeVector& shape, std::int64_t cap = 1'000'000);

/// Maximum antichain by Dilworth duality: a maximum matching (Hopcroft-Karp)
/// in the bipartite graph of strict comparabilities gives the minimum chain
/// cover |P| - |M|, and the Koenig vertex cover yields a witness antichain.
/// The witness is checked pairwise before returning; a failed check throws
/// std::logic_error. Throws CapExceeded when |P| > cap.
DilworthResult max_antichain_dilworth(const PosetInstance& poset, std::int64_t cap = PosetInstance::kDefaultCap);

struct SpernerReport {
  ShapeVector shape;
  ExactInteger dilworth_size;
  ExactInteger max_rank_size;
  bool equal = false;
  bool median_slice_is_antichain = false;
  /// Dropping the last coordinate is injective on the median slice.
  bool median_slice_projection_injective = false;
  nlohmann::json to_json() const;
};

/// Compares the Dilworth maximum with the size of the median rank and checks
/// that the median rank is itself an antichain.
SpernerReport sperner_witness_check(const ShapeVector& shape, std::int64_t cap = PosetInstance::kDefaultCap);

}  // namespace antichain
