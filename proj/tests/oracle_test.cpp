#include "antichain/oracle.hpp"

#include <random>

#include <gtest/gtest.h>

#include "antichain/closed_forms.hpp"

using namespace antichain;

namespace {

// Largest antichain by trying every subset; only for posets with <= 20 elements.
std::size_t exhaustive_max_antichain(const PosetInstance& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) pts.push_back(p[i]);
    }
    if (pts.size() > best && is_antichain(pts)) best = pts.size();
  }
  return best;
}

RankProfile profile_of(std::int64_t min_rank, std::vector<std::int64_t> counts) {
  std::vector<ExactInteger> c;
  for (auto v : counts) c.emplace_back(v);
  return RankProfile(min_rank, std::move(c));
}

}  // namespace

TEST(Dominance, Basics) {
  const Point a{1, 2}, b{2, 2}, c{2, 1};
  EXPECT_TRUE(dominated_by(a, b));
  EXPECT_FALSE(dominated_by(b, a));
  EXPECT_FALSE(dominated_by(a, c));
  EXPECT_TRUE(dominated_by(a, a));
  EXPECT_TRUE(is_antichain(std::vector<Point>{a, c}));
  EXPECT_FALSE(is_antichain(std::vector<Point>{a, b}));
}

TEST(PosetInstance, ElementsAndAxioms) {
  const PosetInstance p(ShapeVector({2, 3, 4}));
  EXPECT_EQ(p.size(), 24u);
  std::mt19937_64 rng(1);
  EXPECT_TRUE(p.check_order_axioms(rng, 2000));
  EXPECT_THROW(PosetInstance(ShapeVector({50, 50})), CapExceeded);
  EXPECT_NO_THROW(PosetInstance(ShapeVector({50, 50}), 2500));
}

TEST(EnumerateRankProfile, Examples) {
  EXPECT_EQ(enumerate_rank_profile(ShapeVector({2, 2})), profile_of(2, {1, 2, 1}));
  EXPECT_EQ(enumerate_rank_profile(ShapeVector({2, 3})), profile_of(2, {1, 2, 2, 1}));
  EXPECT_EQ(enumerate_rank_profile(ShapeVector({5, 5, 5})).at(9), ExactInteger(19));
}

TEST(EnumerateRankProfile, RefusesOverCap) {
  try {
    enumerate_rank_profile(ShapeVector({100, 100, 100, 100}));
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("100000000"), std::string::npos) << e.what();
  }
  EXPECT_THROW(enumerate_rank_profile(ShapeVector({10, 10}), 99), CapExceeded);
}

TEST(Dilworth, Examples) {
  EXPECT_EQ(max_antichain_dilworth(PosetInstance(ShapeVector({3, 3}))).size, ExactInteger(3));
  EXPECT_EQ(max_antichain_dilworth(PosetInstance(ShapeVector({2, 2, 2}))).size, sperner_binary(3));
  for (std::int64_t k : {1, 2, 17, 500, 2000}) {
    const auto r = max_antichain_dilworth(PosetInstance(ShapeVector({1, k})));
    EXPECT_EQ(r.size, ExactInteger(1));
    EXPECT_EQ(r.witness.size(), 1u);
  }
}

TEST(Dilworth, AgreesWithExhaustiveSearch) {
  for (const auto& v : std::vector<std::vector<std::int64_t>>{{3, 3}, {2, 2, 2}, {2, 3, 3}, {4, 4}, {2, 2, 4}, {1, 5, 3}, {2, 2, 2, 2}}) {
    const PosetInstance p{ShapeVector(v)};
    EXPECT_EQ(max_antichain_dilworth(p).size, ExactInteger(static_cast<std::int64_t>(exhaustive_max_antichain(p))))
        << p.shape().to_string();
  }
}

TEST(Dilworth, WitnessIsAntichainOfClaimedSize) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<std::int64_t> entry(1, 6);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(len(rng)));
    for (auto& m : v) m = entry(rng);
    const PosetInstance p{ShapeVector(v)};
    const auto r = max_antichain_dilworth(p);
    EXPECT_TRUE(is_antichain(r.witness.elements));
    EXPECT_EQ(ExactInteger(static_cast<std::int64_t>(r.witness.size())), r.size);
    EXPECT_EQ(r.min_chain_cover, r.witness.size());
    EXPECT_EQ(r.size, hetero_largest_antichain(p.shape()));
  }
}

TEST(Dilworth, SizeInvariantUnderElementOrder) {
  std::mt19937_64 rng(202);
  for (const auto& v : std::vector<std::vector<std::int64_t>>{{3, 4, 5}, {2, 2, 2, 2, 2}, {6, 7}, {1, 4, 4, 3}}) {
    PosetInstance p{ShapeVector(v)};
    const ExactInteger base = max_antichain_dilworth(p).size;
    for (int k = 0; k < 5; ++k) {
      p.shuffle(rng);
      const auto r = max_antichain_dilworth(p);
      EXPECT_EQ(r.size, base);
      EXPECT_TRUE(is_antichain(r.witness.elements));
    }
  }
}

TEST(Dilworth, RefusesOverCap) {
  const PosetInstance p(ShapeVector({10, 10}), 5000);
  EXPECT_THROW(max_antichain_dilworth(p, 50), CapExceeded);
}

TEST(Dilworth, WitnessJson) {
  const auto r = max_antichain_dilworth(PosetInstance(ShapeVector({1, 1, 1})));
  EXPECT_EQ(r.witness.to_json().dump(), "[[1,1,1]]");
  const auto j = max_antichain_dilworth(PosetInstance(ShapeVector({3, 3}))).witness.to_json();
  ASSERT_EQ(j.size(), 3u);
  for (const auto& pt : j) EXPECT_EQ(pt.size(), 2u);
}

TEST(SpernerWitnessCheck, Examples) {
  for (const auto& [v, size] : std::vector<std::pair<std::vector<std::int64_t>, int>>{
           {{5, 5}, 5}, {{2, 2, 4}, 4}, {{4, 4, 4}, 12}}) {
    const SpernerReport r = sperner_witness_check(ShapeVector(v));
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.median_slice_is_antichain);
    EXPECT_TRUE(r.median_slice_projection_injective);
    EXPECT_EQ(r.dilworth_size, ExactInteger(size));
    EXPECT_EQ(r.to_json().at("dilworth_size"), std::to_string(size));
  }
  EXPECT_EQ(corollary_small_n(4, 3), ExactInteger(12));
  EXPECT_THROW(sperner_witness_check(ShapeVector({50, 50})), CapExceeded);
}
