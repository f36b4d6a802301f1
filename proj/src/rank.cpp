#include "antichain/rank.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace antichain {

namespace {

constexpr std::int64_t kMaxCoordinateSum = std::int64_t{1} << 61;

const ExactInteger& zero() {
  static const ExactInteger z(0);
  return z;
}

}  // namespace

ShapeVector::ShapeVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("shape must have at least one chain");
  for (auto m : entries_) {
    if (m < 1) throw std::invalid_argument("chain lengths must be positive, got " + std::to_string(m));
    if (m > kMaxCoordinateSum - sum_ - size()) throw std::invalid_argument("shape coordinate sum too large");
    sum_ += m;
  }
}

ShapeVector ShapeVector::homogeneous(std::int64_t m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("shape must have at least one chain");
  return ShapeVector(std::vector<std::int64_t>(static_cast<std::size_t>(n), m));
}

ExactInteger ShapeVector::element_count() const {
  ExactInteger p(1);
  for (auto m : entries_) p *= ExactInteger(m);
  return p;
}

bool ShapeVector::is_homogeneous() const {
  return std::all_of(entries_.begin(), entries_.end(), [&](auto m) { return m == entries_.front(); });
}

std::string ShapeVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

RankProfile::RankProfile(std::int64_t min_rank, std::vector<ExactInteger> counts)
    : min_rank_(min_rank), counts_(std::move(counts)) {
  auto first = std::find_if(counts_.begin(), counts_.end(), [](const auto& c) { return !c.is_zero(); });
  if (first == counts_.end()) throw std::invalid_argument("rank profile has no nonzero rank");
  auto last = std::find_if(counts_.rbegin(), counts_.rend(), [](const auto& c) { return !c.is_zero(); }).base();
  min_rank_ += first - counts_.begin();
  counts_.erase(last, counts_.end());
  counts_.erase(counts_.begin(), first);
}

const ExactInteger& RankProfile::at(std::int64_t rank) const {
  if (rank < min_rank_ || rank > max_rank()) return zero();
  return counts_[static_cast<std::size_t>(rank - min_rank_)];
}

ExactInteger RankProfile::total() const {
  ExactInteger t(0);
  for (const auto& c : counts_) t += c;
  return t;
}

bool RankProfile::is_symmetric() const { return std::equal(counts_.begin(), counts_.end(), counts_.rbegin()); }

bool RankProfile::is_unimodal() const {
  std::size_t i = 1;
  while (i < counts_.size() && counts_[i - 1] <= counts_[i]) ++i;
  while (i < counts_.size() && counts_[i - 1] >= counts_[i]) ++i;
  return i >= counts_.size();
}

nlohmann::json RankProfile::to_json() const {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : counts_) counts.push_back(c.to_string());
  return {{"min_rank", min_rank_}, {"counts", counts}};
}

RankProfile RankProfile::from_json(const nlohmann::json& j) {
  std::vector<ExactInteger> counts;
  for (const auto& c : j.at("counts")) counts.push_back(ExactInteger::parse(c.get<std::string>()));
  return RankProfile(j.at("min_rank").get<std::int64_t>(), std::move(counts));
}

std::int64_t median_rank(const ShapeVector& shape) { return (shape.size() + shape.sum()) / 2; }

RankProfile chain_profile(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("chain length must be positive");
  return RankProfile(1, std::vector<ExactInteger>(static_cast<std::size_t>(m), ExactInteger(1)));
}

RankProfile convolve(const RankProfile& p, const RankProfile& q) {
  const auto& a = p.counts();
  const auto& b = q.counts();
  std::vector<mpz_class> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), a[i].mpz().get_mpz_t(), b[j].mpz().get_mpz_t());
    }
  }
  std::vector<ExactInteger> counts;
  counts.reserve(acc.size());
  for (auto& v : acc) counts.emplace_back(std::move(v));
  return RankProfile(p.min_rank() + q.min_rank(), std::move(counts));
}

RankProfile product_profile(const ShapeVector& shape) {
  RankProfile acc = chain_profile(shape[0]);
  for (std::size_t i = 1; i < static_cast<std::size_t>(shape.size()); ++i) acc = convolve(acc, chain_profile(shape[i]));
  return acc;
}

ExactInteger max_rank_size(const ShapeVector& shape) { return product_profile(shape).at(median_rank(shape)); }

std::map<std::int64_t, ExactInteger> signed_subset_sums(const ShapeVector& shape, std::int64_t limit) {
  std::map<std::int64_t, std::int64_t> multiplicity;
  for (auto m : shape.entries()) ++multiplicity[m];

  std::map<std::int64_t, ExactInteger> table;
  if (limit < 0) return table;
  table.emplace(0, ExactInteger(1));
  for (const auto& [value, count] : multiplicity) {
    std::map<std::int64_t, ExactInteger> next;
    for (const auto& [sum, weight] : table) {
      // choose k copies of `value`: C(count, k) ways, sign (-1)^k
      for (std::int64_t k = 0; k <= count && sum + k * value <= limit; ++k) {
        ExactInteger term = weight * binomial(count, k);
        if (k % 2) term = -term;
        next[sum + k * value] += term;
      }
    }
    table = std::move(next);
  }
  std::erase_if(table, [](const auto& kv) { return kv.second.is_zero(); });
  return table;
}

std::map<std::int64_t, ExactInteger> signed_subset_sums_direct(const ShapeVector& shape, std::int64_t limit) {
  if (shape.size() > 25) throw std::invalid_argument("direct subset enumeration limited to 25 chains");
  const auto n = static_cast<unsigned>(shape.size());
  std::map<std::int64_t, ExactInteger> table;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t sum = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += shape[i];
    }
    if (sum > limit) continue;
    table[sum] += ExactInteger(std::popcount(mask) % 2 ? -1 : 1);
  }
  std::erase_if(table, [](const auto& kv) { return kv.second.is_zero(); });
  return table;
}

ExactInteger homogeneous_bounded_composition_count(std::int64_t m, std::int64_t dims, std::int64_t r) {
  if (m < 1 || dims < 1) throw std::invalid_argument("need m >= 1 and dims >= 1");
  ExactInteger total(0);
  if (r < dims) return total;
  for (std::int64_t i = 0; i <= dims && r - i * m >= dims; ++i) {
    ExactInteger term = binomial(dims, i) * binomial(r - i * m - 1, dims - 1);
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

ExactInteger subset_bounded_composition_count(const ShapeVector& shape, std::int64_t r) {
  const std::int64_t n = shape.size();
  ExactInteger total(0);
  if (r < n) return total;
  for (const auto& [sum, weight] : signed_subset_sums(shape, r - n)) {
    total += weight * binomial(r - sum - 1, n - 1);
  }
  return total;
}

ExactInteger bounded_composition_count(const ShapeVector& shape, std::int64_t r) {
  if (shape.is_homogeneous()) return homogeneous_bounded_composition_count(shape[0], shape.size(), r);
  return subset_bounded_composition_count(shape, r);
}

}  // namespace antichain
