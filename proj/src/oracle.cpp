#include "antichain/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace antichain {

namespace {

void require_within_cap(const ShapeVector& shape, std::int64_t cap) {
  const ExactInteger count = shape.element_count();
  if (count > ExactInteger(cap)) {
    throw CapExceeded("product of shape (" + shape.to_string() + ") has " + count.to_string() +
                      " elements, over the cap of " + std::to_string(cap));
  }
}

// Calls visit(point) for every tuple of the product in lexicographic order.
template <typename Visit>
void for_each_point(const ShapeVector& shape, Visit&& visit) {
  Point x(static_cast<std::size_t>(shape.size()), 1);
  while (true) {
    visit(x);
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == shape[i - 1]) x[--i] = 1;
    if (i == 0) return;
    ++x[i - 1];
  }
}

// Hopcroft-Karp on a bipartite graph with `n` vertices per side.
class BipartiteMatcher {
 public:
  static constexpr int kFree = -1;

  explicit BipartiteMatcher(const std::vector<std::vector<int>>& adj)
      : adj_(adj), match_left_(adj.size(), kFree), match_right_(adj.size(), kFree), dist_(adj.size()) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(static_cast<int>(u))) ++matched;
      }
    }
    return matched;
  }

  const std::vector<int>& match_left() const { return match_left_; }
  const std::vector<int>& match_right() const { return match_right_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        int w = match_right_[static_cast<std::size_t>(v)];
        if (w == kFree) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Recursion depth is bounded by the BFS layer count, at most n.
  bool dfs(int u) {
    const auto uu = static_cast<std::size_t>(u);
    for (int v : adj_[uu]) {
      int w = match_right_[static_cast<std::size_t>(v)];
      if (w == kFree || (dist_[static_cast<std::size_t>(w)] == dist_[uu] + 1 && dfs(w))) {
        match_left_[uu] = v;
        match_right_[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist_[uu] = kInf;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

bool dominated_by(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool is_antichain(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (dominated_by(points[i], points[j]) || dominated_by(points[j], points[i])) return false;
    }
  }
  return true;
}

PosetInstance::PosetInstance(ShapeVector shape, std::int64_t cap) : shape_(std::move(shape)) {
  require_within_cap(shape_, cap);
  elements_.reserve(static_cast<std::size_t>(shape_.element_count().to_int64()));
  for_each_point(shape_, [&](const Point& x) { elements_.push_back(x); });
}

void PosetInstance::shuffle(std::mt19937_64& rng) { std::shuffle(elements_.begin(), elements_.end(), rng); }

bool PosetInstance::check_order_axioms(std::mt19937_64& rng, int samples) const {
  std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (!precedes(a, a)) return false;
    if (precedes(a, b) && precedes(b, a) && elements_[a] != elements_[b]) return false;
    if (precedes(a, b) && precedes(b, c) && !precedes(a, c)) return false;
  }
  return true;
}

nlohmann::json AntichainWitness::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : elements) out.push_back(p);
  return out;
}

RankProfile enumerate_rank_profile(const ShapeVector& shape, std::int64_t cap) {
  require_within_cap(shape, cap);
  const std::int64_t lo = shape.size();
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(shape.sum() - lo + 1), 0);
  for_each_point(shape, [&](const Point& x) {
    std::int64_t s = 0;
    for (auto v : x) s += v;
    ++histogram[static_cast<std::size_t>(s - lo)];
  });
  std::vector<ExactInteger> counts;
  counts.reserve(histogram.size());
  for (auto c : histogram) counts.emplace_back(static_cast<std::int64_t>(c));
  return RankProfile(lo, std::move(counts));
}

DilworthResult max_antichain_dilworth(const PosetInstance& poset, std::int64_t cap) {
  const std::size_t n = poset.size();
  if (static_cast<std::int64_t>(n) > cap) {
    throw CapExceeded("poset has " + std::to_string(n) + " elements, over the cap of " + std::to_string(cap));
  }

  // left copy u -> right copy v whenever u < v strictly
  std::vector<std::vector<int>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && poset.precedes(u, v)) adj[u].push_back(static_cast<int>(v));
    }
  }
  BipartiteMatcher matcher(adj);
  const std::size_t matching = matcher.run();

  // Koenig: Z = vertices reachable from free left vertices along alternating
  // paths. Cover = (L \ Z) + (R & Z); its complement pairs give the antichain.
  std::vector<bool> left_seen(n, false), right_seen(n, false);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < n; ++u) {
    if (matcher.match_left()[u] == BipartiteMatcher::kFree) {
      left_seen[u] = true;
      q.push(u);
    }
  }
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (int v : adj[u]) {
      const auto vv = static_cast<std::size_t>(v);
      if (right_seen[vv]) continue;
      right_seen[vv] = true;
      const int w = matcher.match_right()[vv];
      if (w != BipartiteMatcher::kFree && !left_seen[static_cast<std::size_t>(w)]) {
        left_seen[static_cast<std::size_t>(w)] = true;
        q.push(static_cast<std::size_t>(w));
      }
    }
  }

  AntichainWitness witness;
  for (std::size_t x = 0; x < n; ++x) {
    if (left_seen[x] && !right_seen[x]) witness.elements.push_back(poset[x]);
  }
  const std::size_t cover = n - matching;
  if (witness.size() != cover || !is_antichain(witness.elements)) {
    throw std::logic_error("Dilworth witness failed verification for shape " + poset.shape().to_string());
  }
  return {ExactInteger(static_cast<std::int64_t>(cover)), cover, std::move(witness)};
}

nlohmann::json SpernerReport::to_json() const {
  return {{"shape", shape.to_string()},
          {"dilworth_size", dilworth_size.to_string()},
          {"max_rank_size", max_rank_size.to_string()},
          {"equal", equal},
          {"median_slice_is_antichain", median_slice_is_antichain},
          {"median_slice_projection_injective", median_slice_projection_injective}};
}

SpernerReport sperner_witness_check(const ShapeVector& shape, std::int64_t cap) {
  const PosetInstance poset(shape, cap);
  const DilworthResult dilworth = max_antichain_dilworth(poset, cap);

  const std::int64_t h = median_rank(shape);
  std::vector<Point> slice;
  for (const auto& x : poset.elements()) {
    std::int64_t s = 0;
    for (auto v : x) s += v;
    if (s == h) slice.push_back(x);
  }
  std::set<Point> projections;
  for (const auto& x : slice) projections.emplace(x.begin(), x.end() - 1);

  SpernerReport report{shape, dilworth.size, max_rank_size(shape)};
  report.equal = report.dilworth_size == report.max_rank_size;
  report.median_slice_is_antichain = is_antichain(slice) && ExactInteger(static_cast<std::int64_t>(slice.size())) == report.max_rank_size;
  report.median_slice_projection_injective = projections.size() == slice.size();
  return report;
}

}  // namespace antichain
