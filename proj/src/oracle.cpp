#include "hamwit/oracle.hpp"

#include <algorithm>
#include <bit>

namespace hamwit {

namespace {

using Words = std::vector<std::uint64_t>;

bool test_bit(const std::uint64_t* words, std::uint32_t i) {
  return (words[i >> 6] >> (i & 63)) & 1u;
}

void set_bit(std::uint64_t* words, std::uint32_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }

void clear_bit(Words& words, std::uint32_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

int first_bit(const Words& words) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w] != 0) {
      return static_cast<int>((w << 6) + static_cast<std::size_t>(std::countr_zero(words[w])));
    }
  }
  return -1;
}

}  // namespace

DenseGraph::DenseGraph(std::uint32_t vertex_count)
    : vertex_count_(vertex_count),
      words_per_row_((vertex_count + 63) / 64),
      bits_(static_cast<std::size_t>(vertex_count) * words_per_row_, 0) {}

void DenseGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v || u >= vertex_count_ || v >= vertex_count_) {
    throw Error(ErrorCode::IndexOutOfRange, "bad edge endpoints");
  }
  set_bit(mutable_row(u), v);
  set_bit(mutable_row(v), u);
}

bool DenseGraph::adjacent(std::uint32_t u, std::uint32_t v) const { return test_bit(row(u), v); }

unsigned DenseGraph::degree(std::uint32_t v) const {
  unsigned d = 0;
  const std::uint64_t* r = row(v);
  for (std::uint32_t w = 0; w < words_per_row_; ++w) d += std::popcount(r[w]);
  return d;
}

std::uint64_t DenseGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < vertex_count_; ++v) total += degree(v);
  return total / 2;
}

DenseGraph build_dense(const GraphParams& p, std::uint32_t cap) {
  const VertexRank total = p.vertex_count();
  if (total > cap) {
    throw Error(ErrorCode::TooLarge, "k^n = " + std::to_string(total) +
                                         " exceeds the dense cap " + std::to_string(cap));
  }
  const auto count = static_cast<std::uint32_t>(total);
  std::vector<Vertex> vertices;
  vertices.reserve(count);
  for (std::uint32_t r = 0; r < count; ++r) vertices.push_back(unrank(r, p));

  DenseGraph g(count);
  for (std::uint32_t u = 0; u < count; ++u) {
    for (std::uint32_t v = u + 1; v < count; ++v) {
      if (are_adjacent(vertices[u], vertices[v], p)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

class MisSearch {
 public:
  explicit MisSearch(const DenseGraph& g) : g_(g), words_(g.words_per_row()) {}

  std::uint32_t run(MisSearchStats* stats) {
    Words all(words_, 0);
    for (std::uint32_t v = 0; v < g_.vertex_count(); ++v) set_bit(all.data(), v);
    if (g_.vertex_count() % 64 != 0 && words_ > 0) {
      // mask off bits past the last vertex
      all[words_ - 1] &= (std::uint64_t{1} << (g_.vertex_count() % 64)) - 1;
    }
    search(all, 0);
    if (stats != nullptr) stats->nodes = nodes_;
    return best_;
  }

 private:
  // Greedy partition of the candidate set into cliques; the number of
  // cliques bounds the independent set size from above.
  std::uint32_t clique_cover_bound(const Words& candidates) const {
    Words remaining = candidates;
    std::uint32_t cliques = 0;
    int v = first_bit(remaining);
    while (v >= 0) {
      ++cliques;
      clear_bit(remaining, static_cast<std::uint32_t>(v));
      Words extend(words_);
      const std::uint64_t* rv = g_.row(static_cast<std::uint32_t>(v));
      for (std::uint32_t w = 0; w < words_; ++w) extend[w] = remaining[w] & rv[w];
      int u = first_bit(extend);
      while (u >= 0) {
        clear_bit(remaining, static_cast<std::uint32_t>(u));
        const std::uint64_t* ru = g_.row(static_cast<std::uint32_t>(u));
        for (std::uint32_t w = 0; w < words_; ++w) {
          extend[w] &= ru[w];
        }
        clear_bit(extend, static_cast<std::uint32_t>(u));
        u = first_bit(extend);
      }
      v = first_bit(remaining);
    }
    return cliques;
  }

  void search(Words candidates, std::uint32_t chosen) {
    ++nodes_;
    const int v = first_bit(candidates);
    if (v < 0) {
      best_ = std::max(best_, chosen);
      return;
    }
    if (chosen + clique_cover_bound(candidates) <= best_) return;

    // Include v: drop its closed neighbourhood.
    Words included = candidates;
    const std::uint64_t* rv = g_.row(static_cast<std::uint32_t>(v));
    for (std::uint32_t w = 0; w < words_; ++w) included[w] &= ~rv[w];
    clear_bit(included, static_cast<std::uint32_t>(v));
    search(std::move(included), chosen + 1);

    // Exclude v.
    clear_bit(candidates, static_cast<std::uint32_t>(v));
    search(std::move(candidates), chosen);
  }

  const DenseGraph& g_;
  std::uint32_t words_;
  std::uint32_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint32_t exact_mis(const DenseGraph& g, MisSearchStats* stats) {
  if (g.vertex_count() > kDenseCap) {
    throw Error(ErrorCode::TooLarge, "exact_mis is limited to " + std::to_string(kDenseCap) +
                                         " vertices, got " + std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() == 0) return 0;
  MisSearch search(g);
  return search.run(stats);
}

namespace {

class FSearch {
 public:
  FSearch(const DenseGraph& g, std::uint32_t subset_size, unsigned initial_best)
      : g_(g),
        words_(g.words_per_row()),
        subset_size_(subset_size),
        best_(initial_best),
        chosen_mask_(words_, 0),
        induced_degree_(g.vertex_count(), 0) {}

  unsigned run(FSearchStats* stats) {
    chosen_.reserve(subset_size_);
    descend(0, 0);
    if (stats != nullptr) {
      stats->nodes = nodes_;
      stats->subsets_examined = complete_;
    }
    return best_;
  }

 private:
  void descend(std::uint32_t start, unsigned current_max) {
    ++nodes_;
    if (chosen_.size() == subset_size_) {
      ++complete_;
      best_ = std::min(best_, current_max);
      return;
    }
    const std::uint32_t remaining = subset_size_ - static_cast<std::uint32_t>(chosen_.size());
    for (std::uint32_t v = start; v + remaining <= g_.vertex_count(); ++v) {
      const std::uint64_t* rv = g_.row(v);
      unsigned degree_v = 0;
      for (std::uint32_t w = 0; w < words_; ++w) {
        degree_v += std::popcount(rv[w] & chosen_mask_[w]);
      }
      unsigned new_max = std::max(current_max, degree_v);
      for (std::uint32_t u : chosen_) {
        if (test_bit(rv, u)) new_max = std::max(new_max, induced_degree_[u] + 1u);
      }
      // Degrees only grow as vertices join the subset, so a partial max
      // that already ties the best cannot lead to an improvement.
      if (new_max >= best_) continue;

      chosen_.push_back(v);
      set_bit(chosen_mask_.data(), v);
      for (std::uint32_t u : chosen_) {
        if (u != v && test_bit(rv, u)) ++induced_degree_[u];
      }
      induced_degree_[v] = degree_v;

      descend(v + 1, new_max);

      for (std::uint32_t u : chosen_) {
        if (u != v && test_bit(rv, u)) --induced_degree_[u];
      }
      chosen_.pop_back();
      clear_bit(chosen_mask_, v);
    }
  }

  const DenseGraph& g_;
  std::uint32_t words_;
  std::uint32_t subset_size_;
  unsigned best_;
  Words chosen_mask_;
  std::vector<unsigned> induced_degree_;
  std::vector<std::uint32_t> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t complete_ = 0;
};

}  // namespace

unsigned exact_f(const DenseGraph& g, std::uint32_t alpha, std::uint64_t subset_budget,
                 std::optional<unsigned> upper_bound_hint, FSearchStats* stats) {
  const std::uint32_t subset_size = alpha + 1;
  if (subset_size > g.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolation,
                "alpha + 1 = " + std::to_string(subset_size) + " exceeds the vertex count " +
                    std::to_string(g.vertex_count()));
  }
  mpz_class subset_count;
  mpz_bin_uiui(subset_count.get_mpz_t(), g.vertex_count(), subset_size);
  if (stats != nullptr) stats->subset_count = subset_count;
  if (subset_count > subset_budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "C(" + std::to_string(g.vertex_count()) + ", " + std::to_string(subset_size) +
                    ") = " + subset_count.get_str() + " subsets exceeds the budget " +
                    std::to_string(subset_budget));
  }

  // With no hint, any (alpha+1)-subset has max degree < alpha+1, so the
  // subset size itself acts as infinity.
  const unsigned initial_best = upper_bound_hint.value_or(subset_size);
  FSearch search(g, subset_size, initial_best);
  return search.run(stats);
}

}  // namespace hamwit
