#ifndef HAMWIT_ORACLE_HPP
#define HAMWIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hamwit/hamming.hpp"

namespace hamwit {

// Explicit adjacency matrix of a small graph, packed one bit row per
// vertex. Ground truth for the exhaustive searches; none of this code
// depends on the construction module.
class DenseGraph {
 public:
  explicit DenseGraph(std::uint32_t vertex_count);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t words_per_row() const { return words_per_row_; }

  void add_edge(std::uint32_t u, std::uint32_t v);
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  unsigned degree(std::uint32_t v) const;
  std::uint64_t edge_count() const;

  const std::uint64_t* row(std::uint32_t v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_per_row_;
  }

 private:
  std::uint64_t* mutable_row(std::uint32_t v) {
    return bits_.data() + static_cast<std::size_t>(v) * words_per_row_;
  }

  std::uint32_t vertex_count_;
  std::uint32_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

inline constexpr std::uint32_t kDenseCap = 4096;

// Materializes H(n,k) by testing every vertex pair with are_adjacent
// (deliberately not via the neighbour stream, so the two paths
// cross-check each other). Throws TooLarge when k^n > cap.
DenseGraph build_dense(const GraphParams& p, std::uint32_t cap = kDenseCap);

struct MisSearchStats {
  std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

// Exact maximum independent set size by branch and bound with a greedy
// clique-cover bound. Deterministic. Throws TooLarge above kDenseCap.
std::uint32_t exact_mis(const DenseGraph& g, MisSearchStats* stats = nullptr);

struct FSearchStats {
  mpz_class subset_count;               // C(vertex_count, alpha+1)
  std::uint64_t nodes = 0;              // partial subsets visited
  std::uint64_t subsets_examined = 0;   // complete (alpha+1)-subsets reached
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Minimum over all (alpha+1)-subsets of the maximum induced degree,
// enumerated lexicographically with early pruning: a partial subset is
// abandoned once its max induced degree already ties the best known.
//
// `upper_bound_hint`, when given, must be the audited max degree of some
// actual (alpha+1)-subset; the search then only looks for strictly better
// subsets (in particular it still scans for a possible 0).
//
// Throws BudgetExceeded when C(vertex_count, alpha+1) > subset_budget.
unsigned exact_f(const DenseGraph& g, std::uint32_t alpha,
                 std::uint64_t subset_budget = kDefaultSubsetBudget,
                 std::optional<unsigned> upper_bound_hint = std::nullopt,
                 FSearchStats* stats = nullptr);

}  // namespace hamwit

#endif  // HAMWIT_ORACLE_HPP
