#ifndef HAMWIT_VERIFY_HPP
#define HAMWIT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamwit/sets.hpp"

namespace hamwit {

// Audited adjacency facts about the subgraph induced by one vertex set.
struct InducedSubgraphReport {
  GraphParams params;
  SetSpec spec;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  unsigned max_degree = 0;
  // degree -> number of vertices with that induced degree; zero-count
  // degrees are omitted.
  std::map<unsigned, std::uint64_t> degree_histogram;

  // Handshake identity (sum of degree*count = 2*edges) and count identity.
  bool consistent() const;
};

// Explicit pairing between Y(1,1) and Y(2,2), plus the vertices of W with
// no neighbour inside W. Pairs are ordered by ascending rank of the Y(1,1)
// endpoint regardless of worker count.
struct MatchingCertificate {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> isolated;
};

// Relation between the last nonzero indices of an adjacent vertex pair.
enum class AdjacencyCase { GT, LT, EQ };

const char* adjacency_case_name(AdjacencyCase c);

class VerificationError : public Error {
 public:
  VerificationError(const std::string& message, Vertex counterexample, unsigned observed_degree)
      : Error(ErrorCode::VerificationFailed, message),
        counterexample_(std::move(counterexample)),
        observed_degree_(observed_degree) {}

  const Vertex& counterexample() const { return counterexample_; }
  unsigned observed_degree() const { return observed_degree_; }

 private:
  Vertex counterexample_;
  unsigned observed_degree_;
};

// Probe budget for the exhaustive checks. One probe is one membership or
// adjacency evaluation. Exceeding the cap throws BudgetExceeded; a check is
// never silently truncated.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultProbes = 1'000'000;

  explicit Budget(std::uint64_t max_probes = kDefaultProbes) : limit_(max_probes) {}

  void charge(std::uint64_t probes = 1) {
    used_ += probes;
    if (used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "probe budget exceeded: " + std::to_string(used_) + " > " +
                      std::to_string(limit_));
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

using MembershipFn = std::function<bool(const Vertex&)>;

// Number of neighbours of v that satisfy the membership predicate.
// Requires membership(v); throws NotAMember otherwise.
unsigned induced_degree(const Vertex& v, const MembershipFn& membership, const GraphParams& p);

// Streams W, audits every induced degree, and asserts vertex_count =
// k^(n-1)+1 and max_degree = 1 exactly (W always contains at least one
// edge, so a max degree of 0 is also a failure). Builds the matching
// certificate with pairs (v, partner(v,1,2)) for v in Y(1,1) and checks
// each pair's adjacency and each isolated vertex's degree. Throws
// VerificationError with the first counterexample on any violation.
std::pair<InducedSubgraphReport, MatchingCertificate> verify_w(const GraphParams& p,
                                                               int workers = 1);

// True iff no member of the set has a neighbour in the set. The optional
// counterexample output receives the first offending edge.
bool check_independence(const SetSpec& spec, const GraphParams& p, Budget& budget,
                        std::string* counterexample = nullptr);

// Same audit for a union of Y(s,t) over the given t values (fixed s).
bool check_independence_union(Coord s, const std::vector<Coord>& ts, const GraphParams& p,
                              Budget& budget, std::string* counterexample = nullptr);

// Classifies an adjacent pair of nonzero vertices by comparing l(v) with
// l(w) and reports whether the matching congruence holds:
//   GT: s1 - s2 = t1,  LT: s2 - s1 = t2,  EQ: s1 - s2 = t1 - t2  (mod k)
// where s = coord sum and t = last nonzero value of each vertex. Throws
// NotAdjacent / ZeroVector.
std::pair<AdjacencyCase, bool> classify_adjacency(const Vertex& v, const Vertex& w,
                                                  const GraphParams& p);

// True iff there are zero edges between Y(s1,t1) and Y(s2,t2). Requires
// t1,t2 nonzero, t1 != t2, and all three congruences above false; throws
// PreconditionViolation naming the congruence that holds otherwise.
bool check_no_cross_edges(Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p,
                          Budget& budget, std::string* counterexample = nullptr);

// True iff every vertex of Y(s1,t1) has exactly one neighbour in Y(s2,t2)
// and that neighbour is partner(v,t1,t2). Requires t1,t2 nonzero, t1 != t2,
// and s1 - s2 = t1 - t2 (mod k).
bool check_unique_partner(Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p,
                          Budget& budget, std::string* counterexample = nullptr);

// Full-parameter sweeps used by the check-lemma command. Each stops at the
// first violation and reports it.
struct LemmaSweepResult {
  std::uint64_t quadruples_total = 0;    // (s1,t1,s2,t2) with t1,t2 nonzero, t1 != t2
  std::uint64_t quadruples_checked = 0;  // those meeting the lemma's congruence precondition
  std::uint64_t probes = 0;
  bool passed = true;
  std::string counterexample;
};

LemmaSweepResult sweep_no_cross_edges(const GraphParams& p, Budget& budget);
LemmaSweepResult sweep_unique_partner(const GraphParams& p, Budget& budget);

struct ClassifySweepResult {
  // Ordered adjacent nonzero pairs with distinct last-nonzero values; the
  // zero vector belongs to no Y set and is excluded from the sweep.
  std::uint64_t pairs_checked = 0;
  std::uint64_t case_gt = 0;
  std::uint64_t case_lt = 0;
  std::uint64_t case_eq = 0;
  bool passed = true;
  std::string counterexample;
};

ClassifySweepResult sweep_classify(const GraphParams& p, Budget& budget);

struct IndependenceSweepResult {
  std::uint64_t sets_checked = 0;  // every X(s) and every union of Y(s,t) over t subsets
  bool passed = true;
  std::string counterexample;
};

IndependenceSweepResult sweep_independence(const GraphParams& p, Budget& budget);

}  // namespace hamwit

#endif  // HAMWIT_VERIFY_HPP
