#include "hamwit/verify.hpp"

#include <algorithm>
#include <optional>
#include <thread>
#include <tuple>

namespace hamwit {

namespace {

using detail::mod_sub;

std::uint64_t fits_or_throw(const mpz_class& value, const char* what) {
  if (!value.fits_ulong_p()) {
    throw Error(ErrorCode::Overflow, std::string(what) + " does not fit in 64 bits");
  }
  return value.get_ui();
}

// Everything one worker learns about its rank window of W.
struct WChunkAudit {
  std::map<unsigned, std::uint64_t> histogram;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> isolated;
  std::vector<VertexRank> y22_ranks;
  // (rank, vertex, observed degree, message) of the first violation
  std::optional<std::tuple<VertexRank, Vertex, unsigned, std::string>> violation;
};

void audit_w_range(const GraphParams& p, VertexRank lo, VertexRank hi, WChunkAudit& out) {
  SetEnumerator stream(WSpec{}, p, lo, hi);
  while (const Vertex* vp = stream.next()) {
    const Vertex& v = *vp;
    unsigned degree = 0;
    for_each_neighbor(v, p, [&](const Vertex& w) {
      if (in_w(w, p)) ++degree;
    });
    ++out.histogram[degree];

    const Coord s = coord_sum(v, p);
    const Coord t = v[static_cast<std::size_t>(last_nonzero(v) - 1)];
    const auto violate = [&](const std::string& message) {
      out.violation = {stream.current_rank(), v, degree, message};
    };

    if (s == 1 && t == 1) {
      // Y(1,1): must be matched to its partner in Y(2,2) and nothing else.
      Vertex mate = partner(v, 1, 2, p);
      if (degree != 1) {
        violate("member of Y(1,1) has induced degree " + std::to_string(degree) +
                ", expected 1");
        return;
      }
      if (!are_adjacent(v, mate, p) || !in_y(mate, 2, 2, p)) {
        violate("partner of " + vertex_to_string(v, p) + " is not an adjacent Y(2,2) vertex");
        return;
      }
      out.pairs.emplace_back(v, std::move(mate));
    } else if (s == 2 && t == 2) {
      if (degree != 1) {
        violate("member of Y(2,2) has induced degree " + std::to_string(degree) +
                ", expected 1");
        return;
      }
      out.y22_ranks.push_back(stream.current_rank());
    } else {
      // Y(2,i) with i >= 3.
      if (degree != 0) {
        violate("member of Y(2," + std::to_string(t) + ") has induced degree " +
                std::to_string(degree) + ", expected 0");
        return;
      }
      out.isolated.push_back(v);
    }
  }
}

}  // namespace

const char* adjacency_case_name(AdjacencyCase c) {
  switch (c) {
    case AdjacencyCase::GT: return "GT";
    case AdjacencyCase::LT: return "LT";
    case AdjacencyCase::EQ: return "EQ";
  }
  return "?";
}

bool InducedSubgraphReport::consistent() const {
  std::uint64_t members = 0;
  std::uint64_t degree_total = 0;
  unsigned observed_max = 0;
  for (const auto& [degree, count] : degree_histogram) {
    if (count == 0) continue;
    members += count;
    degree_total += static_cast<std::uint64_t>(degree) * count;
    observed_max = std::max(observed_max, degree);
  }
  return members == vertex_count && degree_total == 2 * edge_count && observed_max == max_degree;
}

unsigned induced_degree(const Vertex& v, const MembershipFn& membership, const GraphParams& p) {
  require_valid_vertex(v, p);
  if (!membership(v)) {
    throw Error(ErrorCode::NotAMember,
                "vertex " + vertex_to_string(v, p) + " is not a member of the set");
  }
  unsigned degree = 0;
  for_each_neighbor(v, p, [&](const Vertex& w) {
    if (membership(w)) ++degree;
  });
  return degree;
}

std::pair<InducedSubgraphReport, MatchingCertificate> verify_w(const GraphParams& p, int workers) {
  validate_spec(WSpec{}, p);
  const VertexRank total = p.vertex_count();
  const std::uint64_t expected_count = fits_or_throw(size_w(p), "|W|");

  int worker_count = std::clamp(workers, 1, 256);
  if (static_cast<VertexRank>(worker_count) > total) {
    worker_count = static_cast<int>(total);
  }

  std::vector<WChunkAudit> chunks(static_cast<std::size_t>(worker_count));
  if (worker_count == 1) {
    audit_w_range(p, 0, total, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
      const auto lo = static_cast<VertexRank>(
          static_cast<unsigned __int128>(total) * static_cast<unsigned>(i) /
          static_cast<unsigned>(worker_count));
      const auto hi = static_cast<VertexRank>(
          static_cast<unsigned __int128>(total) * static_cast<unsigned>(i + 1) /
          static_cast<unsigned>(worker_count));
      pool.emplace_back(audit_w_range, std::cref(p), lo, hi,
                        std::ref(chunks[static_cast<std::size_t>(i)]));
    }
    for (auto& t : pool) t.join();
  }

  // First violation in rank order wins.
  for (const auto& chunk : chunks) {
    if (chunk.violation) {
      const auto& [rank, vertex, degree, message] = *chunk.violation;
      (void)rank;
      throw VerificationError(message, vertex, degree);
    }
  }

  InducedSubgraphReport report;
  report.params = p;
  report.spec = WSpec{};
  MatchingCertificate certificate;
  std::vector<VertexRank> y22_ranks;
  for (auto& chunk : chunks) {
    for (const auto& [degree, count] : chunk.histogram) {
      report.degree_histogram[degree] += count;
      report.vertex_count += count;
    }
    std::move(chunk.pairs.begin(), chunk.pairs.end(), std::back_inserter(certificate.pairs));
    std::move(chunk.isolated.begin(), chunk.isolated.end(),
              std::back_inserter(certificate.isolated));
    y22_ranks.insert(y22_ranks.end(), chunk.y22_ranks.begin(), chunk.y22_ranks.end());
  }

  std::uint64_t degree_total = 0;
  for (const auto& [degree, count] : report.degree_histogram) {
    degree_total += static_cast<std::uint64_t>(degree) * count;
    if (count > 0) report.max_degree = std::max(report.max_degree, degree);
  }
  report.edge_count = degree_total / 2;

  if (report.vertex_count != expected_count) {
    throw VerificationError("|W| = " + std::to_string(report.vertex_count) + ", expected " +
                                std::to_string(expected_count),
                            Vertex{}, 0);
  }
  if (report.max_degree != 1) {
    // Y(1,1) is never empty: (1,0,...,0) is a member, so W always has an
    // edge and max degree 0 is as wrong as max degree 2.
    throw VerificationError(
        "max induced degree of W is " + std::to_string(report.max_degree) + ", expected exactly 1",
        Vertex{}, report.max_degree);
  }
  if (degree_total % 2 != 0 || report.edge_count != certificate.pairs.size()) {
    throw VerificationError("edge audit mismatch: " + std::to_string(report.edge_count) +
                                " edges vs " + std::to_string(certificate.pairs.size()) +
                                " matched pairs",
                            Vertex{}, 0);
  }

  // The partner map must cover Y(2,2) exactly: pairs use each Y(1,1)
  // vertex once by construction, and the multiset of partner ranks must
  // equal the multiset of audited Y(2,2) ranks.
  std::vector<VertexRank> partner_ranks;
  partner_ranks.reserve(certificate.pairs.size());
  for (const auto& [a, b] : certificate.pairs) {
    (void)a;
    partner_ranks.push_back(rank_of(b, p));
  }
  std::sort(partner_ranks.begin(), partner_ranks.end());
  std::sort(y22_ranks.begin(), y22_ranks.end());
  if (partner_ranks != y22_ranks) {
    throw VerificationError("partner map does not cover Y(2,2) exactly", Vertex{}, 0);
  }
  if (2 * certificate.pairs.size() + certificate.isolated.size() != report.vertex_count) {
    throw VerificationError("pairs and isolated vertices do not partition W", Vertex{}, 0);
  }

  return {std::move(report), std::move(certificate)};
}

namespace {

// Shared audit: no member of `members` may have a neighbour satisfying
// `membership`. Returns false and fills `counterexample` on the first edge.
template <typename Enumerate, typename Membership>
bool audit_independent(const GraphParams& p, Enumerate&& enumerate_members,
                       Membership&& membership, Budget& budget, std::string* counterexample,
                       const std::string& set_label) {
  bool ok = true;
  std::string witness;
  enumerate_members([&](const Vertex& v) {
    if (!ok) return;
    for_each_neighbor(v, p, [&](const Vertex& w) {
      if (!ok) return;
      budget.charge();
      if (membership(w)) {
        ok = false;
        witness = "edge " + vertex_to_string(v, p) + " ~ " + vertex_to_string(w, p) +
                  " inside " + set_label;
      }
    });
  });
  if (!ok && counterexample != nullptr) *counterexample = witness;
  return ok;
}

}  // namespace

bool check_independence(const SetSpec& spec, const GraphParams& p, Budget& budget,
                        std::string* counterexample) {
  validate_spec(spec, p);
  auto enumerate_members = [&](auto&& visit) {
    SetEnumerator stream(spec, p);
    while (const Vertex* v = stream.next()) visit(*v);
  };
  auto membership = [&](const Vertex& w) { return in_set(w, spec, p); };
  return audit_independent(p, enumerate_members, membership, budget, counterexample,
                           spec_to_string(spec));
}

bool check_independence_union(Coord s, const std::vector<Coord>& ts, const GraphParams& p,
                              Budget& budget, std::string* counterexample) {
  for (Coord t : ts) validate_spec(YSpec{s, t}, p);
  auto member_of_union = [&](const Vertex& v) {
    for (Coord t : ts) {
      if (in_y(v, s, t, p)) return true;
    }
    return false;
  };
  // Members all live in X(s); enumerate that superset and filter.
  auto enumerate_members = [&](auto&& visit) {
    SetEnumerator stream(XSpec{s}, p);
    while (const Vertex* v = stream.next()) {
      if (member_of_union(*v)) visit(*v);
    }
  };
  std::string label = "union of Y(" + std::to_string(s) + ",t) for t in {";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) label += ",";
    label += std::to_string(ts[i]);
  }
  label += "}";
  return audit_independent(p, enumerate_members, member_of_union, budget, counterexample, label);
}

std::pair<AdjacencyCase, bool> classify_adjacency(const Vertex& v, const Vertex& w,
                                                  const GraphParams& p) {
  require_valid_vertex(v, p);
  require_valid_vertex(w, p);
  if (is_zero_vertex(v) || is_zero_vertex(w)) {
    throw Error(ErrorCode::ZeroVector,
                "classify_adjacency is defined only for nonzero vertices");
  }
  if (!are_adjacent(v, w, p)) {
    throw Error(ErrorCode::NotAdjacent, "vertices " + vertex_to_string(v, p) + " and " +
                                            vertex_to_string(w, p) + " are not adjacent");
  }
  const Coord s1 = coord_sum(v, p);
  const Coord s2 = coord_sum(w, p);
  const int l1 = last_nonzero(v);
  const int l2 = last_nonzero(w);
  const Coord t1 = v[static_cast<std::size_t>(l1 - 1)];
  const Coord t2 = w[static_cast<std::size_t>(l2 - 1)];

  if (l1 > l2) return {AdjacencyCase::GT, mod_sub(s1, s2, p.k) == t1};
  if (l1 < l2) return {AdjacencyCase::LT, mod_sub(s2, s1, p.k) == t2};
  return {AdjacencyCase::EQ, mod_sub(s1, s2, p.k) == mod_sub(t1, t2, p.k)};
}

namespace {

enum class CongruencePattern { AllFalse, ThirdHolds };

// Validates the shared quadruple preconditions of the two cross-set
// lemma checks and reports which congruences hold.
void require_quadruple(Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p,
                       CongruencePattern pattern) {
  p.validate();
  validate_spec(YSpec{s1, t1}, p);
  validate_spec(YSpec{s2, t2}, p);
  if (t1 == t2) {
    throw Error(ErrorCode::PreconditionViolation, "t1 = t2 = " + std::to_string(t1) +
                                                      "; the lemma requires t1 != t2");
  }
  const bool first = mod_sub(s1, s2, p.k) == t1;
  const bool second = mod_sub(s2, s1, p.k) == t2;
  const bool third = mod_sub(s1, s2, p.k) == mod_sub(t1, t2, p.k);
  if (pattern == CongruencePattern::AllFalse) {
    if (first) {
      throw Error(ErrorCode::PreconditionViolation, "congruence (i) s1 - s2 = t1 holds");
    }
    if (second) {
      throw Error(ErrorCode::PreconditionViolation, "congruence (ii) s2 - s1 = t2 holds");
    }
    if (third) {
      throw Error(ErrorCode::PreconditionViolation, "congruence (iii) s1 - s2 = t1 - t2 holds");
    }
  } else {
    if (!third) {
      throw Error(ErrorCode::PreconditionViolation,
                  "congruence (iii) s1 - s2 = t1 - t2 must hold");
    }
  }
}

std::string quadruple_label(Coord s1, Coord t1, Coord s2, Coord t2) {
  return "Y(" + std::to_string(s1) + "," + std::to_string(t1) + ") vs Y(" + std::to_string(s2) +
         "," + std::to_string(t2) + ")";
}

}  // namespace

bool check_no_cross_edges(Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p,
                          Budget& budget, std::string* counterexample) {
  require_quadruple(s1, t1, s2, t2, p, CongruencePattern::AllFalse);
  bool ok = true;
  std::string witness;
  SetEnumerator stream(YSpec{s1, t1}, p);
  while (const Vertex* v = stream.next()) {
    for_each_neighbor(*v, p, [&](const Vertex& w) {
      if (!ok) return;
      budget.charge();
      if (in_y(w, s2, t2, p)) {
        ok = false;
        witness = "edge " + vertex_to_string(*v, p) + " ~ " + vertex_to_string(w, p) +
                  " between " + quadruple_label(s1, t1, s2, t2);
      }
    });
    if (!ok) break;
  }
  if (!ok && counterexample != nullptr) *counterexample = witness;
  return ok;
}

bool check_unique_partner(Coord s1, Coord t1, Coord s2, Coord t2, const GraphParams& p,
                          Budget& budget, std::string* counterexample) {
  require_quadruple(s1, t1, s2, t2, p, CongruencePattern::ThirdHolds);
  bool ok = true;
  std::string witness;
  SetEnumerator stream(YSpec{s1, t1}, p);
  while (const Vertex* v = stream.next()) {
    const Vertex expected = partner(*v, t1, t2, p);
    unsigned found = 0;
    bool expected_seen = false;
    for_each_neighbor(*v, p, [&](const Vertex& w) {
      budget.charge();
      if (in_y(w, s2, t2, p)) {
        ++found;
        if (w == expected) expected_seen = true;
      }
    });
    if (found != 1 || !expected_seen) {
      ok = false;
      witness = "vertex " + vertex_to_string(*v, p) + " of " + quadruple_label(s1, t1, s2, t2) +
                " has " + std::to_string(found) + " partner(s)" +
                (expected_seen ? "" : " and none equals the coordinate replacement");
      break;
    }
  }
  if (!ok && counterexample != nullptr) *counterexample = witness;
  return ok;
}

namespace {

template <typename CheckFn>
LemmaSweepResult sweep_quadruples(const GraphParams& p, Budget& budget,
                                  CongruencePattern pattern, CheckFn&& check) {
  p.validate();
  LemmaSweepResult result;
  const std::uint64_t before = budget.used();
  for (Coord s1 = 0; s1 < p.k && result.passed; ++s1) {
    for (Coord t1 = 1; t1 < p.k && result.passed; ++t1) {
      for (Coord s2 = 0; s2 < p.k && result.passed; ++s2) {
        for (Coord t2 = 1; t2 < p.k && result.passed; ++t2) {
          if (t1 == t2) continue;
          ++result.quadruples_total;
          const bool first = mod_sub(s1, s2, p.k) == t1;
          const bool second = mod_sub(s2, s1, p.k) == t2;
          const bool third = mod_sub(s1, s2, p.k) == mod_sub(t1, t2, p.k);
          const bool matches = (pattern == CongruencePattern::AllFalse)
                                   ? (!first && !second && !third)
                                   : third;
          if (!matches) continue;
          ++result.quadruples_checked;
          std::string witness;
          if (!check(s1, t1, s2, t2, witness)) {
            result.passed = false;
            result.counterexample = witness;
          }
        }
      }
    }
  }
  result.probes = budget.used() - before;
  return result;
}

}  // namespace

LemmaSweepResult sweep_no_cross_edges(const GraphParams& p, Budget& budget) {
  return sweep_quadruples(p, budget, CongruencePattern::AllFalse,
                          [&](Coord s1, Coord t1, Coord s2, Coord t2, std::string& witness) {
                            return check_no_cross_edges(s1, t1, s2, t2, p, budget, &witness);
                          });
}

LemmaSweepResult sweep_unique_partner(const GraphParams& p, Budget& budget) {
  return sweep_quadruples(p, budget, CongruencePattern::ThirdHolds,
                          [&](Coord s1, Coord t1, Coord s2, Coord t2, std::string& witness) {
                            return check_unique_partner(s1, t1, s2, t2, p, budget, &witness);
                          });
}

ClassifySweepResult sweep_classify(const GraphParams& p, Budget& budget) {
  p.validate();
  const VertexRank total = p.vertex_count();
  ClassifySweepResult result;

  Vertex v(static_cast<std::size_t>(p.n), 0);
  for (VertexRank r = 0; r < total && result.passed; ++r) {
    if (r > 0) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < p.k) break;
        v[i] = 0;
      }
    }
    if (is_zero_vertex(v)) continue;
    const Coord t1 = v[static_cast<std::size_t>(last_nonzero(v) - 1)];
    for_each_neighbor(v, p, [&](const Vertex& w) {
      if (!result.passed) return;
      budget.charge();
      if (is_zero_vertex(w)) return;
      const Coord t2 = w[static_cast<std::size_t>(last_nonzero(w) - 1)];
      if (t1 == t2) return;
      ++result.pairs_checked;
      const auto [adjacency_case, holds] = classify_adjacency(v, w, p);
      switch (adjacency_case) {
        case AdjacencyCase::GT: ++result.case_gt; break;
        case AdjacencyCase::LT: ++result.case_lt; break;
        case AdjacencyCase::EQ: ++result.case_eq; break;
      }
      if (!holds) {
        result.passed = false;
        result.counterexample = "adjacent pair " + vertex_to_string(v, p) + " ~ " +
                                vertex_to_string(w, p) + " violates case " +
                                adjacency_case_name(adjacency_case);
      }
    });
  }
  return result;
}

IndependenceSweepResult sweep_independence(const GraphParams& p, Budget& budget) {
  p.validate();
  if (p.k > 24) {
    throw Error(ErrorCode::TooLarge,
                "independence sweep enumerates all 2^(k-1) unions; limited to k <= 24");
  }
  IndependenceSweepResult result;
  std::string witness;

  for (Coord s = 0; s < p.k && result.passed; ++s) {
    ++result.sets_checked;
    if (!check_independence(XSpec{s}, p, budget, &witness)) {
      result.passed = false;
      result.counterexample = witness;
    }
  }

  // Every union over a nonempty subset T of {1,...,k-1}, for every s.
  const unsigned subsets = 1u << (p.k - 1);
  for (Coord s = 0; s < p.k && result.passed; ++s) {
    for (unsigned mask = 1; mask < subsets && result.passed; ++mask) {
      std::vector<Coord> ts;
      for (Coord t = 1; t < p.k; ++t) {
        if (mask & (1u << (t - 1))) ts.push_back(t);
      }
      ++result.sets_checked;
      if (!check_independence_union(s, ts, p, budget, &witness)) {
        result.passed = false;
        result.counterexample = witness;
      }
    }
  }
  return result;
}

}  // namespace hamwit
