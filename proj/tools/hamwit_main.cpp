#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hamwit/oracle.hpp"
#include "hamwit/report_io.hpp"
#include "hamwit/sets.hpp"
#include "hamwit/verify.hpp"

namespace {

using namespace hamwit;

constexpr std::size_t kFlushThreshold = 1 << 16;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_chunked(std::string& buffer, std::string_view piece) {
  buffer.append(piece);
  buffer.push_back('\n');
  if (buffer.size() >= kFlushThreshold) {
    std::cout.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    buffer.clear();
  }
}

void flush_buffer(std::string& buffer) {
  if (!buffer.empty()) {
    std::cout.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    buffer.clear();
  }
}

int clamp_workers(int workers, VertexRank total) {
  int clamped = std::clamp(workers, 1, 256);
  if (static_cast<VertexRank>(clamped) > total) clamped = static_cast<int>(total);
  return std::max(clamped, 1);
}

// DIMACS-like listing of the subgraph induced by the set: header
// "p edge V E", then one "e u v" line per edge with u,v = rank+1, u < v,
// ordered by (u, v). Two streaming passes: count, then emit.
int generate_edges(const SetSpec& spec, const GraphParams& p) {
  std::uint64_t members = 0;
  std::uint64_t edges = 0;
  {
    SetEnumerator stream(spec, p);
    while (const Vertex* v = stream.next()) {
      ++members;
      const VertexRank rank_v = stream.current_rank();
      for_each_neighbor(*v, p, [&](const Vertex& w) {
        if (in_set(w, spec, p) && rank_of(w, p) > rank_v) ++edges;
      });
    }
  }

  std::string buffer;
  buffer.reserve(kFlushThreshold + 64);
  write_chunked(buffer, "p edge " + std::to_string(members) + " " + std::to_string(edges));

  SetEnumerator stream(spec, p);
  std::vector<VertexRank> partners;
  while (const Vertex* v = stream.next()) {
    const VertexRank rank_v = stream.current_rank();
    partners.clear();
    for_each_neighbor(*v, p, [&](const Vertex& w) {
      if (!in_set(w, spec, p)) return;
      const VertexRank rank_w = rank_of(w, p);
      if (rank_w > rank_v) partners.push_back(rank_w);
    });
    std::sort(partners.begin(), partners.end());
    for (VertexRank rank_w : partners) {
      write_chunked(buffer,
                    "e " + std::to_string(rank_v + 1) + " " + std::to_string(rank_w + 1));
    }
  }
  flush_buffer(buffer);
  return 0;
}

int run_gen(const SetSpec& spec, const GraphParams& p, const std::string& format, int workers) {
  validate_spec(spec, p);
  if (format == "edges") return generate_edges(spec, p);
  const bool as_ranks = (format == "ranks");

  const VertexRank total = p.vertex_count();
  const int worker_count = clamp_workers(workers, total);

  if (worker_count == 1) {
    std::string buffer;
    buffer.reserve(kFlushThreshold + 64);
    SetEnumerator stream(spec, p);
    while (const Vertex* v = stream.next()) {
      write_chunked(buffer, as_ranks ? std::to_string(stream.current_rank())
                                     : vertex_to_string(*v, p));
    }
    flush_buffer(buffer);
    return 0;
  }

  // Partition the rank space; chunks are written back in order, so the
  // byte stream is identical at any worker count.
  std::vector<std::string> outputs(static_cast<std::size_t>(worker_count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int i = 0; i < worker_count; ++i) {
    const auto lo = static_cast<VertexRank>(static_cast<unsigned __int128>(total) *
                                            static_cast<unsigned>(i) /
                                            static_cast<unsigned>(worker_count));
    const auto hi = static_cast<VertexRank>(static_cast<unsigned __int128>(total) *
                                            static_cast<unsigned>(i + 1) /
                                            static_cast<unsigned>(worker_count));
    pool.emplace_back([&, i, lo, hi]() {
      std::string& out = outputs[static_cast<std::size_t>(i)];
      SetEnumerator stream(spec, p, lo, hi);
      while (const Vertex* v = stream.next()) {
        out += as_ranks ? std::to_string(stream.current_rank()) : vertex_to_string(*v, p);
        out += '\n';
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const std::string& out : outputs) {
    std::cout.write(out.data(), static_cast<std::streamsize>(out.size()));
  }
  return 0;
}

int run_verify(const GraphParams& p, int workers, bool with_certificate, bool as_json) {
  ReportDoc doc;
  doc.add("n", p.n);
  doc.add("k", static_cast<std::uint64_t>(p.k));
  doc.add("spec", "W");
  try {
    auto [report, certificate] = verify_w(p, workers);
    doc.add("vertex_count", report.vertex_count);
    doc.add("edge_count", report.edge_count);
    doc.add("max_degree", report.max_degree);
    doc.add_histogram("histogram", report.degree_histogram);
    doc.add("status", "ok");
    if (as_json) {
      if (with_certificate) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& [a, b] : certificate.pairs) {
          pairs.push_back({vertex_to_string(a, p), vertex_to_string(b, p)});
        }
        nlohmann::ordered_json isolated = nlohmann::ordered_json::array();
        for (const Vertex& v : certificate.isolated) isolated.push_back(vertex_to_string(v, p));
        doc.add("pairs", "", std::move(pairs));
        doc.add("isolated", "", std::move(isolated));
      }
      std::cout << doc.to_json_text();
    } else {
      std::cout << doc.to_text();
      if (with_certificate) {
        for (const auto& [a, b] : certificate.pairs) {
          std::cout << "pair = " << vertex_to_string(a, p) << " " << vertex_to_string(b, p)
                    << "\n";
        }
        for (const Vertex& v : certificate.isolated) {
          std::cout << "isolated = " << vertex_to_string(v, p) << "\n";
        }
      }
    }
    return 0;
  } catch (const VerificationError& e) {
    doc.add("status", "failed");
    const std::string witness =
        e.counterexample().empty() ? std::string("-") : vertex_to_string(e.counterexample(), p);
    doc.add("counterexample", witness);
    doc.add("observed_degree", e.observed_degree());
    doc.add("error", e.what());
    std::cout << doc.render(as_json);
    return 1;
  }
}

int run_stats(const GraphParams& p, bool as_json) {
  p.validate();
  ReportDoc doc;
  doc.add("n", p.n);
  doc.add("k", static_cast<std::uint64_t>(p.k));
  doc.add("alpha", size_alpha(p));
  doc.add("y_size_s_eq_t", size_y(1, 1, p));
  doc.add("y_size_s_ne_t", size_y(0, 1, p));
  if (p.k >= 3) {
    doc.add("w_size", size_w(p));
    // Every edge of the subgraph induced by W matches a Y(1,1) vertex to
    // its Y(2,2) partner.
    doc.add("w_edges", size_y(1, 1, p));
  } else {
    doc.add_null("w_size", "n/a");
    doc.add_null("w_edges", "n/a");
    doc.add("note", "W requires k >= 3; the construction does not hold when k = 2");
  }
  std::cout << doc.render(as_json);
  return 0;
}

int run_oracle(const GraphParams& p, const std::string& which, std::uint32_t cap,
               std::uint64_t budget, bool unseeded, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  DenseGraph graph = build_dense(p, cap);

  ReportDoc doc;
  doc.add("n", p.n);
  doc.add("k", static_cast<std::uint64_t>(p.k));
  doc.add("method", "oracle");
  doc.add("which", which);

  if (which == "mis") {
    MisSearchStats stats;
    const std::uint32_t value = exact_mis(graph, &stats);
    doc.add("value", static_cast<std::uint64_t>(value));
    doc.add("subsets_examined", stats.nodes);
    doc.add("elapsed", seconds_since(start));
    doc.add("status", "ok");
    std::cout << doc.render(as_json);
    return 0;
  }

  MisSearchStats mis_stats;
  const std::uint32_t alpha = exact_mis(graph, &mis_stats);
  std::optional<unsigned> hint;
  if (!unseeded && p.k >= 3) {
    // Seed the subset search with the audited max degree of W; the search
    // still scans for a strictly better subset.
    auto [report, certificate] = verify_w(p);
    hint = report.max_degree;
  }
  FSearchStats stats;
  const unsigned value = exact_f(graph, alpha, budget, hint, &stats);
  doc.add("alpha", static_cast<std::uint64_t>(alpha));
  doc.add("value", static_cast<std::uint64_t>(value));
  doc.add("subset_count", stats.subset_count);
  doc.add("subsets_examined", stats.nodes);
  if (hint.has_value()) doc.add("seed_degree", *hint);
  doc.add("elapsed", seconds_since(start));
  doc.add("status", "ok");
  std::cout << doc.render(as_json);
  return 0;
}

int run_check_lemma(const GraphParams& p, const std::string& which, std::uint64_t budget_cap,
                    bool as_json) {
  Budget budget(budget_cap);
  ReportDoc doc;
  doc.add("n", p.n);
  doc.add("k", static_cast<std::uint64_t>(p.k));
  doc.add("lemma", which);

  bool passed = false;
  std::string counterexample;
  if (which == "no-cross" || which == "unique-partner") {
    const LemmaSweepResult result = (which == "no-cross") ? sweep_no_cross_edges(p, budget)
                                                          : sweep_unique_partner(p, budget);
    doc.add("quadruples_total", result.quadruples_total);
    doc.add("quadruples_checked", result.quadruples_checked);
    doc.add("probes", result.probes);
    passed = result.passed;
    counterexample = result.counterexample;
  } else if (which == "classify") {
    const ClassifySweepResult result = sweep_classify(p, budget);
    doc.add("pairs_checked", result.pairs_checked);
    doc.add("case_gt", result.case_gt);
    doc.add("case_lt", result.case_lt);
    doc.add("case_eq", result.case_eq);
    doc.add("zero_vertex", "excluded");
    passed = result.passed;
    counterexample = result.counterexample;
  } else {
    const IndependenceSweepResult result = sweep_independence(p, budget);
    doc.add("sets_checked", result.sets_checked);
    doc.add("probes", budget.used());
    passed = result.passed;
    counterexample = result.counterexample;
  }

  doc.add("status", passed ? "ok" : "failed");
  if (!passed) doc.add("counterexample", counterexample);
  std::cout << doc.render(as_json);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Witness sets with maximum induced degree 1 in Hamming graphs H(n,k)"};
  app.require_subcommand(1);

  int n = 1;
  std::int64_t k = 2;
  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("-n", n, "dimension (number of coordinates)")->required();
    cmd->add_option("-k", k, "alphabet size")->required();
  };

  auto* gen = app.add_subcommand("gen", "enumerate a vertex set in ascending rank order");
  std::string spec_text;
  std::string format = "digits";
  int gen_workers = 1;
  add_params(gen);
  gen->add_option("--spec", spec_text, "set spec: W, X:s, Y:s,t or Z:s,t,c")->required();
  gen->add_option("--format", format, "output format (default digits)")
      ->check(CLI::IsMember({"digits", "ranks", "edges"}));
  gen->add_option("--workers", gen_workers,
                  "parallel filter workers; output is identical at any count "
                  "(edges format always runs sequentially)");

  auto* verify = app.add_subcommand("verify", "audit W: vertex count and max induced degree");
  int verify_workers = 1;
  bool with_certificate = false;
  bool verify_json = false;
  add_params(verify);
  verify->add_option("--workers", verify_workers, "parallel audit workers");
  verify->add_flag("--certificate", with_certificate, "also print the matching certificate");
  verify->add_flag("--json", verify_json, "emit the report as JSON");

  auto* stats = app.add_subcommand("stats", "closed-form sizes (arbitrary precision)");
  bool stats_json = false;
  add_params(stats);
  stats->add_flag("--json", stats_json, "emit the report as JSON");

  auto* oracle = app.add_subcommand("oracle", "independent brute-force ground truth");
  std::string oracle_which;
  std::uint32_t cap = kDenseCap;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
  bool unseeded = false;
  bool oracle_json = false;
  oracle->add_option("which", oracle_which, "mis or f")
      ->required()
      ->check(CLI::IsMember({"mis", "f"}));
  add_params(oracle);
  oracle->add_option("--cap", cap, "max k^n for the dense graph (default 4096)");
  oracle->add_option("--budget", subset_budget, "subset enumeration budget for f");
  oracle->add_flag("--unseeded", unseeded, "do not seed the f search with W's audited degree");
  oracle->add_flag("--json", oracle_json, "emit the report as JSON");

  auto* check = app.add_subcommand("check-lemma", "exhaustive sweep of one adjacency lemma");
  std::string lemma_which;
  std::uint64_t probe_budget = Budget::kDefaultProbes;
  bool check_json = false;
  check->add_option("which", lemma_which, "independence, classify, no-cross or unique-partner")
      ->required()
      ->check(CLI::IsMember({"independence", "classify", "no-cross", "unique-partner"}));
  add_params(check);
  check->add_option("--budget", probe_budget, "probe budget (default 1000000)");
  check->add_flag("--json", check_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (k < 2 || k > 0x7fffffff) {
      throw Error(ErrorCode::InvalidParams, "k must be in [2, 2^31), got " + std::to_string(k));
    }
    const GraphParams params{n, static_cast<Coord>(k)};
    params.validate();

    if (gen->parsed()) {
      return run_gen(parse_set_spec(spec_text), params, format, gen_workers);
    }
    if (verify->parsed()) {
      return run_verify(params, verify_workers, with_certificate, verify_json);
    }
    if (stats->parsed()) {
      return run_stats(params, stats_json);
    }
    if (oracle->parsed()) {
      return run_oracle(params, oracle_which, cap, subset_budget, unseeded, oracle_json);
    }
    return run_check_lemma(params, lemma_which, probe_budget, check_json);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << error_code_name(e.code()) << "]\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
