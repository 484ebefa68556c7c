#include <algorithm>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "hamwit/hamming.hpp"
#include "run_cli.hpp"

TEST_CASE("gen digits matches the frozen golden files") {
  const struct {
    const char* args;
    const char* golden;
  } cases[] = {
      {"gen --spec W -n 1 -k 3", "gen_w_n1_k3.txt"},
      {"gen --spec W -n 2 -k 3", "gen_w_n2_k3.txt"},
      {"gen --spec W -n 2 -k 4", "gen_w_n2_k4.txt"},
      {"gen --spec W -n 3 -k 3", "gen_w_n3_k3.txt"},
  };
  for (const auto& c : cases) {
    const auto result = cli::run(c.args);
    CHECK(result.exit_code == 0);
    CHECK(result.output == cli::read_golden(c.golden));
  }
}

TEST_CASE("gen output is identical at any worker count") {
  const auto one = cli::run("gen --spec W -n 3 -k 3 --workers 1");
  const auto four = cli::run("gen --spec W -n 3 -k 3 --workers 4");
  const auto nine = cli::run("gen --spec W -n 3 -k 3 --workers 9");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
  CHECK(one.output == nine.output);
  CHECK(one.output == cli::read_golden("gen_w_n3_k3.txt"));
}

TEST_CASE("gen handles the other specs and formats") {
  CHECK(cli::run("gen --spec X:0 -n 1 -k 3").output == "0\n");
  CHECK(cli::run("gen --spec Y:2,2 -n 2 -k 3").output == "20\n02\n");
  CHECK(cli::run("gen --spec W -n 2 -k 3 --format ranks").output == "1\n2\n3\n6\n");
  CHECK(cli::run("gen --spec Z:1,1,1 -n 2 -k 3").output == "10\n");
  CHECK(cli::run("gen --spec W -n 2 -k 3 --format edges").output ==
        "p edge 4 2\ne 2 3\ne 4 7\n");
}

TEST_CASE("gen rejects invalid invocations with exit 2") {
  const auto k2 = cli::run("gen --spec W -n 2 -k 2");
  CHECK(k2.exit_code == 2);
  CHECK(cli::contains(k2.output, "does not hold when k = 2"));

  CHECK(cli::run("gen --spec Q:1 -n 2 -k 3").exit_code == 2);
  CHECK(cli::run("gen --spec Y:1,0 -n 2 -k 3").exit_code == 2);
  CHECK(cli::run("gen --spec X:3 -n 2 -k 3").exit_code == 2);  // residue not reduced silently
  CHECK(cli::run("gen --spec Z:1,1,5 -n 2 -k 3").exit_code == 2);
  CHECK(cli::run("gen --spec W -n 0 -k 3").exit_code == 2);
  CHECK(cli::run("gen -n 2 -k 3").exit_code == 2);  // missing --spec
  CHECK(cli::run("nonsense").exit_code == 2);
}

TEST_CASE("verify reports the audited counts") {
  const auto result = cli::run("verify -n 2 -k 3");
  CHECK(result.exit_code == 0);
  CHECK(cli::contains(result.output, "n = 2\n"));
  CHECK(cli::contains(result.output, "k = 3\n"));
  CHECK(cli::contains(result.output, "spec = W\n"));
  CHECK(cli::contains(result.output, "vertex_count = 4\n"));
  CHECK(cli::contains(result.output, "edge_count = 2\n"));
  CHECK(cli::contains(result.output, "max_degree = 1\n"));
  CHECK(cli::contains(result.output, "histogram = 1:4\n"));
  CHECK(cli::contains(result.output, "status = ok\n"));
}

TEST_CASE("verify emits parseable JSON") {
  const auto result = cli::run("verify -n 2 -k 4 --json --certificate");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["n"] == 2);
  CHECK(doc["k"] == 4);
  CHECK(doc["vertex_count"] == 5);
  CHECK(doc["edge_count"] == 2);
  CHECK(doc["max_degree"] == 1);
  CHECK(doc["histogram"]["1"] == 4);
  CHECK(doc["histogram"]["0"] == 1);
  CHECK(doc["status"] == "ok");
  CHECK(doc["pairs"].size() == 2);
  CHECK(doc["isolated"] == nlohmann::json::array({"33"}));
}

TEST_CASE("verify certificate text form") {
  const auto result = cli::run("verify -n 2 -k 4 --certificate");
  CHECK(result.exit_code == 0);
  CHECK(cli::contains(result.output, "pair = 10 20\n"));
  CHECK(cli::contains(result.output, "pair = 01 02\n"));
  CHECK(cli::contains(result.output, "isolated = 33\n"));
}

TEST_CASE("verify guards k = 2 with exit 2") {
  const auto result = cli::run("verify -n 3 -k 2");
  CHECK(result.exit_code == 2);
  CHECK(cli::contains(result.output, "does not hold when k = 2"));
}

TEST_CASE("verify is worker-count invariant") {
  const auto one = cli::run("verify -n 3 -k 3 --certificate --workers 1");
  const auto four = cli::run("verify -n 3 -k 3 --certificate --workers 4");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
}

TEST_CASE("gen line count equals the verified vertex count") {
  const auto gen = cli::run("gen --spec W -n 3 -k 4");
  const auto verify = cli::run("verify -n 3 -k 4 --json");
  REQUIRE(gen.exit_code == 0);
  REQUIRE(verify.exit_code == 0);
  const auto lines =
      static_cast<std::size_t>(std::count(gen.output.begin(), gen.output.end(), '\n'));
  const auto doc = nlohmann::json::parse(verify.output);
  CHECK(lines == doc["vertex_count"].get<std::size_t>());
  // Byte-identical across repeated runs.
  CHECK(gen.output == cli::run("gen --spec W -n 3 -k 4").output);
}

TEST_CASE("edge format agrees with the verifier audit") {
  const auto edges = cli::run("gen --spec W -n 3 -k 3 --format edges");
  const auto verify = cli::run("verify -n 3 -k 3 --json");
  REQUIRE(edges.exit_code == 0);
  REQUIRE(verify.exit_code == 0);
  const auto doc = nlohmann::json::parse(verify.output);

  std::istringstream in(edges.output);
  std::string word;
  std::uint64_t header_v = 0;
  std::uint64_t header_e = 0;
  in >> word >> word >> header_v >> header_e;  // "p edge V E"
  CHECK(header_v == doc["vertex_count"].get<std::uint64_t>());
  CHECK(header_e == doc["edge_count"].get<std::uint64_t>());

  const hamwit::GraphParams p{3, 3};
  std::uint64_t listed = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  while (in >> word >> u >> v) {
    REQUIRE(word == "e");
    CHECK(u < v);  // 1-based ranks, lower endpoint first
    CHECK(hamwit::are_adjacent(hamwit::unrank(u - 1, p), hamwit::unrank(v - 1, p), p));
    ++listed;
  }
  CHECK(listed == header_e);
}

TEST_CASE("stats evaluates the closed forms") {
  const auto small = cli::run("stats -n 2 -k 3");
  CHECK(small.exit_code == 0);
  CHECK(cli::contains(small.output, "alpha = 3\n"));
  CHECK(cli::contains(small.output, "y_size_s_eq_t = 2\n"));
  CHECK(cli::contains(small.output, "y_size_s_ne_t = 1\n"));
  CHECK(cli::contains(small.output, "w_size = 4\n"));
  CHECK(cli::contains(small.output, "w_edges = 2\n"));

  const auto big = cli::run("stats -n 100 -k 3");
  CHECK(big.exit_code == 0);
  CHECK(cli::contains(big.output,
                      "alpha = 171792506910670443678820376588540424234035840667\n"));

  const auto degenerate = cli::run("stats -n 1 -k 5");
  CHECK(degenerate.exit_code == 0);
  CHECK(cli::contains(degenerate.output, "y_size_s_ne_t = 0\n"));

  const auto hypercube = cli::run("stats -n 4 -k 2");
  CHECK(hypercube.exit_code == 0);
  CHECK(cli::contains(hypercube.output, "alpha = 8\n"));
  CHECK(cli::contains(hypercube.output, "w_size = n/a\n"));
  CHECK(cli::contains(hypercube.output, "does not hold when k = 2"));
}

TEST_CASE("oracle subcommands") {
  const auto mis = cli::run("oracle mis -n 2 -k 3");
  CHECK(mis.exit_code == 0);
  CHECK(cli::contains(mis.output, "method = oracle\n"));
  CHECK(cli::contains(mis.output, "which = mis\n"));
  CHECK(cli::contains(mis.output, "value = 3\n"));

  const auto f = cli::run("oracle f -n 2 -k 3 --json");
  CHECK(f.exit_code == 0);
  const auto doc = nlohmann::json::parse(f.output);
  CHECK(doc["method"] == "oracle");
  CHECK(doc["which"] == "f");
  CHECK(doc["alpha"] == 3);
  CHECK(doc["value"] == 1);
  CHECK(doc["subset_count"] == 126);
  CHECK(doc["seed_degree"] == 1);

  const auto unseeded = cli::run("oracle f -n 2 -k 2 --unseeded");
  CHECK(unseeded.exit_code == 0);
  CHECK(cli::contains(unseeded.output, "value = 2\n"));

  CHECK(cli::run("oracle mis -n 12 -k 3").exit_code == 2);  // over the dense cap
  CHECK(cli::run("oracle f -n 2 -k 3 --budget 10").exit_code == 2);
}

TEST_CASE("check-lemma subcommands") {
  const auto no_cross = cli::run("check-lemma no-cross -n 2 -k 5");
  CHECK(no_cross.exit_code == 0);
  CHECK(cli::contains(no_cross.output, "lemma = no-cross\n"));
  CHECK(cli::contains(no_cross.output, "status = ok\n"));

  const auto unique = cli::run("check-lemma unique-partner -n 3 -k 3");
  CHECK(unique.exit_code == 0);
  CHECK(cli::contains(unique.output, "status = ok\n"));

  const auto classify = cli::run("check-lemma classify -n 2 -k 4 --json");
  CHECK(classify.exit_code == 0);
  const auto doc = nlohmann::json::parse(classify.output);
  CHECK(doc["status"] == "ok");
  CHECK(doc["zero_vertex"] == "excluded");
  CHECK(doc["case_gt"].get<std::uint64_t>() > 0);
  CHECK(doc["case_lt"].get<std::uint64_t>() > 0);
  CHECK(doc["case_eq"].get<std::uint64_t>() > 0);

  const auto independence = cli::run("check-lemma independence -n 2 -k 4");
  CHECK(independence.exit_code == 0);
  CHECK(cli::contains(independence.output, "status = ok\n"));

  // An exhausted budget is an error, never a silent truncation.
  CHECK(cli::run("check-lemma independence -n 3 -k 4 --budget 10").exit_code == 2);
}
