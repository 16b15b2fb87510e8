#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "freiman/graph.hpp"
#include "oracles.hpp"

using namespace freiman;

TEST_CASE("parse accepts the documented format") {
  auto g = parse_graph("n 1\ne 1 1\n");
  CHECK(g.left_size == 1);
  CHECK(g.right_size == 1);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}});

  auto g1 = parse_graph("n 2\ne 1 1\ne 2 2\ne 1 2\n");
  CHECK(g1.left_size == 2);
  CHECK(g1.edges.size() == 3);
  CHECK(g1.has_edge(0, 1));

  auto commented = parse_graph("# header comment\nn 2\ne 1 1 # inline\n\ne 2 2\n");
  CHECK(commented.edges.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_MATCHES(parse_graph("n 2\ne 1 3\n"), parse_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("line 2") &&
                           Catch::Matchers::ContainsSubstring("out of range")));
  CHECK_THROWS_MATCHES(parse_graph("n 2\ne 1 1\ne 1 1\n"), parse_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("line 3") &&
                           Catch::Matchers::ContainsSubstring("duplicate")));
  CHECK_THROWS_AS(parse_graph("e 1 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("n 2\ne 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("n 0\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("n 2\nq 1 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph(""), parse_error);
}

TEST_CASE("find_pairing relabels along a perfect matching") {
  SECTION("single edge is already matched") {
    auto g = find_pairing(parse_graph("n 1\ne 1 1\n"));
    REQUIRE(g);
    CHECK(g->matched());
    CHECK(g->edge_count() == 1);
  }

  SECTION("complete graph keeps its edge set") {
    auto raw = parse_graph("n 2\ne 1 1\ne 1 2\ne 2 1\ne 2 2\n");
    auto g = find_pairing(raw);
    REQUIRE(g);
    CHECK(g->matched());
    CHECK(g->edge_count() == 4);
  }

  SECTION("a matching can require relabeling") {
    // x1-y2 and x2-y1 only: the matching crosses.
    RawBipartiteGraph raw{2, 2, {{0, 1}, {1, 0}}};
    auto g = find_pairing(raw);
    REQUIRE(g);
    CHECK(g->matched());
    CHECK(g->edge_count() == 2);
  }

  SECTION("no perfect matching") {
    RawBipartiteGraph raw{2, 2, {{0, 0}, {1, 0}}};
    CHECK_FALSE(find_pairing(raw));
    RawBipartiteGraph unequal{2, 3, {{0, 0}, {1, 1}}};
    CHECK_FALSE(find_pairing(unequal));
  }
}

TEST_CASE("induced subgraphs restrict whole pairs") {
  auto fig1 = oracle::load_fixture("figure1.graph");

  SECTION("restriction of the block fixture to {1,2,3} is a chain") {
    auto sub = induced_subgraph(fig1, 0b0111);
    CHECK(sub == oracle::chain_graph(3));
  }

  SECTION("keeping everything is the identity") {
    CHECK(induced_subgraph(fig1, 0b1111) == fig1);
  }

  SECTION("single pair") {
    auto g1 = oracle::load_fixture("g1.graph");
    auto sub = induced_subgraph(g1, 0b10);
    CHECK(sub.pairs == 1);
    CHECK(sub.edge_count() == 1);
  }

  SECTION("restriction composes") {
    auto ab = induced_subgraph(induced_subgraph(fig1, 0b1011), 0b101);
    auto direct = induced_subgraph(fig1, 0b1001);
    CHECK(ab == direct);
  }

  SECTION("empty keep set is rejected") {
    CHECK_THROWS_AS(induced_subgraph(fig1, 0), precondition_error);
  }
}

TEST_CASE("connectivity over all 2n vertices") {
  CHECK(is_connected(oracle::load_fixture("g1.graph")));
  CHECK_FALSE(is_connected(oracle::load_fixture("g1_union_g2.graph")));
  CHECK(is_connected(oracle::chain_graph(1)));
  // Matched pairs with no cross edges: n separate components.
  CHECK_FALSE(is_connected(make_graph(2, {{0, 0}, {1, 1}})));
}

TEST_CASE("exhaustive enumeration of matched graphs") {
  SECTION("counts per stratum") {
    GraphEnumerator one(1);
    int count = 0;
    while (one.next()) ++count;
    CHECK(count == 1);

    GraphEnumerator two(2);
    count = 0;
    while (two.next()) ++count;
    CHECK(count == 1 + 4);

    GraphEnumerator three(3);
    int n3 = 0;
    count = 0;
    while (auto g = three.next()) {
      ++count;
      if (g->pairs == 3) ++n3;
    }
    CHECK(count == 1 + 4 + 64);
    CHECK(n3 == 64);
  }

  SECTION("no duplicates, all matched") {
    GraphEnumerator en(3);
    std::set<std::vector<std::uint32_t>> seen;
    while (auto g = en.next()) {
      CHECK(g->matched());
      auto key = g->rows;
      key.push_back(static_cast<std::uint32_t>(g->pairs));
      CHECK(seen.insert(key).second);
    }
    CHECK(seen.size() == 69);
  }

  SECTION("safety bound") {
    CHECK_THROWS_AS(GraphEnumerator(5), bound_error);
    Limits loose;
    loose.max_enum_n = 5;
    CHECK_NOTHROW(GraphEnumerator(5, loose));
  }
}
