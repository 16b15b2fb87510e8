#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "freiman/covers.hpp"
#include "oracles.hpp"

using namespace freiman;

TEST_CASE("minimal covers of the small fixtures") {
  SECTION("chain of 2") {
    auto covers = minimal_vertex_covers(oracle::load_fixture("g1.graph"));
    // {x1,x2}, {x1,y2}, {y1,y2}, sorted by (x_mask, y_mask).
    std::vector<MinimalCover> expected{{0b00, 0b11}, {0b01, 0b10}, {0b11, 0b00}};
    CHECK(covers == expected);
  }

  SECTION("single edge") {
    auto covers = minimal_vertex_covers(oracle::chain_graph(1));
    std::vector<MinimalCover> expected{{0b0, 0b1}, {0b1, 0b0}};
    CHECK(covers == expected);
  }

  SECTION("complete graph on two pairs") {
    auto covers = minimal_vertex_covers(oracle::complete_graph(2));
    CHECK(covers == oracle::brute_force_covers(oracle::complete_graph(2)));
    CHECK(covers.size() == 2);
  }

  SECTION("an edgeless graph is rejected") {
    BipartiteGraph g{1, {0}};
    CHECK_THROWS_AS(minimal_vertex_covers(g), precondition_error);
  }

  SECTION("size bound") {
    Limits tight;
    tight.max_vertices = 2;
    CHECK_THROWS_AS(
        minimal_vertex_covers(oracle::chain_graph(2), tight), bound_error);
  }
}

TEST_CASE("cover enumeration matches the definition on every small graph") {
  GraphEnumerator en(3);
  while (auto g = en.next())
    CHECK(minimal_vertex_covers(*g) == oracle::brute_force_covers(*g));
}

TEST_CASE("unmixedness both ways") {
  SECTION("chain of 2 is unmixed") {
    auto r = is_unmixed(oracle::load_fixture("g1.graph"));
    CHECK(r.unmixed);
    CHECK_FALSE(r.witness);
  }

  SECTION("the reversed path is unmixed with three covers") {
    auto g = make_graph(2, {{0, 0}, {1, 1}, {1, 0}});
    auto covers = minimal_vertex_covers(g);
    CHECK(covers.size() == 3);
    CHECK(is_unmixed(g).unmixed);
  }

  SECTION("complete graph on two pairs is unmixed") {
    CHECK(is_unmixed(oracle::complete_graph(2)).unmixed);
  }

  SECTION("a broken chain is not unmixed, with a size witness") {
    // Matched plus (1,2),(2,3) but no (1,3).
    auto g = make_graph(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
    auto r = is_unmixed(g);
    CHECK_FALSE(r.unmixed);
    REQUIRE(r.witness);
    CHECK(r.witness->first.size() != r.witness->second.size());
    CHECK_FALSE(is_unmixed_structural(g));
  }

  SECTION("structural search tries relabelings before giving up") {
    GraphEnumerator en(3);
    while (auto g = en.next())
      CHECK(is_unmixed_structural(*g) == oracle::brute_force_unmixed(*g));
  }

  SECTION("unmixed_labeling returns a transitive relabeling") {
    GraphEnumerator en(3);
    while (auto g = en.next()) {
      auto canon = unmixed_labeling(*g);
      REQUIRE(canon.has_value() == oracle::brute_force_unmixed(*g));
      if (canon) {
        CHECK(canon->matched());
        CHECK(detail::matched_transitive(*canon));
        CHECK(canon->edge_count() == g->edge_count());
      }
    }
  }
}

TEST_CASE("cover lattice") {
  SECTION("chain of 2") {
    auto lat = cover_lattice(oracle::load_fixture("g1.graph"));
    CHECK(lat.members == std::vector<std::uint32_t>{0b00, 0b01, 0b11});
  }

  SECTION("single edge") {
    auto lat = cover_lattice(oracle::chain_graph(1));
    CHECK(lat.members == std::vector<std::uint32_t>{0b0, 0b1});
  }

  SECTION("block fixture has four members") {
    // Both cross edges between pairs 2 and 4 force 2 in S <=> 4 in S.
    auto lat = cover_lattice(oracle::load_fixture("figure1.graph"));
    CHECK(lat.members ==
          std::vector<std::uint32_t>{0b0000, 0b0001, 0b1011, 0b1111});
  }

  SECTION("closed under union and intersection on every unmixed graph") {
    GraphEnumerator en(3);
    while (auto g = en.next()) {
      if (!is_unmixed(*g).unmixed) continue;
      auto canon = *unmixed_labeling(*g);
      CHECK_NOTHROW(cover_lattice(canon));
      for (const auto& c : minimal_vertex_covers(canon))
        CHECK(c.size() == canon.pairs);
    }
  }
}

TEST_CASE("order relation from a matched graph") {
  SECTION("chain of 2") {
    auto built = poset_from_graph(oracle::load_fixture("g1.graph"));
    REQUIRE(built.poset);
    CHECK(built.poset->leq(0, 1));
    CHECK_FALSE(built.poset->leq(1, 0));
  }

  SECTION("complete graph fails antisymmetry") {
    auto built = poset_from_graph(oracle::complete_graph(2));
    CHECK_FALSE(built.poset);
    REQUIRE(built.kmm_witness);
    CHECK(*built.kmm_witness == std::make_pair(0, 1));
  }

  SECTION("block fixture fails antisymmetry at {2,4}") {
    auto built = poset_from_graph(oracle::load_fixture("figure1.graph"));
    CHECK_FALSE(built.poset);
    REQUIRE(built.kmm_witness);
    CHECK(*built.kmm_witness == std::make_pair(1, 3));
  }

  SECTION("transitivity failure is a contract violation") {
    auto g = make_graph(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
    CHECK_THROWS_AS(poset_from_graph(g), precondition_error);
  }
}

namespace {

Poset antichain(int n) {
  Poset p{n, std::vector<std::uint32_t>(n)};
  for (int i = 0; i < n; ++i) p.below[i] = 1u << i;
  return p;
}

Poset star_poset(int n) {
  Poset p = antichain(n);
  for (int i = 1; i < n; ++i) p.below[i] |= 1u;
  return p;
}

}  // namespace

TEST_CASE("down-closed subsets") {
  SECTION("chain of 2 has three") {
    auto built = poset_from_graph(oracle::load_fixture("g1.graph"));
    CHECK(poset_ideals(*built.poset) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b11});
  }

  SECTION("antichain of 3 has all eight") {
    CHECK(poset_ideals(antichain(3)).size() == 8);
  }

  SECTION("one bottom below three others has nine") {
    auto ideals = poset_ideals(star_poset(4));
    CHECK(ideals.size() == 9);
    CHECK(ideals == oracle::brute_force_ideals(star_poset(4)));
  }

  SECTION("chains of length t have t+1, and the library matches the definition") {
    for (int t = 1; t <= 5; ++t) {
      Limits loose;
      auto built = poset_from_graph(oracle::chain_graph(t));
      auto ideals = poset_ideals(*built.poset, loose);
      CHECK(ideals.size() == static_cast<std::size_t>(t + 1));
      CHECK(ideals == oracle::brute_force_ideals(*built.poset));
    }
  }

  SECTION("closed under union and intersection") {
    auto ideals = poset_ideals(star_poset(4));
    auto member = [&](std::uint32_t s) {
      return std::binary_search(ideals.begin(), ideals.end(), s);
    };
    for (auto a : ideals)
      for (auto b : ideals) {
        CHECK(member(a | b));
        CHECK(member(a & b));
      }
  }
}

TEST_CASE("chain recognition") {
  CHECK(is_chain(*poset_from_graph(oracle::chain_graph(2)).poset));
  CHECK_FALSE(is_chain(antichain(2)));
  CHECK_FALSE(is_chain(star_poset(4)));
}

TEST_CASE("cover x-parts realize the down-closed sets when the order exists") {
  GraphEnumerator en(3);
  while (auto g = en.next()) {
    if (!is_unmixed(*g).unmixed) continue;
    auto canon = *unmixed_labeling(*g);
    auto built = poset_from_graph(canon);
    if (!built.poset) continue;
    CHECK(cover_lattice(canon).members == poset_ideals(*built.poset));
  }
}
