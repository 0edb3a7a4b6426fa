#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "surfke/errors.hpp"
#include "surfke/graph.hpp"

using namespace surfke;

namespace {

std::vector<Token> words(std::initializer_list<const char*> ws) {
  std::vector<Token> out;
  std::size_t i = 0;
  for (const char* w : ws) {
    Token t;
    t.surface = t.normalized = t.stem = w;
    t.position = i++;
    out.push_back(t);
  }
  return out;
}

oracle::EdgeMap edges_of(const WordGraph& g) {
  oracle::EdgeMap out;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (const auto& n : g.neighbors(u))
      if (g.word(u) < g.word(n.id)) out[{g.word(u), g.word(n.id)}] = n.weight;
  return out;
}

}  // namespace

TEST_CASE("hand example: [a,b,a,c], w=2") {
  const auto toks = words({"a", "b", "a", "c"});
  const auto g = build_graph(toks, std::vector<bool>(4, true), 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.total_edge_weight() == 3);
  const auto a = g.id_of("a"), b = g.id_of("b"), c = g.id_of("c");
  CHECK(a == 0);
  CHECK(g.weight(a, b) == 2);
  CHECK(g.weight(b, a) == 2);
  CHECK(g.weight(a, c) == 1);
  CHECK(g.weight(b, c) == 0);
  CHECK(g.neighbors(a) == std::vector<Neighbor>{{b, 2}, {c, 1}});
  CHECK(graph_stats(g) == GraphStats{3, 2, 3, 2});
  CHECK_THROWS_AS(g.neighbors(3), LookupError);
}

TEST_CASE("degenerate graphs") {
  const auto single = build_graph(words({"a"}), {true}, 2);
  CHECK(graph_stats(single) == GraphStats{1, 0, 0, 0});
  CHECK(single.neighbors(0).empty());

  const auto filtered = build_graph(words({"a", "b"}), {true, false}, 2);
  CHECK(filtered.vertex_count() == 1);
  CHECK(filtered.contains("a"));
  CHECK_FALSE(filtered.contains("b"));
  CHECK(filtered.edge_count() == 0);

  const auto empty = build_graph({}, {}, 5);
  CHECK(graph_stats(empty) == GraphStats{0, 0, 0, 0});

  const auto triangle = build_graph(words({"a", "b", "c"}), {true, true, true}, 3);
  CHECK(graph_stats(triangle) == GraphStats{3, 3, 3, 2});
}

TEST_CASE("configuration errors") {
  const auto toks = words({"a", "b"});
  CHECK_THROWS_AS(build_graph(toks, {true, true}, 1), ConfigError);
  CHECK_THROWS_AS(build_graph(toks, {true}, 3), ConfigError);
  CHECK_THROWS_AS(WordGraph{}.id_of("x"), LookupError);
}

TEST_CASE("masked-out tokens keep their positions") {
  // a _ b with w=2: a and b are two positions apart, so no edge.
  const auto g2 = build_graph(words({"a", "x", "b"}), {true, false, true}, 2);
  CHECK(g2.edge_count() == 0);
  const auto g3 = build_graph(words({"a", "x", "b"}), {true, false, true}, 3);
  CHECK(g3.edge_count() == 1);
}

TEST_CASE("build_graph matches the brute-force oracle on random sequences") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.below(51);
    auto toks = oracle::random_tokens(rng, n, 2 + rng.below(12));
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = rng.below(4) != 0;
    const std::size_t w = 2 + rng.below(9);
    const auto g = build_graph(toks, mask, w);
    const auto expected = oracle::cooccurrence(toks, mask, w);
    REQUIRE(edges_of(g) == expected);

    unsigned long long total = 0;
    for (const auto& [k, v] : expected) total += v;
    CHECK(g.total_edge_weight() == total);
    // Symmetry and sorted adjacency.
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      const auto ids = g.neighbor_ids(u);
      for (std::size_t i = 1; i < ids.size(); ++i) CHECK(ids[i - 1] < ids[i]);
      for (const auto& nb : g.neighbors(u)) CHECK(g.weight(nb.id, u) == nb.weight);
    }
  }
}

TEST_CASE("vertex ids follow first occurrence") {
  const auto g = build_graph(words({"z", "y", "z", "x"}), std::vector<bool>(4, true), 2);
  CHECK(g.words() == std::vector<std::string>{"z", "y", "x"});
}

TEST_CASE("edge count and weights never decrease with the window") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto toks = oracle::random_tokens(rng, 40, 10);
    std::vector<bool> mask(40, true);
    std::size_t prev_edges = 0;
    EdgeWeight prev_total = 0;
    for (std::size_t w = 2; w <= 10; ++w) {
      const auto s = graph_stats(build_graph(toks, mask, w));
      CHECK(s.edges >= prev_edges);
      CHECK(s.total_weight >= prev_total);
      prev_edges = s.edges;
      prev_total = s.total_weight;
    }
  }
}

TEST_CASE("edge TSV lists each undirected edge once, sorted") {
  const auto g = build_graph(words({"b", "a", "b", "c"}), std::vector<bool>(4, true), 2);
  std::ostringstream out;
  write_edge_tsv(g, out);
  CHECK(out.str() == "a\tb\t2\nb\tc\t1\n");
}

TEST_CASE("from_edges merges duplicates and rejects bad edges") {
  const std::vector<WordGraph::Edge> edges{{0, 1, 2}, {1, 0, 1}, {0, 2, 1}};
  const auto g = WordGraph::from_edges({"a", "b", "c"}, edges);
  CHECK(g.weight(0, 1) == 3);
  CHECK(g.total_edge_weight() == 4);
  const std::vector<WordGraph::Edge> loop{{0, 0, 1}};
  CHECK_THROWS(WordGraph::from_edges({"a"}, loop));
}
