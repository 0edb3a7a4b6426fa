#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfke/text.hpp"

namespace surfke {

using VertexId = std::uint32_t;
using EdgeWeight = std::uint64_t;

struct Neighbor {
  VertexId id;
  EdgeWeight weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  EdgeWeight total_weight = 0;
  std::size_t max_degree = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Undirected co-occurrence graph of one document. Vertex ids follow first
/// occurrence order; adjacency is stored CSR-style with neighbors sorted by
/// id. Immutable after construction.
class WordGraph {
 public:
  WordGraph() = default;

  std::size_t vertex_count() const { return words_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }
  EdgeWeight total_edge_weight() const { return total_weight_; }
  std::size_t window() const { return window_; }

  const std::vector<std::string>& words() const { return words_; }
  const std::string& word(VertexId v) const;
  /// Throws LookupError for words that are not vertices.
  VertexId id_of(const std::string& word) const;
  bool contains(const std::string& word) const { return index_.contains(word); }

  /// Neighbors of v in ascending id order. Throws LookupError if v >= |V|.
  std::vector<Neighbor> neighbors(VertexId v) const;
  std::span<const VertexId> neighbor_ids(VertexId v) const;
  std::span<const EdgeWeight> neighbor_weights(VertexId v) const;
  std::size_t degree(VertexId v) const;
  /// 0 when the pair is not adjacent.
  EdgeWeight weight(VertexId u, VertexId v) const;

  /// Assembles a graph from an explicit edge list; duplicate pairs
  /// accumulate. Used by build_graph and by tests that need exact shapes.
  struct Edge {
    VertexId u, v;
    EdgeWeight weight;
  };
  static WordGraph from_edges(std::vector<std::string> words, std::span<const Edge> edges,
                              std::size_t window = 0);

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<EdgeWeight> weights_;
  EdgeWeight total_weight_ = 0;
  std::size_t window_ = 0;
};

/// Builds the co-occurrence graph. Every pair of mask-true tokens at
/// positions i < j with j - i < window and different normalized forms adds 1
/// to the weight of their edge. Mask-false tokens still occupy positions.
/// Throws ConfigError when window < 2.
WordGraph build_graph(std::span<const Token> tokens, const std::vector<bool>& mask, std::size_t window);

GraphStats graph_stats(const WordGraph& g);

/// Edge list as `word_u<TAB>word_v<TAB>weight` lines, one per undirected
/// edge with word_u < word_v, sorted by (word_u, word_v).
void write_edge_tsv(const WordGraph& g, std::ostream& out);

}  // namespace surfke
