#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

#include "surfke/errors.hpp"
#include "surfke/graph.hpp"

namespace surfke {

const std::string& WordGraph::word(VertexId v) const {
  if (v >= words_.size()) throw LookupError("vertex id " + std::to_string(v) + " out of range");
  return words_[v];
}

VertexId WordGraph::id_of(const std::string& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw LookupError("word '" + w + "' is not a graph vertex");
  return it->second;
}

std::vector<Neighbor> WordGraph::neighbors(VertexId v) const {
  const auto ids = neighbor_ids(v);
  const auto ws = neighbor_weights(v);
  std::vector<Neighbor> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) out.push_back({ids[i], ws[i]});
  return out;
}

std::span<const VertexId> WordGraph::neighbor_ids(VertexId v) const {
  if (v >= words_.size()) throw LookupError("vertex id " + std::to_string(v) + " out of range");
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const EdgeWeight> WordGraph::neighbor_weights(VertexId v) const {
  if (v >= words_.size()) throw LookupError("vertex id " + std::to_string(v) + " out of range");
  return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t WordGraph::degree(VertexId v) const { return neighbor_ids(v).size(); }

EdgeWeight WordGraph::weight(VertexId u, VertexId v) const {
  const auto ids = neighbor_ids(u);
  const auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) return 0;
  return neighbor_weights(u)[static_cast<std::size_t>(it - ids.begin())];
}

WordGraph WordGraph::from_edges(std::vector<std::string> words, std::span<const Edge> edges,
                                std::size_t window) {
  WordGraph g;
  g.window_ = window;
  g.words_ = std::move(words);
  for (std::size_t i = 0; i < g.words_.size(); ++i) {
    if (!g.index_.emplace(g.words_[i], static_cast<VertexId>(i)).second)
      throw Error("duplicate vertex word '" + g.words_[i] + "'");
  }
  const std::size_t n = g.words_.size();
  std::map<std::pair<VertexId, VertexId>, EdgeWeight> merged;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw LookupError("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop on vertex '" + g.words_[e.u] + "'");
    if (e.weight == 0) throw Error("edge weights must be positive");
    merged[std::minmax(e.u, e.v)] += e.weight;
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [key, w] : merged) {
    ++degree[key.first];
    ++degree[key.second];
    g.total_weight_ += w;
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  g.weights_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Iterating the ordered map fills each row in ascending neighbor order:
  // row u receives (u, v>u) pairs after all (w<u, u) pairs.
  for (const auto& [key, w] : merged) {
    const auto [u, v] = key;
    g.targets_[cursor[u]] = v;
    g.weights_[cursor[u]++] = w;
    g.targets_[cursor[v]] = u;
    g.weights_[cursor[v]++] = w;
  }
  return g;
}

WordGraph build_graph(std::span<const Token> tokens, const std::vector<bool>& mask, std::size_t window) {
  if (window < 2) throw ConfigError("co-occurrence window must be >= 2, got " + std::to_string(window));
  if (mask.size() != tokens.size()) throw ConfigError("mask length does not match token count");

  std::vector<std::string> words;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::int64_t> vertex_at(tokens.size(), -1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!mask[i]) continue;
    auto [it, inserted] = index.emplace(tokens[i].normalized, static_cast<VertexId>(words.size()));
    if (inserted) words.push_back(tokens[i].normalized);
    vertex_at[i] = it->second;
  }

  std::vector<WordGraph::Edge> edges;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (vertex_at[i] < 0) continue;
    const std::size_t last = std::min(tokens.size(), i + window);
    for (std::size_t j = i + 1; j < last; ++j) {
      if (vertex_at[j] < 0 || vertex_at[j] == vertex_at[i]) continue;
      edges.push_back({static_cast<VertexId>(vertex_at[i]), static_cast<VertexId>(vertex_at[j]), 1});
    }
  }
  return WordGraph::from_edges(std::move(words), edges, window);
}

GraphStats graph_stats(const WordGraph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.total_weight = g.total_edge_weight();
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  return s;
}

void write_edge_tsv(const WordGraph& g, std::ostream& out) {
  std::vector<std::tuple<const std::string*, const std::string*, EdgeWeight>> rows;
  rows.reserve(g.edge_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto ids = g.neighbor_ids(u);
    const auto ws = g.neighbor_weights(u);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string& a = g.word(u);
      const std::string& b = g.word(ids[i]);
      if (a < b) rows.emplace_back(&a, &b, ws[i]);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::tie(*std::get<0>(x), *std::get<1>(x)) < std::tie(*std::get<0>(y), *std::get<1>(y));
  });
  for (const auto& [a, b, w] : rows) out << *a << '\t' << *b << '\t' << w << '\n';
}

}  // namespace surfke
