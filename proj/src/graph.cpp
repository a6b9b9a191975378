#include "greedy/graph.hpp"

#include <algorithm>

namespace greedy {

GeometricGraph::GeometricGraph(SiteSet sites, const std::vector<Edge>& edges)
    : sites_(std::move(sites)), adjacency_(sites_.size()) {
  for (auto [i, j] : edges) {
    if (i == j) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(i));
    if (!sites_.valid(i) || !sites_.valid(j)) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

GeometricGraph GeometricGraph::complete(SiteSet sites) {
  std::vector<Edge> edges;
  for (SiteId i = 0; i < sites.size(); ++i) {
    for (SiteId j = i + 1; j < sites.size(); ++j) edges.emplace_back(i, j);
  }
  return GeometricGraph(std::move(sites), edges);
}

bool GeometricGraph::has_edge(SiteId i, SiteId j) const {
  if (!sites_.valid(i) || !sites_.valid(j)) return false;
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::vector<Edge> GeometricGraph::edges() const {
  std::vector<Edge> out;
  for (SiteId i = 0; i < adjacency_.size(); ++i) {
    for (SiteId j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t GeometricGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

GeometricGraph GeometricGraph::with_edge(SiteId i, SiteId j) const {
  auto list = edges();
  list.push_back(make_edge(i, j));
  return GeometricGraph(sites_, list);
}

GeometricGraph GeometricGraph::without_edge(SiteId i, SiteId j) const {
  auto list = edges();
  std::erase(list, make_edge(i, j));
  return GeometricGraph(sites_, list);
}

}  // namespace greedy
