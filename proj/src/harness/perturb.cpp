#include "greedy/harness/perturb.hpp"

#include <algorithm>
#include <numeric>

namespace greedy::harness {

namespace {

void require_pair(const GeometricGraph& g, SiteId i, SiteId j) {
  g.sites().at(i);
  g.sites().at(j);
  if (i == j) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(i));
}

std::string pair_text(SiteId i, SiteId j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

struct Apply {
  const GeometricGraph& g;

  GeometricGraph operator()(const DropEdge& op) const {
    require_pair(g, op.i, op.j);
    if (!g.has_edge(op.i, op.j)) throw Error(ErrorCode::NoSuchEdge, pair_text(op.i, op.j));
    return g.without_edge(op.i, op.j);
  }

  GeometricGraph operator()(const AddEdge& op) const {
    require_pair(g, op.i, op.j);
    if (g.has_edge(op.i, op.j)) throw Error(ErrorCode::DuplicateEdge, pair_text(op.i, op.j));
    return g.with_edge(op.i, op.j);
  }

  GeometricGraph operator()(const KnnRewire& op) const {
    if (op.k < 1) throw Error(ErrorCode::InvalidSpec, "k must be at least 1");
    const SiteSet& s = g.sites();
    std::vector<Edge> edges;
    for (SiteId i = 0; i < s.size(); ++i) {
      std::vector<SiteId> others;
      std::vector<Scalar> d(s.size());
      for (SiteId j = 0; j < s.size(); ++j) {
        if (j == i) continue;
        others.push_back(j);
        d[j] = dist_sq(s[i], s[j]);
      }
      std::stable_sort(others.begin(), others.end(),
                       [&](SiteId a, SiteId b) { return d[a] < d[b]; });
      for (std::size_t r = 0; r < std::min(op.k, others.size()); ++r) {
        edges.push_back(make_edge(i, others[r]));
      }
    }
    return GeometricGraph(s, edges);
  }

  GeometricGraph operator()(const UnitDisk& op) const {
    if (sign(op.radius) <= 0) throw Error(ErrorCode::InvalidSpec, "radius must be positive");
    const SiteSet& s = g.sites();
    Scalar r2 = op.radius * op.radius;
    std::vector<Edge> edges;
    for (SiteId i = 0; i < s.size(); ++i) {
      for (SiteId j = i + 1; j < s.size(); ++j) {
        if (dist_sq(s[i], s[j]) <= r2) edges.emplace_back(i, j);
      }
    }
    return GeometricGraph(s, edges);
  }
};

}  // namespace

GeometricGraph perturb(const GeometricGraph& g, const PerturbOp& op) {
  return std::visit(Apply{g}, op);
}

}  // namespace greedy::harness
