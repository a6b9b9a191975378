#pragma once

#include <variant>

#include "greedy/graph.hpp"

namespace greedy::harness {

struct DropEdge {
  SiteId i, j;
};
struct AddEdge {
  SiteId i, j;
};
/// Replaces all edges by the union of every site's k nearest neighbors
/// (distance, then lowest id).
struct KnnRewire {
  std::size_t k;
};
/// Replaces all edges by the pairs at distance <= radius.
struct UnitDisk {
  Scalar radius;
};

using PerturbOp = std::variant<DropEdge, AddEdge, KnnRewire, UnitDisk>;

/// Throws NoSuchEdge, DuplicateEdge, InvalidSiteId or InvalidSpec.
GeometricGraph perturb(const GeometricGraph& g, const PerturbOp& op);

}  // namespace greedy::harness
