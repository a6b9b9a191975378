#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "greedy/kernel.hpp"

namespace greedy {

using SiteId = std::size_t;

/// Immutable, non-empty list of pairwise distinct points. Ids are indices.
/// Copies share storage.
class SiteSet {
 public:
  /// Throws EmptySiteSet or DuplicateSite.
  explicit SiteSet(std::vector<Point> points);

  std::size_t size() const { return points_->size(); }
  const Point& operator[](SiteId id) const { return (*points_)[id]; }
  const Point& at(SiteId id) const;
  std::span<const Point> points() const { return *points_; }
  bool valid(SiteId id) const { return id < size(); }
  const Approx& approx(SiteId id) const { return (*approx_)[id]; }

  friend bool operator==(const SiteSet& s, const SiteSet& t) {
    return s.points_ == t.points_ || *s.points_ == *t.points_;
  }

 private:
  std::shared_ptr<const std::vector<Point>> points_;
  std::shared_ptr<const std::vector<Approx>> approx_;
};

}  // namespace greedy
