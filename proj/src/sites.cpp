#include "greedy/sites.hpp"

#include <algorithm>
#include <sstream>

namespace greedy {

SiteSet::SiteSet(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySiteSet, "a site set needs at least one point");
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    std::ostringstream os;
    os << "point " << *dup << " appears more than once";
    throw Error(ErrorCode::DuplicateSite, os.str());
  }
  std::vector<Approx> shadow;
  shadow.reserve(points.size());
  for (const auto& p : points) shadow.push_back(greedy::approx(p));
  points_ = std::make_shared<const std::vector<Point>>(std::move(points));
  approx_ = std::make_shared<const std::vector<Approx>>(std::move(shadow));
}

const Point& SiteSet::at(SiteId id) const {
  if (!valid(id)) throw Error(ErrorCode::InvalidSiteId, "site id " + std::to_string(id));
  return (*points_)[id];
}

}  // namespace greedy
