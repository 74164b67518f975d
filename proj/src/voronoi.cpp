#include "cremona/voronoi.hpp"

#include <algorithm>
#include <set>

#include "cremona/error.hpp"

namespace cremona {

GermSet::GermSet(std::vector<Germ> germs) : germs_(std::move(germs)) {
  for (const auto& g : germs_) {
    if (g.center.self_intersection() != 1) {
      throw Error(ErrorCode::NotOnHyperboloid,
                  "germ '" + g.label + "' is not on the hyperboloid");
    }
  }
}

namespace {

void require_positive_ray(const PicardManinClass& c) {
  if (c.self_intersection() <= 0 || c.degree() <= 0) {
    throw Error(ErrorCode::NotOnHyperboloid,
                "class does not represent a point of H");
  }
}

}  // namespace

bool cell_member(const PicardManinClass& c, std::size_t idx,
                 const GermSet& germs) {
  if (idx >= germs.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "germ index " + std::to_string(idx) + " out of range");
  }
  require_positive_ray(c);
  const Rational own = intersect(c, germs[idx].center);
  for (const auto& g : germs.germs()) {
    if (intersect(c, g.center) < own) return false;
  }
  return true;
}

std::vector<std::size_t> cells_containing(const PicardManinClass& c,
                                          const GermSet& germs) {
  require_positive_ray(c);
  std::vector<Rational> products;
  products.reserve(germs.size());
  for (const auto& g : germs.germs()) {
    products.push_back(intersect(c, g.center));
  }
  std::vector<std::size_t> out;
  if (products.empty()) return out;
  const Rational lowest = *std::min_element(products.begin(), products.end());
  for (std::size_t i = 0; i < products.size(); ++i) {
    if (products[i] == lowest) out.push_back(i);
  }
  return out;
}

std::string_view to_string(GermClass g) {
  switch (g) {
    case GermClass::JonquieresAdjacent: return "jonquieres_adjacent";
    case GermClass::GeneralAdjacent: return "general_adjacent";
    case GermClass::QuasiAdjacentOnly: return "quasi_adjacent_only";
    case GermClass::Unclassified: return "unclassified";
  }
  return "unknown";
}

GermClass classify_germ(const Characteristic& f, const Configuration& config) {
  const auto base = f.base_points();
  config.require(base);
  if (is_jonquieres(f)) return GermClass::JonquieresAdjacent;
  const bool agp = almost_general_position(base, config);
  if (agp && base.size() <= 8) return GermClass::GeneralAdjacent;
  if (agp && base.size() == 9) return GermClass::QuasiAdjacentOnly;
  return GermClass::Unclassified;
}

PicardManinClass boundary_class(std::span<const PointId> points) {
  const std::set<PointId> distinct(points.begin(), points.end());
  if (points.size() != 9 || distinct.size() != 9) {
    throw Error(ErrorCode::WrongArity, "boundary class needs 9 distinct points");
  }
  std::map<PointId, Rational> mults;
  for (PointId p : distinct) mults[p] = 1;
  return {Rational(3), std::move(mults)};
}

}  // namespace cremona
