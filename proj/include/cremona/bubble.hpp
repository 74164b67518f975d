#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <vector>

namespace cremona {

/// Symbolic label of a point of the bubble space (a point of P^2 or a point
/// infinitely near to one). Labels carry no coordinates.
struct PointId {
  std::int64_t value = 0;

  constexpr auto operator<=>(const PointId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, PointId p) {
  return os << 'p' << p.value;
}

/// A finite set of bubble points with their proximity forest and the declared
/// incidences (collinear sets and sets lying on a common conic).
///
/// Incidences are declared, never inferred. A configuration with no declared
/// incidences is fully generic. The constructor throws
/// Error(InvalidConfiguration) when the parent relation has a cycle, refers
/// to an unknown point, when an incidence set is too small or names an
/// unknown point, or when a collinear set holds both a point and its parent.
class Configuration {
 public:
  struct Point {
    PointId id;
    std::optional<PointId> parent;
  };

  Configuration() = default;
  explicit Configuration(std::vector<Point> points,
                         std::vector<std::vector<PointId>> collinear = {},
                         std::vector<std::vector<PointId>> conics = {});

  /// Proper points in general position.
  static Configuration generic(std::span<const PointId> points);

  bool contains(PointId p) const { return parent_.contains(p); }
  std::size_t size() const { return parent_.size(); }

  /// Throws Error(UnknownPoint).
  std::optional<PointId> parent(PointId p) const;
  bool is_proper(PointId p) const { return !parent(p).has_value(); }

  std::vector<PointId> points() const;
  std::vector<PointId> proper_points() const;
  /// Direct successors q -> p.
  std::vector<PointId> children(PointId p) const;

  const std::vector<std::set<PointId>>& collinear() const { return collinear_; }
  const std::vector<std::set<PointId>>& conics() const { return conics_; }

  /// Throws Error(UnknownPoint) unless every point is present.
  void require(std::span<const PointId> points) const;

 private:
  std::map<PointId, std::optional<PointId>> parent_;
  std::vector<std::set<PointId>> collinear_;
  std::vector<std::set<PointId>> conics_;
};

/// q is adherent to p iff p is the direct parent of q (first-order
/// proximity only). Throws Error(UnknownPoint).
bool is_adherent(PointId q, PointId p, const Configuration& config);

/// Almost general position: ancestor-closed, no four points of `points` in a
/// declared collinear set, no seven in a declared conic set, and no two of
/// them adherent to a third one of them. Throws Error(UnknownPoint).
bool almost_general_position(std::span<const PointId> points,
                             const Configuration& config);

}  // namespace cremona
