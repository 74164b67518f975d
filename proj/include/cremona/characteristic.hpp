#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/bubble.hpp"
#include "cremona/lattice.hpp"
#include "cremona/rational.hpp"

namespace cremona {

struct BasePoint {
  PointId point;
  std::int64_t mult = 0;

  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

/// a(i, j): rows indexed by the base points q_i of the inverse map, columns
/// by the base points p_j of the map. Column j lists the e_q coefficients of
/// the image of e_{p_j}.
using ResolutionMatrix = std::vector<std::vector<Rational>>;

/// Numerical data of a plane birational map: degree, base points of the map
/// and of its inverse with multiplicities, and optionally the resolution
/// matrix needed to act on Picard-Manin classes.
///
/// Construction only checks shapes (Error(InvalidCharacteristic) when the
/// matrix is not |inverse_base| x |base|); the Noether identities are checked
/// by validate().
class Characteristic {
 public:
  Characteristic() : Characteristic(1, {}, {}, ResolutionMatrix{}) {}
  Characteristic(std::int64_t degree, std::vector<BasePoint> base,
                 std::vector<BasePoint> inverse_base,
                 std::optional<ResolutionMatrix> resolution = std::nullopt);

  static Characteristic identity() { return {}; }

  /// Standard quadratic involution type with a(i, j) = 1 - delta(i, j):
  /// e_{p_j} goes to l - e_{q_k} - e_{q_l} for {j, k, l} = {0, 1, 2}.
  static Characteristic quadratic(const std::array<PointId, 3>& base,
                                  const std::array<PointId, 3>& inverse_base);

  /// Jonquieres map of degree d >= 2 on proper generic points: base
  /// (center, d - 1), (smalls[i], 1) and inverse (inverse_center, d - 1),
  /// (inverse_smalls[i], 1), both with 2d - 2 small points. e_{center} goes
  /// to (d-1) l - (d-2) e_{q0} - sum e_{q_i}, e_{smalls[i]} to
  /// l - e_{q0} - e_{q_i}.
  static Characteristic jonquieres(std::int64_t degree, PointId center,
                                   const std::vector<PointId>& smalls,
                                   PointId inverse_center,
                                   const std::vector<PointId>& inverse_smalls);

  std::int64_t degree() const { return degree_; }
  const std::vector<BasePoint>& base() const { return base_; }
  const std::vector<BasePoint>& inverse_base() const { return inverse_base_; }
  const std::optional<ResolutionMatrix>& resolution() const {
    return resolution_;
  }

  std::vector<PointId> base_points() const;
  std::vector<PointId> inverse_base_points() const;
  std::optional<std::size_t> base_index(PointId p) const;
  std::optional<std::size_t> inverse_index(PointId q) const;

  friend bool operator==(const Characteristic&,
                         const Characteristic&) = default;

 private:
  std::int64_t degree_;
  std::vector<BasePoint> base_;
  std::vector<BasePoint> inverse_base_;
  std::optional<ResolutionMatrix> resolution_;
};

std::ostream& operator<<(std::ostream& os, const Characteristic& f);

enum class Side { Base, Inverse };

struct Violation {
  enum class Kind {
    NonPositiveDegree,
    LinearNoether,     // 3(d - 1) != sum m
    QuadraticNoether,  // d^2 - 1 != sum m^2
    MultiplicityBound,
    DuplicatePoint,
  };
  Kind kind;
  Side side;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation::Kind kind, Side side) const;
};

std::string_view to_string(Violation::Kind kind);

/// Noether identities 3(d-1) = sum m and d^2 - 1 = sum m^2 on both sides,
/// 1 <= m <= d - 1, no repeated point, and empty base loci in degree 1.
ValidationReport validate(const Characteristic& f);

/// Base and inverse base swapped, resolution matrix transposed.
Characteristic inverse(const Characteristic& f);

/// Multiplicity pattern {d - 1, 1^(2d - 2)}, or d <= 2. Throws
/// Error(InvalidCharacteristic) unless validate(f) passes.
bool is_jonquieres(const Characteristic& f);

/// Number of distinct multiplicities of the base points (0 in degree 1).
int md(const Characteristic& f);

using PointMap = std::map<PointId, PointId>;

/// Action on a class supported in Bs(f) and on points outside Bs(f), which
/// are transported without change of label. A transported point must not
/// be a base point of the inverse. Throws Error(MissingResolutionData) or
/// Error(UnsupportedClassSupport).
PicardManinClass apply(const Characteristic& f, const PicardManinClass& c);

/// Same with an explicit transport of the non-base support.
PicardManinClass apply(const Characteristic& f, const PicardManinClass& c,
                       const PointMap& image_map);

/// g o f when Bs(g) and Bs(f^-1) are disjoint: degree deg(g) deg(f), base
/// points of f with multiplicities scaled by deg(g) plus base points of g
/// (transported without relabeling) with their own multiplicities, and
/// symmetrically on the inverse side. When both inputs carry resolution
/// data the composite does too. Throws Error(BasePointCollision) if the
/// supports meet or the transported labels collide.
Characteristic compose_disjoint(const Characteristic& g,
                                const Characteristic& f);

/// q_1 o ... o q_n for standard quadratic maps with pairwise disjoint base
/// loci, labelled 6(i-1) .. 6(i-1)+2 (base of q_i) and 6(i-1)+3 .. 6(i-1)+5
/// (inverse base of q_i). Characteristic (2^n; (2^(n-1))^3, ..., 1^3).
Characteristic quadratic_tower(int n);

}  // namespace cremona
