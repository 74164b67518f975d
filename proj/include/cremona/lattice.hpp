#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "cremona/bubble.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Finitely supported Picard-Manin class n*l - sum_p lambda_p e_p with exact
/// rational coefficients. Zero multiplicities are never stored.
class PicardManinClass {
 public:
  PicardManinClass() = default;
  PicardManinClass(Rational degree, std::map<PointId, Rational> mults);

  /// The class l of a line.
  static PicardManinClass line();
  /// The exceptional class e_p (stored as lambda_p = -1).
  static PicardManinClass exceptional(PointId p);

  const Rational& degree() const { return degree_; }
  Rational mult(PointId p) const;
  const std::map<PointId, Rational>& mults() const { return mults_; }
  std::vector<PointId> support() const;

  Rational self_intersection() const;

  PicardManinClass& operator+=(const PicardManinClass& other);
  PicardManinClass& operator-=(const PicardManinClass& other);
  PicardManinClass& operator*=(const Rational& s);

  friend bool operator==(const PicardManinClass&,
                         const PicardManinClass&) = default;

 private:
  Rational degree_;
  std::map<PointId, Rational> mults_;
};

PicardManinClass operator+(PicardManinClass a, const PicardManinClass& b);
PicardManinClass operator-(PicardManinClass a, const PicardManinClass& b);
PicardManinClass operator-(PicardManinClass a);
PicardManinClass operator*(const Rational& s, PicardManinClass a);

std::ostream& operator<<(std::ostream& os, const PicardManinClass& c);

/// n n' - sum_p lambda_p lambda'_p.
Rational intersect(const PicardManinClass& a, const PicardManinClass& b);

/// argcosh(a.b). Both classes must have self-intersection exactly 1
/// (Error(NotOnHyperboloid)) and a.b >= 1 (Error(InvalidPair)).
double distance(const PicardManinClass& a, const PicardManinClass& b);

/// Class with floating-point coefficients; produced by geodesic evaluation.
struct RealClass {
  double degree = 0.0;
  std::map<PointId, double> mults;

  static RealClass from(const PicardManinClass& c);
};

double intersect(const RealClass& a, const RealClass& b);
double distance(const RealClass& a, const RealClass& b);

/// Point at parameter t on the hyperbolic segment [a, b]:
///   (sinh((1-t)D) a + sinh(tD) b) / sinh(D),  D = distance(a, b).
/// Throws Error(DegenerateSegment) when a == b.
RealClass geodesic_point(const PicardManinClass& a, const PicardManinClass& b,
                         double t);

/// A plane curve of the Bezout family, passing simply through `points`.
struct Curve {
  int degree = 0;
  std::vector<PointId> points;
};

struct ECheckReport {
  struct PointCondition {
    bool ok = true;
    std::optional<PointId> witness;
  };
  struct CurveCondition {
    bool ok = true;
    std::optional<Curve> witness;
  };

  PointCondition nonneg_mults;
  bool anticanonical = true;
  Rational anticanonical_value;  // 3n - sum lambda_p
  PointCondition excesses;
  CurveCondition bezout;

  bool in_e() const {
    return nonneg_mults.ok && anticanonical && excesses.ok && bezout.ok;
  }
};

/// The curves checked by the Bezout condition: lines through every pair of
/// proper points and through every declared collinear set, conics through
/// every five proper points and through every declared conic set. A curve
/// chosen through a pair (or five points) also passes through every point of
/// a declared incidence set containing them.
std::vector<Curve> bezout_curves(const Configuration& config);

/// The four defining conditions of the convex set E: nonnegative
/// multiplicities, positivity against the anticanonical class, positivity of
/// excesses at points with direct successors, and Bezout against
/// bezout_curves(config).
/// Throws Error(UnknownPoint) when the support is not in `config`.
ECheckReport in_e(const PicardManinClass& c, const Configuration& config);

/// The three points of largest multiplicity (ties by ascending id) among all
/// points of `config`; nullopt when config has fewer than three points.
std::optional<std::array<PointId, 3>> leading_points(
    const PicardManinClass& c, const Configuration& config);

/// Special class: the second and third leading points are adherent to the
/// first and n - lambda_0 - lambda_1 - lambda_2 < 0.
bool is_special(const PicardManinClass& c, const Configuration& config);

}  // namespace cremona
