#pragma once

#include <array>
#include <cstdint>
#include <ostream>

#include "cremona/characteristic.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

/// Integer vector n l - sum_i lambda_i e_{p_i} of the rank-10 lattice of a
/// Halphen surface, stored as (n; lambda_0, ..., lambda_8).
class HalphenVector {
 public:
  static constexpr std::size_t kPoints = 9;

  HalphenVector() = default;
  HalphenVector(std::int64_t degree,
                const std::array<std::int64_t, kPoints>& mults);

  static HalphenVector line();
  static HalphenVector exceptional(std::size_t i);
  /// K_X = -3 l + e_{p_0} + ... + e_{p_8}.
  static HalphenVector canonical();

  std::int64_t degree() const { return coords_[0]; }
  std::int64_t mult(std::size_t i) const { return coords_[i + 1]; }

  HalphenVector& operator+=(const HalphenVector& other);
  HalphenVector& operator-=(const HalphenVector& other);

  friend HalphenVector operator+(HalphenVector a, const HalphenVector& b) {
    return a += b;
  }
  friend HalphenVector operator-(HalphenVector a, const HalphenVector& b) {
    return a -= b;
  }
  friend HalphenVector operator-(const HalphenVector& a);
  friend HalphenVector operator*(std::int64_t s, const HalphenVector& a);
  friend bool operator==(const HalphenVector&, const HalphenVector&) = default;

 private:
  std::array<std::int64_t, kPoints + 1> coords_{};
};

std::ostream& operator<<(std::ostream& os, const HalphenVector& v);

/// n n' - sum lambda_i lambda'_i.
std::int64_t dot(const HalphenVector& a, const HalphenVector& b);

/// Element of K_X^perp; a.a is then even. Throws Error(NotInKPerp).
class TwistParam {
 public:
  explicit TwistParam(const HalphenVector& a);

  const HalphenVector& vector() const { return a_; }

 private:
  HalphenVector a_;
};

/// tau_a(d) = d - (K.d) a + (a.d - (K.d)(a.a)/2) K.
HalphenVector translate(const TwistParam& a, const HalphenVector& d);

/// n (e_{p_1} - e_{p_0}) + m (e_{p_2} - e_{p_0}).
TwistParam twist_param(std::int64_t n, std::int64_t m);

/// deg(g_1^n o g_2^m) evaluated on the lattice: tau(l) . l.
std::int64_t twist_degree(std::int64_t n, std::int64_t m);

/// 9(n^2 + m^2 + nm) + 1.
std::int64_t twist_degree_closed_form(std::int64_t n, std::int64_t m);

/// Labels of the nine blown-up points.
struct HalphenFrame {
  std::array<PointId, HalphenVector::kPoints> points;

  static HalphenFrame standard();  // p0 .. p8 labelled 0 .. 8
};

PicardManinClass to_class(const HalphenVector& v,
                          const HalphenFrame& frame = HalphenFrame::standard());
/// Throws Error(UnsupportedClassSupport) if c is not supported on the frame
/// or has non-integral coefficients.
HalphenVector to_halphen(const PicardManinClass& c,
                         const HalphenFrame& frame = HalphenFrame::standard());

/// Characteristic of g_1^n o g_2^m read off the lattice: inverse base from
/// tau_a(l), base from tau_{-a}(l), resolution matrix from tau_a(e_{p_j}).
/// Throws Error(IdentityTwist) for (0, 0).
Characteristic twist_characteristic(
    std::int64_t n, std::int64_t m,
    const HalphenFrame& frame = HalphenFrame::standard());

/// Transport of the frame points that are not base points of g_1^n o g_2^m,
/// for use with apply(f, c, image_map).
PointMap twist_image_map(std::int64_t n, std::int64_t m,
                         const HalphenFrame& frame = HalphenFrame::standard());

}  // namespace cremona
