#include "cremona/halphen.hpp"

#include "cremona/error.hpp"

namespace cremona {

HalphenVector::HalphenVector(std::int64_t degree,
                             const std::array<std::int64_t, kPoints>& mults) {
  coords_[0] = degree;
  for (std::size_t i = 0; i < kPoints; ++i) coords_[i + 1] = mults[i];
}

HalphenVector HalphenVector::line() {
  HalphenVector v;
  v.coords_[0] = 1;
  return v;
}

HalphenVector HalphenVector::exceptional(std::size_t i) {
  HalphenVector v;
  v.coords_.at(i + 1) = -1;
  return v;
}

HalphenVector HalphenVector::canonical() {
  HalphenVector v;
  v.coords_[0] = -3;
  for (std::size_t i = 1; i <= kPoints; ++i) v.coords_[i] = -1;
  return v;
}

HalphenVector& HalphenVector::operator+=(const HalphenVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

HalphenVector& HalphenVector::operator-=(const HalphenVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

HalphenVector operator-(const HalphenVector& a) { return -1 * a; }

HalphenVector operator*(std::int64_t s, const HalphenVector& a) {
  HalphenVector out = a;
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::ostream& operator<<(std::ostream& os, const HalphenVector& v) {
  os << '(' << v.degree() << ';';
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    os << (i ? "," : " ") << v.mult(i);
  }
  return os << ')';
}

std::int64_t dot(const HalphenVector& a, const HalphenVector& b) {
  std::int64_t out = a.degree() * b.degree();
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    out -= a.mult(i) * b.mult(i);
  }
  return out;
}

TwistParam::TwistParam(const HalphenVector& a) : a_(a) {
  if (dot(a, HalphenVector::canonical()) != 0) {
    throw Error(ErrorCode::NotInKPerp, "twist parameter must satisfy a.K = 0");
  }
  if (dot(a, a) % 2 != 0) {
    throw Error(ErrorCode::NotInKPerp, "twist parameter must have even a.a");
  }
}

HalphenVector translate(const TwistParam& a, const HalphenVector& d) {
  const HalphenVector k = HalphenVector::canonical();
  const HalphenVector& av = a.vector();
  const std::int64_t kd = dot(k, d);
  // a.a is even, so the half is exact.
  const std::int64_t coeff = dot(av, d) - kd * (dot(av, av) / 2);
  return d - kd * av + coeff * k;
}

TwistParam twist_param(std::int64_t n, std::int64_t m) {
  const auto e = [](std::size_t i) { return HalphenVector::exceptional(i); };
  return TwistParam(n * (e(1) - e(0)) + m * (e(2) - e(0)));
}

std::int64_t twist_degree(std::int64_t n, std::int64_t m) {
  return dot(translate(twist_param(n, m), HalphenVector::line()),
             HalphenVector::line());
}

std::int64_t twist_degree_closed_form(std::int64_t n, std::int64_t m) {
  return 9 * (n * n + m * m + n * m) + 1;
}

HalphenFrame HalphenFrame::standard() {
  HalphenFrame f;
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    f.points[i] = PointId{std::int64_t(i)};
  }
  return f;
}

PicardManinClass to_class(const HalphenVector& v, const HalphenFrame& frame) {
  std::map<PointId, Rational> mults;
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    mults[frame.points[i]] = Rational(mpz_class(v.mult(i)));
  }
  return {Rational(mpz_class(v.degree())), std::move(mults)};
}

HalphenVector to_halphen(const PicardManinClass& c, const HalphenFrame& frame) {
  auto integral = [](const Rational& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
      throw Error(ErrorCode::UnsupportedClassSupport,
                  "Halphen coordinates must be machine integers");
    }
    return std::int64_t(r.get_num().get_si());
  };
  std::array<std::int64_t, HalphenVector::kPoints> mults{};
  std::size_t found = 0;
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    const Rational v = c.mult(frame.points[i]);
    if (v != 0) ++found;
    mults[i] = integral(v);
  }
  if (found != c.mults().size()) {
    throw Error(ErrorCode::UnsupportedClassSupport,
                "class is not supported on the Halphen frame");
  }
  return {integral(c.degree()), mults};
}

namespace {

std::vector<BasePoint> base_locus(const HalphenVector& image,
                                  const HalphenFrame& frame) {
  std::vector<BasePoint> out;
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    if (image.mult(i) != 0) out.push_back({frame.points[i], image.mult(i)});
  }
  return out;
}

std::optional<std::size_t> frame_index(const HalphenFrame& frame, PointId p) {
  for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
    if (frame.points[i] == p) return i;
  }
  return std::nullopt;
}

}  // namespace

Characteristic twist_characteristic(std::int64_t n, std::int64_t m,
                                    const HalphenFrame& frame) {
  if (n == 0 && m == 0) {
    throw Error(ErrorCode::IdentityTwist, "(0, 0) is the identity");
  }
  const TwistParam a = twist_param(n, m);
  const TwistParam minus_a(-a.vector());
  const HalphenVector forward = translate(a, HalphenVector::line());
  const HalphenVector backward = translate(minus_a, HalphenVector::line());

  auto base = base_locus(backward, frame);
  auto inv = base_locus(forward, frame);

  ResolutionMatrix res(inv.size(), std::vector<Rational>(base.size()));
  for (std::size_t j = 0; j < base.size(); ++j) {
    const HalphenVector image = translate(
        a, HalphenVector::exceptional(*frame_index(frame, base[j].point)));
    if (image.degree() != base[j].mult) {
      throw Error(ErrorCode::InvalidCharacteristic,
                  "lattice image disagrees with the base multiplicity");
    }
    std::size_t placed = 0;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      const std::int64_t v =
          image.mult(*frame_index(frame, inv[i].point));
      res[i][j] = Rational(mpz_class(v));
      if (v != 0) ++placed;
    }
    if (placed != base_locus(image, frame).size()) {
      throw Error(ErrorCode::InvalidCharacteristic,
                  "lattice image leaves the inverse base locus");
    }
  }
  return {dot(forward, HalphenVector::line()), std::move(base), std::move(inv),
          std::move(res)};
}

PointMap twist_image_map(std::int64_t n, std::int64_t m,
                         const HalphenFrame& frame) {
  const TwistParam a = twist_param(n, m);
  const HalphenVector backward =
      translate(TwistParam(-a.vector()), HalphenVector::line());
  PointMap out;
  for (std::size_t j = 0; j < HalphenVector::kPoints; ++j) {
    if (backward.mult(j) != 0) continue;
    const HalphenVector image = translate(a, HalphenVector::exceptional(j));
    for (std::size_t i = 0; i < HalphenVector::kPoints; ++i) {
      if (image == HalphenVector::exceptional(i)) {
        out[frame.points[j]] = frame.points[i];
      }
    }
  }
  return out;
}

}  // namespace cremona
