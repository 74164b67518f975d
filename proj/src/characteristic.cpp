#include "cremona/characteristic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

using Wide = __int128;

std::string describe(PointId p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::optional<std::size_t> index_of(const std::vector<BasePoint>& pts,
                                    PointId p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].point == p) return i;
  }
  return std::nullopt;
}

template <typename Transport>
PicardManinClass act(const Characteristic& f, const PicardManinClass& c,
                     Transport&& transport) {
  if (!f.resolution()) {
    throw Error(ErrorCode::MissingResolutionData,
                "action needs the resolution matrix");
  }
  const auto& a = *f.resolution();
  const auto& base = f.base();
  const auto& inv = f.inverse_base();

  const Rational& n = c.degree();
  Rational degree = n * f.degree();
  std::vector<Rational> lambda(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    lambda[j] = c.mult(base[j].point);
    degree -= lambda[j] * base[j].mult;
  }

  std::map<PointId, Rational> mults;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Rational coeff = n * inv[i].mult;
    for (std::size_t j = 0; j < base.size(); ++j) {
      coeff -= lambda[j] * a[i][j];
    }
    mults[inv[i].point] = coeff;
  }

  for (const auto& [p, v] : c.mults()) {
    if (f.base_index(p)) continue;
    const std::optional<PointId> target = transport(p);
    if (!target) {
      throw Error(ErrorCode::UnsupportedClassSupport,
                  "no image given for " + describe(p));
    }
    if (f.inverse_index(*target)) {
      throw Error(ErrorCode::UnsupportedClassSupport,
                  describe(p) + " would be sent onto a base point of the "
                                "inverse");
    }
    if (!mults.emplace(*target, v).second) {
      throw Error(ErrorCode::UnsupportedClassSupport,
                  "two points sent to " + describe(*target));
    }
  }
  return {std::move(degree), std::move(mults)};
}

void check_side(const std::vector<BasePoint>& pts, std::int64_t d, Side side,
                ValidationReport& report) {
  Wide sum = 0, sum_sq = 0;
  std::set<PointId> seen;
  for (const auto& bp : pts) {
    sum += bp.mult;
    sum_sq += Wide(bp.mult) * bp.mult;
    if (!seen.insert(bp.point).second) {
      report.violations.push_back({Violation::Kind::DuplicatePoint, side,
                                   "repeated " + describe(bp.point)});
    }
    if (d >= 2 && (bp.mult < 1 || bp.mult > d - 1)) {
      report.violations.push_back(
          {Violation::Kind::MultiplicityBound, side,
           describe(bp.point) + " has multiplicity " +
               std::to_string(bp.mult)});
    }
  }
  if (d == 1 && !pts.empty()) {
    report.violations.push_back({Violation::Kind::MultiplicityBound, side,
                                 "degree 1 map with base points"});
  }
  if (sum != Wide(3) * (d - 1)) {
    report.violations.push_back(
        {Violation::Kind::LinearNoether, side,
         "sum of multiplicities " + std::to_string(std::int64_t(sum)) +
             " != " + std::to_string(3 * (d - 1))});
  }
  if (sum_sq != Wide(d) * d - 1) {
    report.violations.push_back(
        {Violation::Kind::QuadraticNoether, side,
         "sum of squares " + std::to_string(std::int64_t(sum_sq)) +
             " != " + std::to_string(std::int64_t(Wide(d) * d - 1))});
  }
}

}  // namespace

Characteristic::Characteristic(std::int64_t degree, std::vector<BasePoint> base,
                               std::vector<BasePoint> inverse_base,
                               std::optional<ResolutionMatrix> resolution)
    : degree_(degree),
      base_(std::move(base)),
      inverse_base_(std::move(inverse_base)),
      resolution_(std::move(resolution)) {
  if (resolution_) {
    bool ok = resolution_->size() == inverse_base_.size();
    for (const auto& row : *resolution_) ok = ok && row.size() == base_.size();
    if (!ok) {
      throw Error(ErrorCode::InvalidCharacteristic,
                  "resolution matrix must be |inverse base| x |base|");
    }
  }
}

Characteristic Characteristic::quadratic(
    const std::array<PointId, 3>& base,
    const std::array<PointId, 3>& inverse_base) {
  std::vector<BasePoint> b, ib;
  ResolutionMatrix a(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    b.push_back({base[i], 1});
    ib.push_back({inverse_base[i], 1});
    for (std::size_t j = 0; j < 3; ++j) a[i][j] = i == j ? 0 : 1;
  }
  return {2, std::move(b), std::move(ib), std::move(a)};
}

Characteristic Characteristic::jonquieres(
    std::int64_t degree, PointId center, const std::vector<PointId>& smalls,
    PointId inverse_center, const std::vector<PointId>& inverse_smalls) {
  const std::size_t n_small = std::size_t(2 * degree - 2);
  if (degree < 2 || smalls.size() != n_small ||
      inverse_smalls.size() != n_small) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "Jonquieres map of degree d needs 2d - 2 small points");
  }
  std::vector<BasePoint> b{{center, degree - 1}}, ib{{inverse_center, degree - 1}};
  for (std::size_t i = 0; i < n_small; ++i) {
    b.push_back({smalls[i], 1});
    ib.push_back({inverse_smalls[i], 1});
  }
  const std::size_t r = n_small + 1;
  ResolutionMatrix a(r, std::vector<Rational>(r));
  a[0][0] = degree - 2;
  for (std::size_t i = 1; i < r; ++i) {
    a[i][0] = 1;
    a[0][i] = 1;
    a[i][i] = 1;
  }
  return {degree, std::move(b), std::move(ib), std::move(a)};
}

std::vector<PointId> Characteristic::base_points() const {
  std::vector<PointId> out;
  for (const auto& bp : base_) out.push_back(bp.point);
  return out;
}

std::vector<PointId> Characteristic::inverse_base_points() const {
  std::vector<PointId> out;
  for (const auto& bp : inverse_base_) out.push_back(bp.point);
  return out;
}

std::optional<std::size_t> Characteristic::base_index(PointId p) const {
  return index_of(base_, p);
}

std::optional<std::size_t> Characteristic::inverse_index(PointId q) const {
  return index_of(inverse_base_, q);
}

std::ostream& operator<<(std::ostream& os, const Characteristic& f) {
  os << '(' << f.degree() << ';';
  const char* sep = " ";
  for (const auto& bp : f.base()) {
    os << sep << bp.mult;
    sep = ",";
  }
  os << " |";
  sep = " ";
  for (const auto& bp : f.inverse_base()) {
    os << sep << bp.mult;
    sep = ",";
  }
  return os << ')';
}

bool ValidationReport::has(Violation::Kind kind, Side side) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) {
                       return v.kind == kind && v.side == side;
                     });
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NonPositiveDegree: return "non_positive_degree";
    case Violation::Kind::LinearNoether: return "linear_noether";
    case Violation::Kind::QuadraticNoether: return "quadratic_noether";
    case Violation::Kind::MultiplicityBound: return "multiplicity_bound";
    case Violation::Kind::DuplicatePoint: return "duplicate_point";
  }
  return "unknown";
}

ValidationReport validate(const Characteristic& f) {
  ValidationReport report;
  if (f.degree() < 1) {
    report.violations.push_back({Violation::Kind::NonPositiveDegree, Side::Base,
                                 "degree " + std::to_string(f.degree())});
    return report;
  }
  check_side(f.base(), f.degree(), Side::Base, report);
  check_side(f.inverse_base(), f.degree(), Side::Inverse, report);
  return report;
}

Characteristic inverse(const Characteristic& f) {
  std::optional<ResolutionMatrix> t;
  if (f.resolution()) {
    const auto& a = *f.resolution();
    t.emplace(f.base().size(), std::vector<Rational>(f.inverse_base().size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a[i].size(); ++j) (*t)[j][i] = a[i][j];
    }
  }
  return {f.degree(), f.inverse_base(), f.base(), std::move(t)};
}

bool is_jonquieres(const Characteristic& f) {
  if (!validate(f).ok()) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "is_jonquieres needs a valid characteristic");
  }
  const std::int64_t d = f.degree();
  if (d <= 2) return true;
  std::vector<std::int64_t> mults;
  for (const auto& bp : f.base()) mults.push_back(bp.mult);
  std::sort(mults.begin(), mults.end(), std::greater<>());
  if (mults.size() != std::size_t(2 * d - 1) || mults[0] != d - 1) return false;
  return std::all_of(mults.begin() + 1, mults.end(),
                     [](std::int64_t m) { return m == 1; });
}

int md(const Characteristic& f) {
  std::set<std::int64_t> distinct;
  for (const auto& bp : f.base()) distinct.insert(bp.mult);
  return int(distinct.size());
}

PicardManinClass apply(const Characteristic& f, const PicardManinClass& c) {
  return act(f, c, [](PointId p) { return std::optional<PointId>(p); });
}

PicardManinClass apply(const Characteristic& f, const PicardManinClass& c,
                       const PointMap& image_map) {
  return act(f, c, [&image_map](PointId p) -> std::optional<PointId> {
    const auto it = image_map.find(p);
    if (it == image_map.end()) return std::nullopt;
    return it->second;
  });
}

Characteristic compose_disjoint(const Characteristic& g,
                                const Characteristic& f) {
  for (const auto& bp : g.base()) {
    if (f.inverse_index(bp.point)) {
      throw Error(ErrorCode::BasePointCollision,
                  describe(bp.point) + " is a base point of g and of f^-1");
    }
  }

  std::vector<BasePoint> base, inv;
  for (const auto& bp : f.base()) base.push_back({bp.point, bp.mult * g.degree()});
  for (const auto& bp : g.base()) {
    if (index_of(base, bp.point)) {
      throw Error(ErrorCode::BasePointCollision,
                  "label " + describe(bp.point) + " used twice in the base");
    }
    base.push_back(bp);
  }
  for (const auto& bp : g.inverse_base()) {
    inv.push_back({bp.point, bp.mult * f.degree()});
  }
  for (const auto& bp : f.inverse_base()) {
    if (index_of(inv, bp.point)) {
      throw Error(ErrorCode::BasePointCollision,
                  "label " + describe(bp.point) +
                      " used twice in the inverse base");
    }
    inv.push_back(bp);
  }

  std::optional<ResolutionMatrix> a;
  if (g.resolution() && f.resolution()) {
    a.emplace(inv.size(), std::vector<Rational>(base.size()));
    for (std::size_t j = 0; j < base.size(); ++j) {
      const PicardManinClass image =
          apply(g, apply(f, PicardManinClass::exceptional(base[j].point)));
      for (const auto& [q, v] : image.mults()) {
        const auto i = index_of(inv, q);
        if (!i) {
          throw Error(ErrorCode::InvalidCharacteristic,
                      "composite image leaves the inverse base locus");
        }
        (*a)[*i][j] = v;
      }
    }
  }
  return {g.degree() * f.degree(), std::move(base), std::move(inv),
          std::move(a)};
}

Characteristic quadratic_tower(int n) {
  Characteristic h;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t o = 6 * std::int64_t(i - 1);
    const auto q = Characteristic::quadratic(
        {PointId{o}, PointId{o + 1}, PointId{o + 2}},
        {PointId{o + 3}, PointId{o + 4}, PointId{o + 5}});
    h = compose_disjoint(h, q);
  }
  return h;
}

}  // namespace cremona
