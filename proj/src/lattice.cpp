#include "cremona/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cremona/error.hpp"

namespace cremona {

PicardManinClass::PicardManinClass(Rational degree,
                                   std::map<PointId, Rational> mults)
    : degree_(std::move(degree)), mults_(std::move(mults)) {
  degree_.canonicalize();
  std::erase_if(mults_, [](auto& entry) {
    entry.second.canonicalize();
    return entry.second == 0;
  });
}

PicardManinClass PicardManinClass::line() { return {Rational(1), {}}; }

PicardManinClass PicardManinClass::exceptional(PointId p) {
  return {Rational(0), {{p, Rational(-1)}}};
}

Rational PicardManinClass::mult(PointId p) const {
  const auto it = mults_.find(p);
  return it == mults_.end() ? Rational(0) : it->second;
}

std::vector<PointId> PicardManinClass::support() const {
  std::vector<PointId> out;
  out.reserve(mults_.size());
  for (const auto& entry : mults_) out.push_back(entry.first);
  return out;
}

Rational PicardManinClass::self_intersection() const {
  return intersect(*this, *this);
}

PicardManinClass& PicardManinClass::operator+=(const PicardManinClass& other) {
  degree_ += other.degree_;
  for (const auto& [p, v] : other.mults_) {
    auto it = mults_.try_emplace(p, 0).first;
    it->second += v;
    if (it->second == 0) mults_.erase(it);
  }
  return *this;
}

PicardManinClass& PicardManinClass::operator-=(const PicardManinClass& other) {
  return *this += Rational(-1) * other;
}

PicardManinClass& PicardManinClass::operator*=(const Rational& s) {
  if (s == 0) {
    degree_ = 0;
    mults_.clear();
    return *this;
  }
  degree_ *= s;
  for (auto& entry : mults_) entry.second *= s;
  return *this;
}

PicardManinClass operator+(PicardManinClass a, const PicardManinClass& b) {
  return a += b;
}
PicardManinClass operator-(PicardManinClass a, const PicardManinClass& b) {
  return a -= b;
}
PicardManinClass operator-(PicardManinClass a) { return a *= Rational(-1); }
PicardManinClass operator*(const Rational& s, PicardManinClass a) {
  return a *= s;
}

std::ostream& operator<<(std::ostream& os, const PicardManinClass& c) {
  os << format_rational(c.degree()) << " l";
  for (const auto& [p, v] : c.mults()) {
    os << " - " << format_rational(v) << " e_" << p;
  }
  return os;
}

Rational intersect(const PicardManinClass& a, const PicardManinClass& b) {
  Rational out = a.degree() * b.degree();
  const auto& small = a.mults().size() <= b.mults().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [p, v] : small.mults()) {
    const auto it = large.mults().find(p);
    if (it != large.mults().end()) out -= v * it->second;
  }
  return out;
}

double distance(const PicardManinClass& a, const PicardManinClass& b) {
  if (a.self_intersection() != 1 || b.self_intersection() != 1) {
    throw Error(ErrorCode::NotOnHyperboloid,
                "distance needs classes of self-intersection 1");
  }
  const Rational p = intersect(a, b);
  if (p < 1) {
    throw Error(ErrorCode::InvalidPair,
                "pairing " + format_rational(p) + " < 1");
  }
  return std::acosh(p.get_d());
}

RealClass RealClass::from(const PicardManinClass& c) {
  RealClass out;
  out.degree = c.degree().get_d();
  for (const auto& [p, v] : c.mults()) out.mults[p] = v.get_d();
  return out;
}

double intersect(const RealClass& a, const RealClass& b) {
  double out = a.degree * b.degree;
  for (const auto& [p, v] : a.mults) {
    const auto it = b.mults.find(p);
    if (it != b.mults.end()) out -= v * it->second;
  }
  return out;
}

double distance(const RealClass& a, const RealClass& b) {
  return std::acosh(std::max(1.0, intersect(a, b)));
}

RealClass geodesic_point(const PicardManinClass& a, const PicardManinClass& b,
                         double t) {
  if (a == b) {
    throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  }
  const double d = distance(a, b);
  const double sd = std::sinh(d);
  const double wa = std::sinh((1.0 - t) * d) / sd;
  const double wb = std::sinh(t * d) / sd;

  RealClass out;
  out.degree = wa * a.degree().get_d() + wb * b.degree().get_d();
  for (const auto& [p, v] : a.mults()) out.mults[p] += wa * v.get_d();
  for (const auto& [p, v] : b.mults()) out.mults[p] += wb * v.get_d();
  return out;
}

namespace {

void for_each_subset(const std::vector<PointId>& pts, std::size_t k,
                     auto&& fn) {
  if (pts.size() < k) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<PointId> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pts[idx[i]];
    fn(subset);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pts.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void add_family(std::vector<Curve>& out, int degree,
                const std::vector<std::set<PointId>>& declared,
                const std::vector<PointId>& proper, std::size_t through) {
  std::set<std::set<PointId>> seen;
  auto emit = [&](std::set<PointId> pts) {
    if (seen.insert(pts).second) {
      out.push_back({degree, std::vector<PointId>(pts.begin(), pts.end())});
    }
  };
  for_each_subset(proper, through, [&](const std::vector<PointId>& subset) {
    std::set<PointId> pts(subset.begin(), subset.end());
    for (const auto& incidence : declared) {
      if (std::includes(incidence.begin(), incidence.end(), subset.begin(),
                        subset.end())) {
        pts.insert(incidence.begin(), incidence.end());
      }
    }
    emit(std::move(pts));
  });
  for (const auto& incidence : declared) emit(incidence);
}

}  // namespace

std::vector<Curve> bezout_curves(const Configuration& config) {
  const auto proper = config.proper_points();
  std::vector<Curve> out;
  add_family(out, 1, config.collinear(), proper, 2);
  add_family(out, 2, config.conics(), proper, 5);
  return out;
}

ECheckReport in_e(const PicardManinClass& c, const Configuration& config) {
  const auto support = c.support();
  config.require(support);

  ECheckReport report;
  Rational total = 0;
  for (const auto& [p, v] : c.mults()) {
    total += v;
    if (v < 0 && report.nonneg_mults.ok) {
      report.nonneg_mults = {false, p};
    }
  }

  report.anticanonical_value = 3 * c.degree() - total;
  report.anticanonical = report.anticanonical_value >= 0;

  // At a point without successors the excess is lambda_p itself, which
  // condition (1) already covers; only branching points are checked here.
  for (PointId p : config.points()) {
    const auto children = config.children(p);
    if (children.empty()) continue;
    Rational excess = c.mult(p);
    for (PointId q : children) excess -= c.mult(q);
    if (excess < 0) {
      report.excesses = {false, p};
      break;
    }
  }

  for (auto& curve : bezout_curves(config)) {
    Rational value = c.degree() * curve.degree;
    for (PointId p : curve.points) value -= c.mult(p);
    if (value < 0) {
      report.bezout = {false, std::move(curve)};
      break;
    }
  }
  return report;
}

std::optional<std::array<PointId, 3>> leading_points(
    const PicardManinClass& c, const Configuration& config) {
  config.require(c.support());
  auto pts = config.points();
  if (pts.size() < 3) return std::nullopt;
  std::stable_sort(pts.begin(), pts.end(), [&c](PointId a, PointId b) {
    return c.mult(a) > c.mult(b);
  });
  return std::array<PointId, 3>{pts[0], pts[1], pts[2]};
}

bool is_special(const PicardManinClass& c, const Configuration& config) {
  const auto lead = leading_points(c, config);
  if (!lead) return false;
  const auto [p0, p1, p2] = *lead;
  if (!is_adherent(p1, p0, config) || !is_adherent(p2, p0, config)) {
    return false;
  }
  return c.degree() - c.mult(p0) - c.mult(p1) - c.mult(p2) < 0;
}

}  // namespace cremona
