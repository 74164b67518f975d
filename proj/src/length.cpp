#include "cremona/length.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cremona/error.hpp"

namespace cremona {

HomaloidalType HomaloidalType::of(const Characteristic& f) {
  return {f.degree(), f.base()};
}

bool satisfies_noether(const HomaloidalType& t) {
  if (t.degree < 1) return false;
  __int128 sum = 0, sum_sq = 0;
  std::set<PointId> seen;
  for (const auto& bp : t.base) {
    if (!seen.insert(bp.point).second) return false;
    if (bp.mult < 1 || bp.mult > t.degree - 1) return false;
    sum += bp.mult;
    sum_sq += __int128(bp.mult) * bp.mult;
  }
  return sum == __int128(3) * (t.degree - 1) &&
         sum_sq == __int128(t.degree) * t.degree - 1;
}

int length_lower_md(const Characteristic& f) {
  const std::int64_t distinct = md(f);
  int L = 0;
  while (distinct > (std::int64_t(1) << (L + 1)) - 2) ++L;
  return L;
}

int length_lower_deg(const Characteristic& f) {
  if (f.base().size() > 9) {
    throw Error(ErrorCode::TooManyBasePoints,
                "degree bound needs at most 9 base points");
  }
  if (f.degree() <= 1) return 0;
  int L = 1;
  while (5 * std::int64_t(L) * L < f.degree()) ++L;
  return L;
}

namespace {

struct Choice {
  std::int64_t new_degree;
  std::int64_t k;
  std::vector<PointId> labels;  // center first, then small points

  bool better_than(const Choice& other) const {
    if (new_degree != other.new_degree) return new_degree < other.new_degree;
    if (k != other.k) return k < other.k;
    return labels < other.labels;
  }
};

}  // namespace

PredecessorStep greedy_predecessor(const HomaloidalType& t) {
  if (t.degree < 2 || !satisfies_noether(t)) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "greedy predecessor needs a valid map of degree >= 2");
  }
  const std::int64_t d = t.degree;
  std::vector<BasePoint> order = t.base;
  std::stable_sort(order.begin(), order.end(),
                   [](const BasePoint& a, const BasePoint& b) {
                     if (a.mult != b.mult) return a.mult > b.mult;
                     return a.point < b.point;
                   });
  const std::size_t r = order.size();
  const std::int64_t k_max = 1 + std::int64_t(r - 1) / 2;

  std::optional<Choice> best;
  for (std::size_t c = 0; c < r && order[c].mult == order[0].mult; ++c) {
    std::vector<BasePoint> rest;
    for (std::size_t i = 0; i < r; ++i) {
      if (i != c) rest.push_back(order[i]);
    }
    const std::int64_t mc = order[c].mult;
    for (std::int64_t k = 2; k <= k_max; ++k) {
      const std::size_t n_small = std::size_t(2 * k - 2);
      // k <= k_max keeps n_small <= rest.size().
      std::int64_t small_sum = 0;
      for (std::size_t i = 0; i < n_small; ++i) small_sum += rest[i].mult;
      Choice cand{d * k - (k - 1) * mc - small_sum, k, {order[c].point}};
      for (std::size_t i = 0; i < n_small; ++i) {
        cand.labels.push_back(rest[i].point);
      }
      // The composite's new base points must have nonnegative multiplicity.
      bool feasible =
          cand.new_degree >= 1 && d * (k - 1) - (k - 2) * mc - small_sum >= 0;
      for (std::size_t i = 0; i < n_small; ++i) {
        feasible = feasible && d - mc - rest[i].mult >= 0;
      }
      if (feasible && (!best || cand.better_than(*best))) best = cand;
    }
  }
  if (!best || best->new_degree >= d) {
    throw Error(ErrorCode::NoDecrease, "no Jonquieres factor lowers the degree");
  }

  std::map<PointId, std::int64_t> mult_of;
  std::int64_t next_label = 0;
  for (const auto& bp : t.base) {
    mult_of[bp.point] = bp.mult;
    next_label = std::max(next_label, bp.point.value + 1);
  }

  const std::int64_t k = best->k;
  const PointId center = best->labels.front();
  const std::vector<PointId> smalls(best->labels.begin() + 1,
                                    best->labels.end());
  const std::int64_t mc = mult_of.at(center);
  std::int64_t small_sum = 0;
  for (PointId s : smalls) small_sum += mult_of.at(s);

  const PointId new_center{next_label++};
  std::vector<PointId> new_smalls;
  for (std::size_t i = 0; i < smalls.size(); ++i) {
    new_smalls.push_back(PointId{next_label++});
  }

  PredecessorStep step{
      Characteristic::jonquieres(k, center, smalls, new_center, new_smalls),
      best->new_degree,
      {best->new_degree, {}}};
  const std::set<PointId> chosen(best->labels.begin(), best->labels.end());
  for (const auto& bp : t.base) {
    if (!chosen.contains(bp.point)) step.next.base.push_back(bp);
  }
  const std::int64_t center_mult = d * (k - 1) - (k - 2) * mc - small_sum;
  if (center_mult > 0) step.next.base.push_back({new_center, center_mult});
  for (std::size_t i = 0; i < smalls.size(); ++i) {
    const std::int64_t m = d - mc - mult_of.at(smalls[i]);
    if (m > 0) step.next.base.push_back({new_smalls[i], m});
  }
  if (!satisfies_noether(step.next)) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "greedy step produced a type violating Noether");
  }
  return step;
}

PredecessorStep greedy_predecessor(const Characteristic& f) {
  if (!validate(f).ok()) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "greedy predecessor needs a valid characteristic");
  }
  return greedy_predecessor(HomaloidalType::of(f));
}

LengthBounds greedy_length(const Characteristic& f) {
  if (!validate(f).ok()) {
    throw Error(ErrorCode::InvalidCharacteristic,
                "length bounds need a valid characteristic");
  }
  LengthBounds out;
  out.lower_md = length_lower_md(f);
  if (f.base().size() <= 9) out.lower_deg = length_lower_deg(f);

  HomaloidalType current = HomaloidalType::of(f);
  while (current.degree > 1) {
    PredecessorStep step = greedy_predecessor(current);
    out.decomposition.push_back({std::move(step.jonquieres), step.new_degree});
    current = std::move(step.next);
  }
  out.upper_greedy = int(out.decomposition.size());
  return out;
}

}  // namespace cremona
