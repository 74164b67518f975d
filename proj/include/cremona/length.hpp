#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/characteristic.hpp"

namespace cremona {

/// Degree and base points of a map; the only data the greedy decomposition
/// needs. The inverse side is not tracked.
struct HomaloidalType {
  std::int64_t degree = 1;
  std::vector<BasePoint> base;

  static HomaloidalType of(const Characteristic& f);
};

/// Both Noether identities and the multiplicity bounds on the base side.
bool satisfies_noether(const HomaloidalType& t);

struct DecompositionStep {
  Characteristic jonquieres;  // base points inside the current base locus
  std::int64_t degree = 1;    // degree after composing with its inverse
};

struct LengthBounds {
  int lower_md = 0;
  std::optional<int> lower_deg;  // only for maps with at most 9 base points
  int upper_greedy = 0;
  std::vector<DecompositionStep> decomposition;

  int lower() const { return std::max(lower_md, lower_deg.value_or(0)); }
};

/// Least L >= 0 with md(f) <= 2^(L+1) - 2.
int length_lower_md(const Characteristic& f);

/// Least L with deg(f) <= 5 L^2 (0 for the identity). Needs at most nine base
/// points, otherwise Error(TooManyBasePoints).
int length_lower_deg(const Characteristic& f);

struct PredecessorStep {
  Characteristic jonquieres;
  std::int64_t new_degree = 1;
  HomaloidalType next;
};

/// Jonquieres factor j minimizing deg(f o j^-1) under the generic-position
/// model: j has its center at a point of maximal multiplicity and its 2k - 2
/// small points at the largest remaining multiplicities, for every
/// 2 <= k <= 1 + (r - 1) / 2 with r base points. Ties go to the largest
/// degree drop, then the smallest k, then lexicographic point labels.
/// New points of the composite get fresh labels above every used label.
/// Throws Error(InvalidCharacteristic) for degree 1 or a type failing Noether
/// and Error(NoDecrease) if no choice lowers the degree.
PredecessorStep greedy_predecessor(const HomaloidalType& t);
PredecessorStep greedy_predecessor(const Characteristic& f);

/// Iterates greedy_predecessor down to degree 1.
LengthBounds greedy_length(const Characteristic& f);

}  // namespace cremona
