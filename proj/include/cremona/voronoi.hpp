#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/bubble.hpp"
#include "cremona/characteristic.hpp"
#include "cremona/lattice.hpp"

namespace cremona {

struct Germ {
  std::string label;
  PicardManinClass center;  // f(l), on the hyperboloid
};

/// Finite set of orbit points. Throws Error(NotOnHyperboloid) unless every
/// center has self-intersection exactly 1.
class GermSet {
 public:
  GermSet() = default;
  explicit GermSet(std::vector<Germ> germs);

  std::size_t size() const { return germs_.size(); }
  const Germ& operator[](std::size_t i) const { return germs_[i]; }
  const std::vector<Germ>& germs() const { return germs_; }

 private:
  std::vector<Germ> germs_;
};

/// c lies in the cell of germs[idx] relative to `germs`: c.germs[idx] <=
/// c.germs[j] for every j, compared exactly. argcosh is increasing, so this
/// is the distance comparison. Membership is invariant under positive
/// rescaling, so any class with c.c > 0 and positive degree is accepted as a
/// representative of its point of H (Error(NotOnHyperboloid) otherwise).
/// Throws Error(IndexOutOfRange).
bool cell_member(const PicardManinClass& c, std::size_t idx,
                 const GermSet& germs);

/// Indices of all cells containing c (ascending).
std::vector<std::size_t> cells_containing(const PicardManinClass& c,
                                          const GermSet& germs);

enum class GermClass {
  JonquieresAdjacent,
  GeneralAdjacent,
  QuasiAdjacentOnly,
  Unclassified,
};

std::string_view to_string(GermClass g);

/// Position of the cell of f relative to the cell of the identity:
/// Jonquieres characteristic, else at most 8 base points in almost general
/// position (adjacent), else exactly 9 in almost general position
/// (quasi-adjacent only), else unclassified. Throws
/// Error(InvalidCharacteristic) or Error(UnknownPoint).
GermClass classify_germ(const Characteristic& f, const Configuration& config);

/// 3 l - sum e_p over nine distinct points. Throws Error(WrongArity).
PicardManinClass boundary_class(std::span<const PointId> points);

}  // namespace cremona
