#include "cremona/bubble.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::string describe(PointId p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

Configuration::Configuration(std::vector<Point> points,
                             std::vector<std::vector<PointId>> collinear,
                             std::vector<std::vector<PointId>> conics) {
  for (const auto& pt : points) {
    if (!parent_.emplace(pt.id, pt.parent).second) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "duplicate point " + describe(pt.id));
    }
  }
  for (const auto& [id, parent] : parent_) {
    if (parent && !parent_.contains(*parent)) {
      throw Error(ErrorCode::InvalidConfiguration,
                  "parent of " + describe(id) + " is unknown");
    }
  }
  // Walking up from any point must terminate within size() steps.
  for (const auto& [id, parent] : parent_) {
    std::optional<PointId> cur = parent;
    std::size_t steps = 0;
    while (cur) {
      if (*cur == id || ++steps > parent_.size()) {
        throw Error(ErrorCode::InvalidConfiguration,
                    "proximity cycle through " + describe(id));
      }
      cur = parent_.at(*cur);
    }
  }

  auto load = [this](std::vector<std::vector<PointId>>& sets,
                     std::size_t min_size, const char* what) {
    std::vector<std::set<PointId>> out;
    for (const auto& raw : sets) {
      std::set<PointId> s(raw.begin(), raw.end());
      if (s.size() < min_size || s.size() != raw.size()) {
        throw Error(ErrorCode::InvalidConfiguration,
                    std::string(what) + " set needs at least " +
                        std::to_string(min_size) + " distinct points");
      }
      for (PointId p : s) {
        if (!parent_.contains(p)) {
          throw Error(ErrorCode::InvalidConfiguration,
                      std::string(what) + " set names unknown point " +
                          describe(p));
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  collinear_ = load(collinear, 3, "collinear");
  conics_ = load(conics, 6, "conic");

  for (const auto& s : collinear_) {
    for (PointId p : s) {
      const auto& parent = parent_.at(p);
      if (parent && s.contains(*parent)) {
        throw Error(ErrorCode::InvalidConfiguration,
                    "collinear set holds " + describe(p) +
                        " and its parent " + describe(*parent));
      }
    }
  }
}

Configuration Configuration::generic(std::span<const PointId> points) {
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (PointId p : points) pts.push_back({p, std::nullopt});
  return Configuration(std::move(pts));
}

std::optional<PointId> Configuration::parent(PointId p) const {
  const auto it = parent_.find(p);
  if (it == parent_.end()) {
    throw Error(ErrorCode::UnknownPoint, describe(p));
  }
  return it->second;
}

std::vector<PointId> Configuration::points() const {
  std::vector<PointId> out;
  out.reserve(parent_.size());
  for (const auto& entry : parent_) out.push_back(entry.first);
  return out;
}

std::vector<PointId> Configuration::proper_points() const {
  std::vector<PointId> out;
  for (const auto& [id, parent] : parent_) {
    if (!parent) out.push_back(id);
  }
  return out;
}

std::vector<PointId> Configuration::children(PointId p) const {
  require(std::span(&p, 1));
  std::vector<PointId> out;
  for (const auto& [id, parent] : parent_) {
    if (parent == p) out.push_back(id);
  }
  return out;
}

void Configuration::require(std::span<const PointId> points) const {
  for (PointId p : points) {
    if (!parent_.contains(p)) throw Error(ErrorCode::UnknownPoint, describe(p));
  }
}

bool is_adherent(PointId q, PointId p, const Configuration& config) {
  config.require(std::span(&p, 1));
  return config.parent(q) == p;
}

bool almost_general_position(std::span<const PointId> points,
                             const Configuration& config) {
  config.require(points);
  const std::set<PointId> s(points.begin(), points.end());

  for (PointId p : s) {
    for (auto a = config.parent(p); a; a = config.parent(*a)) {
      if (!s.contains(*a)) return false;
    }
  }

  auto count_in = [&s](const std::set<PointId>& incidence) {
    return std::count_if(incidence.begin(), incidence.end(),
                         [&s](PointId p) { return s.contains(p); });
  };
  for (const auto& line : config.collinear()) {
    if (count_in(line) >= 4) return false;
  }
  for (const auto& conic : config.conics()) {
    if (count_in(conic) >= 7) return false;
  }

  std::map<PointId, int> adherent_count;
  for (PointId q : s) {
    const auto parent = config.parent(q);
    if (parent && s.contains(*parent) && ++adherent_count[*parent] >= 2) {
      return false;
    }
  }
  return true;
}

}  // namespace cremona
