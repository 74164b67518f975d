#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/bubble.hpp"
#include "cremona/characteristic.hpp"
#include "cremona/hypgraph.hpp"
#include "cremona/lattice.hpp"
#include "cremona/voronoi.hpp"

namespace cremona::io {

template <typename T>
struct Labeled {
  std::string label;
  T value;
};

struct GermSetEntry {
  std::string label;
  GermSet germs;
  std::vector<Labeled<PicardManinClass>> probes;
};

/// Everything a batch run reads from one config file.
struct RunConfig {
  std::optional<Configuration> configuration;
  std::vector<Labeled<PicardManinClass>> classes;
  std::vector<Labeled<Characteristic>> characteristics;
  std::vector<GermSetEntry> germ_sets;
  std::optional<int> k_max;
  std::optional<int> n_max;
};

// Every parser throws Error(ParseError) on malformed input.
RunConfig parse_run_config(std::istream& in);
RunConfig parse_run_config(const nlohmann::json& j);

Configuration configuration_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Configuration& config);

PicardManinClass class_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PicardManinClass& c);

Characteristic characteristic_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Characteristic& f);

/// Header row of N labels followed by N rows of N rationals.
FiniteMetric parse_metric_csv(std::istream& in);
void write_metric_csv(std::ostream& out, const FiniteMetric& metric);

/// Configuration covering the points of `config` (or a generic one) plus any
/// of `points` it lacks, added as generic proper points.
Configuration with_generic_points(const std::optional<Configuration>& config,
                                  const std::vector<PointId>& points);

}  // namespace cremona::io
