#include "cremona/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cremona/error.hpp"
#include "cremona/halphen.hpp"

namespace cremona::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
  fail(std::string(what) + " must be an integer or a \"num/den\" string");
}

std::int64_t integer_field(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
      return r.get_num().get_si();
    }
  }
  fail(std::string(what) + " must be an integer");
}

PointId point_field(const json& j) {
  if (!j.is_number_integer()) fail("point labels are integers");
  return PointId{j.get<std::int64_t>()};
}

const json& required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<PointId> id_list(const json& j) {
  if (!j.is_array()) fail("incidence sets are arrays of point labels");
  std::vector<PointId> out;
  for (const auto& v : j) out.push_back(point_field(v));
  return out;
}

std::vector<BasePoint> base_list(const json& j) {
  if (!j.is_array()) fail("base loci are arrays of {point, mult}");
  std::vector<BasePoint> out;
  for (const auto& bp : j) {
    out.push_back({point_field(required(bp, "point")),
                   integer_field(required(bp, "mult"), "mult")});
  }
  return out;
}

json base_json(const std::vector<BasePoint>& pts) {
  json out = json::array();
  for (const auto& bp : pts) {
    out.push_back({{"point", bp.point.value}, {"mult", bp.mult}});
  }
  return out;
}

std::string label_of(const json& j, const char* fallback, std::size_t i) {
  if (j.is_object() && j.contains("label")) {
    if (!j.at("label").is_string()) fail("labels are strings");
    return j.at("label").get<std::string>();
  }
  return std::string(fallback) + std::to_string(i);
}

std::vector<Labeled<PicardManinClass>> class_list(const json& j,
                                                  const char* prefix) {
  if (!j.is_array()) fail("class lists are arrays");
  std::vector<Labeled<PicardManinClass>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    const json& body = entry.contains("class") ? entry.at("class") : entry;
    out.push_back({label_of(entry, prefix, i), class_from_json(body)});
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  return s;
}

}  // namespace

Configuration configuration_from_json(const json& j) {
  std::vector<Configuration::Point> points;
  const json& pts = required(j, "points");
  if (!pts.is_array()) fail("'points' must be an array");
  for (const auto& p : pts) {
    Configuration::Point pt{point_field(required(p, "id")), std::nullopt};
    if (p.contains("parent") && !p.at("parent").is_null()) {
      pt.parent = point_field(p.at("parent"));
    }
    points.push_back(pt);
  }
  std::vector<std::vector<PointId>> collinear, conics;
  if (j.contains("collinear")) {
    for (const auto& s : j.at("collinear")) collinear.push_back(id_list(s));
  }
  if (j.contains("conics")) {
    for (const auto& s : j.at("conics")) conics.push_back(id_list(s));
  }
  try {
    return Configuration(std::move(points), std::move(collinear),
                         std::move(conics));
  } catch (const Error& e) {
    fail(e.what());
  }
}

json to_json(const Configuration& config) {
  json points = json::array();
  for (PointId p : config.points()) {
    json entry = {{"id", p.value}};
    if (const auto parent = config.parent(p)) entry["parent"] = parent->value;
    points.push_back(entry);
  }
  auto sets = [](const std::vector<std::set<PointId>>& in) {
    json out = json::array();
    for (const auto& s : in) {
      json ids = json::array();
      for (PointId p : s) ids.push_back(p.value);
      out.push_back(ids);
    }
    return out;
  };
  return {{"points", points},
          {"collinear", sets(config.collinear())},
          {"conics", sets(config.conics())}};
}

PicardManinClass class_from_json(const json& j) {
  const Rational degree = rational_field(required(j, "degree"), "degree");
  std::map<PointId, Rational> mults;
  if (j.contains("mults")) {
    if (!j.at("mults").is_array()) fail("'mults' must be an array");
    for (const auto& m : j.at("mults")) {
      const PointId p = point_field(required(m, "point"));
      if (mults.contains(p)) fail("point listed twice in a class");
      mults[p] = rational_field(required(m, "value"), "value");
    }
  }
  return {degree, std::move(mults)};
}

json to_json(const PicardManinClass& c) {
  json mults = json::array();
  for (const auto& [p, v] : c.mults()) {
    mults.push_back({{"point", p.value}, {"value", format_rational(v)}});
  }
  return {{"degree", format_rational(c.degree())}, {"mults", mults}};
}

Characteristic characteristic_from_json(const json& j) {
  try {
    if (j.contains("tower")) {
      return quadratic_tower(int(integer_field(j.at("tower"), "tower")));
    }
    if (j.contains("twist")) {
      const json& t = j.at("twist");
      if (!t.is_array() || t.size() != 2) fail("'twist' is [n, m]");
      return twist_characteristic(integer_field(t[0], "twist"),
                                  integer_field(t[1], "twist"));
    }
    std::optional<ResolutionMatrix> res;
    if (j.contains("resolution") && !j.at("resolution").is_null()) {
      res.emplace();
      for (const auto& row : j.at("resolution")) {
        if (!row.is_array()) fail("'resolution' rows are arrays");
        auto& out = res->emplace_back();
        for (const auto& v : row) out.push_back(rational_field(v, "resolution"));
      }
    }
    return Characteristic(integer_field(required(j, "degree"), "degree"),
                          base_list(required(j, "base")),
                          j.contains("inverse_base")
                              ? base_list(j.at("inverse_base"))
                              : std::vector<BasePoint>{},
                          std::move(res));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
}

json to_json(const Characteristic& f) {
  json out = {{"degree", f.degree()},
              {"base", base_json(f.base())},
              {"inverse_base", base_json(f.inverse_base())}};
  if (f.resolution()) {
    json rows = json::array();
    for (const auto& row : *f.resolution()) {
      json r = json::array();
      for (const auto& v : row) r.push_back(format_rational(v));
      rows.push_back(r);
    }
    out["resolution"] = rows;
  }
  return out;
}

RunConfig parse_run_config(const json& j) {
  static const std::set<std::string> kKeys = {
      "configuration", "classes", "characteristics", "germ_sets",
      "parameters"};
  if (!j.is_object()) fail("config must be a JSON object");
  for (const auto& item : j.items()) {
    if (!kKeys.contains(item.key())) fail("unknown section '" + item.key() + "'");
  }

  RunConfig out;
  if (j.contains("configuration")) {
    out.configuration = configuration_from_json(j.at("configuration"));
  }
  if (j.contains("classes")) out.classes = class_list(j.at("classes"), "class");
  if (j.contains("characteristics")) {
    const json& list = j.at("characteristics");
    if (!list.is_array()) fail("'characteristics' must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.characteristics.push_back(
          {label_of(list[i], "map", i), characteristic_from_json(list[i])});
    }
  }
  if (j.contains("germ_sets")) {
    const json& list = j.at("germ_sets");
    if (!list.is_array()) fail("'germ_sets' must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      GermSetEntry entry;
      entry.label = label_of(list[i], "germs", i);
      std::vector<Germ> germs;
      for (auto& g : class_list(required(list[i], "germs"), "germ")) {
        germs.push_back({std::move(g.label), std::move(g.value)});
      }
      try {
        entry.germs = GermSet(std::move(germs));
      } catch (const Error& e) {
        fail(e.what());
      }
      if (list[i].contains("probes")) {
        entry.probes = class_list(list[i].at("probes"), "probe");
      }
      out.germ_sets.push_back(std::move(entry));
    }
  }
  if (j.contains("parameters")) {
    const json& p = j.at("parameters");
    auto positive = [&p](const char* key) -> std::optional<int> {
      if (!p.contains(key)) return std::nullopt;
      const std::int64_t v = integer_field(p.at(key), key);
      if (v < 1) fail(std::string(key) + " must be positive");
      return int(v);
    };
    out.k_max = positive("k_max");
    out.n_max = positive("n_max");
  }
  return out;
}

RunConfig parse_run_config(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_run_config(j);
  } catch (const json::exception& e) {
    fail(std::string("bad config: ") + e.what());
  }
}

FiniteMetric parse_metric_csv(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) fail("metric CSV is empty");
  const std::size_t n = split_csv_line(lines[0]).size();
  if (lines.size() != n + 1) {
    fail("metric CSV needs a header and " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<Rational>> d;
  for (std::size_t r = 1; r <= n; ++r) {
    const auto fields = split_csv_line(lines[r]);
    if (fields.size() != n) {
      fail("row " + std::to_string(r) + " has " +
           std::to_string(fields.size()) + " fields, expected " +
           std::to_string(n));
    }
    auto& row = d.emplace_back();
    for (const auto& f : fields) row.push_back(parse_rational(f));
  }
  return FiniteMetric(std::move(d));
}

void write_metric_csv(std::ostream& out, const FiniteMetric& metric) {
  for (std::size_t i = 0; i < metric.size(); ++i) {
    out << (i ? "," : "") << 'v' << i;
  }
  out << '\n';
  for (std::size_t x = 0; x < metric.size(); ++x) {
    for (std::size_t y = 0; y < metric.size(); ++y) {
      out << (y ? "," : "") << format_rational(metric(x, y));
    }
    out << '\n';
  }
}

Configuration with_generic_points(const std::optional<Configuration>& config,
                                  const std::vector<PointId>& points) {
  std::vector<Configuration::Point> pts;
  std::vector<std::vector<PointId>> collinear, conics;
  std::set<PointId> known;
  if (config) {
    for (PointId p : config->points()) {
      pts.push_back({p, config->parent(p)});
      known.insert(p);
    }
    for (const auto& s : config->collinear()) collinear.emplace_back(s.begin(), s.end());
    for (const auto& s : config->conics()) conics.emplace_back(s.begin(), s.end());
  }
  for (PointId p : points) {
    if (known.insert(p).second) pts.push_back({p, std::nullopt});
  }
  return Configuration(std::move(pts), std::move(collinear), std::move(conics));
}

}  // namespace cremona::io
