#include "cremona/commands.hpp"

#include <ostream>
#include <sstream>

#include "cremona/error.hpp"
#include "cremona/halphen.hpp"
#include "cremona/hypgraph.hpp"
#include "cremona/length.hpp"
#include "cremona/voronoi.hpp"

namespace cremona::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownPoint:
    case ErrorCode::InvalidConfiguration:
    case ErrorCode::IndexOutOfRange:
      return kInputError;
    default:
      return kInvariantFailure;
  }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

std::string join_points(const std::vector<PointId>& pts) {
  std::string out;
  for (PointId p : pts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.value);
  }
  return out;
}

std::string join_mults(const std::vector<BasePoint>& pts) {
  std::string out;
  for (const auto& bp : pts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(bp.point.value) + ':' + std::to_string(bp.mult);
  }
  return out;
}

std::string validation_summary(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    if (!out.empty()) out += ' ';
    out += std::string(to_string(v.kind)) +
           (v.side == Side::Base ? "@base" : "@inverse");
  }
  return out;
}

Configuration configuration_for(const io::RunConfig& run,
                                const std::vector<PointId>& points) {
  if (run.configuration) return *run.configuration;
  return io::with_generic_points(std::nullopt, points);
}

}  // namespace

int halphen_table(int n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 1) {
    err << "error: --nmax must be at least 1\n";
    return kInputError;
  }
  return guarded(err, [&] {
    bool all_match = true;
    out << "n,m,lattice_degree,closed_form_degree,match\n";
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      for (std::int64_t m = -n_max; m <= n_max; ++m) {
        const std::int64_t lattice = twist_degree(n, m);
        const std::int64_t closed = twist_degree_closed_form(n, m);
        all_match = all_match && lattice == closed;
        out << n << ',' << m << ',' << lattice << ',' << closed << ','
            << (lattice == closed ? "true" : "false") << '\n';
      }
    }
    return all_match ? kSuccess : kInvariantFailure;
  });
}

int flat_growth(int k_max, std::ostream& out, std::ostream& err) {
  if (k_max < 1) {
    err << "error: --kmax must be at least 1\n";
    return kInputError;
  }
  return guarded(err, [&] {
    out << "m,n,degree,lower,upper\n";
    for (const auto& row : cremona::flat_growth(k_max)) {
      out << row.m << ',' << row.n << ',' << row.degree << ',' << row.lower
          << ',' << row.upper << '\n';
    }
    const auto failing = flat_certificate(k_max);
    if (failing) {
      out << "FAIL k=" << *failing << '\n';
      return kInvariantFailure;
    }
    out << "PASS\n";
    return kSuccess;
  });
}

int delta(std::istream& metric_csv, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FiniteMetric metric = io::parse_metric_csv(metric_csv);
    const Rational d = four_point_delta(metric);
    out << "size,delta,delta_real\n"
        << metric.size() << ',' << format_rational(d) << ','
        << format_real(d.get_d()) << '\n';
    return kSuccess;
  });
}

int length(std::istream& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::RunConfig run = io::parse_run_config(config);
    int code = kSuccess;
    std::ostringstream steps;
    steps << "label,step,jonquieres_degree,center,small_points,degree\n";
    out << "label,degree,base_points,md,lower_md,lower_deg,upper_greedy,"
           "status\n";
    for (const auto& [label, f] : run.characteristics) {
      const ValidationReport report = validate(f);
      if (!report.ok()) {
        out << label << ',' << f.degree() << ',' << f.base().size()
            << ",,,,," << "invalid: " << validation_summary(report) << '\n';
        code = kInvariantFailure;
        continue;
      }
      const LengthBounds bounds = greedy_length(f);
      out << label << ',' << f.degree() << ',' << f.base().size() << ','
          << md(f) << ',' << bounds.lower_md << ','
          << (bounds.lower_deg ? std::to_string(*bounds.lower_deg) : "")
          << ',' << bounds.upper_greedy << ','
          << (bounds.lower() == bounds.upper_greedy ? "exact" : "bounds")
          << '\n';
      for (std::size_t i = 0; i < bounds.decomposition.size(); ++i) {
        const auto& step = bounds.decomposition[i];
        const auto& base = step.jonquieres.base_points();
        steps << label << ',' << i + 1 << ',' << step.jonquieres.degree()
              << ',' << base.front().value << ','
              << join_points({base.begin() + 1, base.end()}) << ','
              << step.degree << '\n';
      }
    }
    out << '\n' << steps.str();
    return code;
  });
}

int classify(std::istream& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::RunConfig run = io::parse_run_config(config);
    std::vector<PointId> points;
    for (const auto& entry : run.characteristics) {
      for (PointId p : entry.value.base_points()) points.push_back(p);
    }
    const Configuration cfg = configuration_for(run, points);
    for (const auto& entry : run.characteristics) {
      cfg.require(entry.value.base_points());
    }
    int code = kSuccess;
    out << "label,degree,base,class\n";
    for (const auto& [label, f] : run.characteristics) {
      out << label << ',' << f.degree() << ',' << join_mults(f.base()) << ',';
      const ValidationReport report = validate(f);
      if (!report.ok()) {
        out << "invalid: " << validation_summary(report) << '\n';
        code = kInvariantFailure;
        continue;
      }
      out << to_string(classify_germ(f, cfg)) << '\n';
    }
    return code;
  });
}

int in_e(std::istream& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::RunConfig run = io::parse_run_config(config);
    std::vector<PointId> points;
    for (const auto& entry : run.classes) {
      for (PointId p : entry.value.support()) points.push_back(p);
    }
    const Configuration cfg = configuration_for(run, points);
    for (const auto& entry : run.classes) cfg.require(entry.value.support());
    int code = kSuccess;
    out << "label,self_intersection,nonneg_mults,anticanonical,excesses,"
           "bezout,in_e,witness\n";
    auto flag = [](bool ok) { return ok ? "pass" : "fail"; };
    for (const auto& [label, c] : run.classes) {
      const ECheckReport r = cremona::in_e(c, cfg);
      std::string witness;
      auto add = [&witness](const std::string& w) {
        if (!witness.empty()) witness += ' ';
        witness += w;
      };
      if (r.nonneg_mults.witness) {
        add("mult<0@" + std::to_string(r.nonneg_mults.witness->value));
      }
      if (!r.anticanonical) {
        add("3n-sum=" + format_rational(r.anticanonical_value));
      }
      if (r.excesses.witness) {
        add("excess<0@" + std::to_string(r.excesses.witness->value));
      }
      if (r.bezout.witness) {
        add("curve" + std::to_string(r.bezout.witness->degree) + "[" +
            join_points(r.bezout.witness->points) + "]");
      }
      out << label << ',' << format_rational(c.self_intersection()) << ','
          << flag(r.nonneg_mults.ok) << ',' << flag(r.anticanonical) << ','
          << flag(r.excesses.ok) << ',' << flag(r.bezout.ok) << ','
          << (r.in_e() ? "true" : "false") << ',' << witness << '\n';
      if (!r.in_e()) code = kInvariantFailure;
    }
    return code;
  });
}

int cells(std::istream& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::RunConfig run = io::parse_run_config(config);
    out << "germ_set,probe,cells\n";
    for (const auto& entry : run.germ_sets) {
      for (const auto& [label, c] : entry.probes) {
        std::string names;
        for (std::size_t i : cells_containing(c, entry.germs)) {
          if (!names.empty()) names += ' ';
          names += entry.germs[i].label;
        }
        out << entry.label << ',' << label << ',' << names << '\n';
      }
    }
    return kSuccess;
  });
}

}  // namespace cremona::cli
