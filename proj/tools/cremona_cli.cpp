#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "cremona/commands.hpp"

namespace {

using FileCommand = std::function<int(std::istream&, std::ostream&,
                                      std::ostream&)>;

int run_to_output(const std::string& out_path,
                  const std::function<int(std::ostream&)>& body) {
  if (out_path.empty()) return body(std::cout);
  std::ostringstream buffer;
  const int code = body(buffer);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return cremona::cli::kInputError;
  }
  out << buffer.str();
  return code;
}

int run_file_command(const std::string& in_path, const std::string& out_path,
                     const FileCommand& command) {
  if (in_path.empty()) {
    std::cerr << "error: an input file is required (--config PATH)\n";
    return cremona::cli::kInputError;
  }
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << in_path << '\n';
    return cremona::cli::kInputError;
  }
  return run_to_output(out_path, [&](std::ostream& out) {
    return command(in, out, std::cerr);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cremona group numerics: lattice, length, Halphen twists, "
               "Voronoi germs and graph hyperbolicity"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  int k_max = 0;
  int n_max = 0;
  int jobs = 0;
  app.add_option("--out", out_path, "Write CSV here instead of stdout");
  app.add_option("--jobs", jobs, "OpenMP thread count")
      ->check(CLI::PositiveNumber);

  auto* halphen = app.add_subcommand("halphen-table",
                                     "Twist degrees, lattice vs closed form");
  halphen->add_option("--nmax", n_max, "Range |n|, |m| <= N")->required();

  auto* flat = app.add_subcommand("flat-growth",
                                  "Ball of the Z^2 flat and its certificate");
  flat->add_option("--kmax", k_max, "Ball radius")->required();

  struct FileSub {
    const char* name;
    const char* help;
    FileCommand command;
  };
  const FileSub file_subs[] = {
      {"delta", "Four-point Gromov delta of a metric CSV",
       cremona::cli::delta},
      {"length", "Length bounds and greedy decomposition",
       cremona::cli::length},
      {"classify", "Voronoi adjacency classification", cremona::cli::classify},
      {"in-e", "Membership in the cone E", cremona::cli::in_e},
      {"cells", "Voronoi cells containing probe classes", cremona::cli::cells},
  };
  std::vector<std::pair<CLI::App*, const FileSub*>> file_apps;
  for (const auto& sub : file_subs) {
    auto* app_sub = app.add_subcommand(sub.name, sub.help);
    app_sub->add_option("--config,input", config_path, "Input file");
    file_apps.emplace_back(app_sub, &sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cremona::cli::kInputError;
  }

  if (jobs > 0) omp_set_num_threads(jobs);

  if (*halphen) {
    return run_to_output(out_path, [&](std::ostream& out) {
      return cremona::cli::halphen_table(n_max, out, std::cerr);
    });
  }
  if (*flat) {
    return run_to_output(out_path, [&](std::ostream& out) {
      return cremona::cli::flat_growth(k_max, out, std::cerr);
    });
  }
  for (const auto& [sub_app, sub] : file_apps) {
    if (*sub_app) return run_file_command(config_path, out_path, sub->command);
  }
  return cremona::cli::kInputError;
}
