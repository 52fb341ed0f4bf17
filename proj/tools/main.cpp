#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace zariski::cli;

  CLI::App app{"zariski: seeded experiments on Zariski-type topologies"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  bool no_timing = false;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"table", Format::Table}};

  const std::map<std::string, std::string> about{
      {"normalize", "normalize matrix pairs and sample membership agreement"},
      {"witness", "build and verify a witness for one pair, or the intersection of two"},
      {"intersect", "witnesses for intersections of two pairs"},
      {"separate", "solution sets of a x^p = 1 on T_m against the finiteness bound"},
      {"symcheck", "transposition commutation sweep and random decompositions"},
      {"finite-check", "set families and closures on a builtin finite group"}};

  for (const std::string& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    sub->add_option("--cases", config.cases, "random cases")->capture_default_str();
    sub->add_option("--rows", config.rows, "maximum rows per matrix")->capture_default_str();
    sub->add_option("--max-degree", config.max_degree, "maximum degree")->capture_default_str();
    sub->add_option("--support", config.support, "random entries permute 0..support-1")
        ->capture_default_str();
    sub->add_option("--pool", config.pool, "draw matrix entries from this many permutations")
        ->capture_default_str();
    sub->add_option("--bound-N", config.bound_n, "search bound for separate")->capture_default_str();
    sub->add_option("--samples", config.samples, "evaluation points per pair")->capture_default_str();
    sub->add_option("--m-min", config.m_min, "smallest m for separate")->capture_default_str();
    sub->add_option("--m-max", config.m_max, "largest m for separate")->capture_default_str();
    sub->add_option("--group", config.group, "builtin group for finite-check")->capture_default_str();
    sub->add_option("--format", config.format, "json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_flag("--no-timing", no_timing, "omit wall time from the report");
    sub->add_flag("--random", "use seeded random inputs (the default without files)");
    sub->add_option("inputs", config.inputs, "JSON input files")->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  config.timing = !no_timing;

  const std::string name = app.get_subcommands().front()->get_name();
  const Report report = run_command(name, config);
  const std::string text = report.render(config.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return exit_code(report);
}
