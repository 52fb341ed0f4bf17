#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace zariski::cli {

using nlohmann::json;

enum class Format { Json, Table };

/// Everything a command reads besides its input files. Defaults are the
/// documented desk-scale bounds.
struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::size_t rows = 3;
  std::size_t max_degree = 3;
  std::uint64_t support = 8;
  std::size_t pool = 0;        // random entries drawn from this many perms (0: fresh)
  std::uint64_t bound_n = 200;
  std::size_t samples = 1000;  // evaluation points per normalized pair
  std::uint64_t m_min = 2;
  std::uint64_t m_max = 5;
  std::string group = "S3";
  bool timing = true;
  Format format = Format::Json;
  std::vector<std::string> inputs;  // JSON files, command specific

  json to_json() const;
};

/// One record per case plus a summary; cases are only ever appended.
class Report {
 public:
  Report(std::string command, const RunConfig& config);

  void add_case(json record, bool passed, std::string line);
  void set_error(std::string type, std::string message);
  void set_wall_time_ms(double ms) { wall_time_ms_ = ms; }

  const std::string& command() const { return command_; }
  std::size_t case_count() const { return cases_.size(); }
  std::size_t passed() const { return passed_; }
  std::size_t failed() const { return cases_.size() - passed_; }
  bool has_error() const { return error_.has_value(); }
  bool all_passed() const { return !has_error() && failed() == 0; }

  json to_json() const;
  std::string render(Format format) const;

 private:
  std::string command_;
  json config_;
  bool timing_;
  std::vector<json> cases_;
  std::vector<std::string> lines_;
  std::size_t passed_ = 0;
  std::optional<std::pair<std::string, std::string>> error_;
  double wall_time_ms_ = 0;
};

Report cmd_normalize(const RunConfig& config);
Report cmd_witness(const RunConfig& config);
Report cmd_intersect(const RunConfig& config);
Report cmd_separate(const RunConfig& config);
Report cmd_symcheck(const RunConfig& config);
Report cmd_finite_check(const RunConfig& config);

/// Runs a command by name, timing it and turning library errors into an
/// error report. Throws std::invalid_argument for an unknown name.
Report run_command(const std::string& name, const RunConfig& config);

std::vector<std::string> command_names();

/// 0 when every case passed, 1 when some failed, 2 for input errors.
int exit_code(const Report& report);

}  // namespace zariski::cli
