// Command-line front end: configuration, dispatch and reports.
#ifndef DAHA_CLI_DISPATCH_HPP
#define DAHA_CLI_DISPATCH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace daha::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "daha-report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int n = 2;
  int N = 0;  // 0: same as n
  std::string regime = "GL";
  std::string weight;
  std::string target = "self";
  std::string word;
  std::string module = "Y";  // Y | trivial | sign
  std::vector<std::string> rescale;
  int simple = 0;
  int bound = 2;
  int pi_power = 0;
  bool dense = false;
  std::string json_path;
  unsigned jobs = 0;

  nlohmann::json to_json() const;
};

struct CheckRecord {
  std::string name;
  std::string status;  // PASS | FAIL | SKIP
  std::string detail;
  std::optional<double> wall_ms;
};

struct Report {
  RunConfig config;
  nlohmann::json params = nlohmann::json::object();
  std::string weight;
  std::optional<long long> dimension;
  std::string identification;
  std::vector<std::string> witnesses;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::pair<std::string, double>> stages;  // wall time per stage
  double total_ms = 0;
  std::string headline;                                // printed alone by nf

  void check(const std::string& name, bool ok, const std::string& detail = "", std::optional<double> ms = std::nullopt);
  void skip(const std::string& name, const std::string& reason);
  void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
  std::string status() const;
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

Report dispatch(const RunConfig& cfg);

// merges a JSON config file into argv-style arguments; command-line flags win
std::vector<std::string> expand_config(const std::vector<std::string>& args);

int run(int argc, char** argv);

}  // namespace daha::cli

#endif
