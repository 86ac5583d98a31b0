#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lk/common.hpp"

namespace lk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconsistent = 3;

struct CliConfig {
  std::string command;  // classify, embed, associate, norm, sv, verify
  std::string action;   // sv: eval|tilde|hat|sup; verify: suite name
  std::vector<std::string> specs;
  double mu = kInf;
  std::string input;
  bool json = false;
  std::string json_report;
  double tol = 1e-8;
  std::optional<std::uint64_t> seed;  // unset picks the suite default
  int samples = 0;  // 0 picks the suite default
  bool star = false;
  bool hat = false;  // sv sup: HatSup instead of TildeSup
  std::vector<double> points;  // sv eval
};

// Parses argv into a config. Returns the exit code to use when parsing
// finished the run (help, usage error), -1 otherwise.
int parse_cli(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out,
              std::ostream& err);
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lk
