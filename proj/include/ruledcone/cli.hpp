#pragma once

#include "ruledcone/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ruledcone {

enum class OutputFormat { Text, Json, Csv, Svg };

struct RunConfig {
  int g = 1;
  int n = 1;
  Rational mu_max{6};
  long cod_max = -1;  // negative: unbounded
  Rational grid_step{1, 8};
  OutputFormat format = OutputFormat::Text;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCounterexample = 3;

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ruledcone
