#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "personick/fock_core.hpp"

namespace personick::cli {

enum class Command { kMmse, kBound, kPnr, kFisher, kSweep, kFigures };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIllPosed = 3;

/// Largest photon number accepted on the command line.
inline constexpr int kMaxPhotons = 170;

struct RunConfig {
  Command command = Command::kMmse;
  std::string prior;
  std::string state;
  std::optional<int> cutoff;
  int order = 200;
  /// Ceiling for the adaptive order doubling; exceeding it is exit 3.
  int max_order = 3200;
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  int n = 1;
  std::string field = "all";
  std::string grid = "0:4:0.1";
  int count = 200;
  /// Worker threads for sweeps; 0 means hardware concurrency capped by PERSONICK_THREADS.
  unsigned threads = 0;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `fock:n`, `inbetween:nbar` or `amps:<csv>`; amplitudes may be real or
/// `re+imj` and are normalized. `cutoff` pads the basis and may not truncate it.
PureState parse_state(std::string_view spec, std::optional<int> cutoff = std::nullopt);

/// Parses `start:stop:step`.
struct GridSpec {
  double start;
  double stop;
  double step;
};
GridSpec parse_grid(std::string_view spec);

/// Thread budget: `requested` if non-zero, else hardware concurrency, capped by
/// the PERSONICK_THREADS environment variable when it is set.
unsigned thread_budget(unsigned requested);

/// Executes a parsed configuration. Results go to `out` (or files named by
/// config.out); diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes the datasets behind the six figures into `dir`; returns the file names.
std::vector<std::string> write_figures(const std::string& dir, std::uint64_t seed, int count,
                                       int cutoff, unsigned threads, std::ostream& log);

}  // namespace personick::cli
