#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "personick/fock_core.hpp"
#include "personick/numeric_policy.hpp"
#include "personick/priors.hpp"

namespace personick {

struct StateSample {
  PureState state;
  double nbar = 0.0;
  /// Seed of the Markov chain that produced the sample.
  std::uint64_t seed = 0;
  /// Position of the sample within its chain.
  int index = 0;
  /// Filled in by sweep().
  double mse = 0.0;
};

/// Draws `count` states with support in |0>..|N> and mean photon number nbar.
/// Weights p_n = |d_n|^2 are uniform on {p >= 0, sum p = 1, sum n p = nbar}
/// (hit-and-run, 100 burn-in steps, thinning 10); phases are independent and
/// uniform on [0, 2 pi). Deterministic in `seed`.
std::vector<StateSample> sample_states(double nbar, int cutoff, int count, std::uint64_t seed);

/// Weight vectors only, from the same chain as sample_states.
std::vector<RVector> sample_weights(double nbar, int cutoff, int count, std::uint64_t seed);

/// Seed of the chain used for grid point `index` of a sweep with base `seed`.
std::uint64_t chain_seed(std::uint64_t seed, std::size_t index);

/// start, start+step, ..., stop (inclusive within step/2); values within 1e-9
/// of an integer are snapped to it.
std::vector<double> make_grid(double start, double stop, double step);

struct SweepPoint {
  double nbar = 0.0;
  double inbetween = 0.0;  ///< MMSE of the in-between state
  double pnr = 0.0;        ///< photon-counting MSE of the in-between state
  std::optional<double> fock;  ///< MMSE of |nbar> at integer nbar
  std::uint64_t seed = 0;
  std::vector<StateSample> samples;
};

struct SweepResult {
  std::string prior;
  int cutoff = 0;
  int count = 0;
  std::uint64_t seed = 0;
  std::vector<SweepPoint> points;
};

struct SweepOptions {
  int cutoff = 4;
  int count = 200;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  NumericPolicy policy = kDefaultPolicy;
};

SweepResult sweep(const PriorPdf& prior, const std::vector<double>& nbar_grid,
                  const SweepOptions& options);

struct Violation {
  double nbar = 0.0;
  std::uint64_t seed = 0;
  int index = 0;
  double mse = 0.0;
  double inbetween = 0.0;
};

struct ConjectureReport {
  std::size_t samples_checked = 0;
  std::vector<Violation> violators;
  /// Integer grid points whose in-between value differs from the Fock marker by > 1e-10.
  std::vector<double> fock_mismatches;
  /// Integer grid points where some sample beats the Fock marker by more than the tolerance.
  std::vector<double> fock_not_infimum;
  std::vector<std::string> warnings;

  bool passed() const {
    return violators.empty() && fock_mismatches.empty() && fock_not_infimum.empty();
  }
};

ConjectureReport conjecture_check(const SweepResult& result, double tolerance = 1e-9);

struct PhaseSpread {
  double min_mse = 0.0;
  double max_mse = 0.0;
  double spread() const { return max_mse - min_mse; }
};

/// MMSE range over `draws` independent uniform phase assignments of fixed weights.
PhaseSpread phase_spread(const RVector& weights, const PriorPdf& prior, int draws,
                         std::uint64_t seed, const NumericPolicy& policy = kDefaultPolicy);

}  // namespace personick
