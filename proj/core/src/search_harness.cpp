#include "personick/search_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "personick/personick_solver.hpp"
#include "personick/pnr_measurement.hpp"

namespace personick {

namespace {

constexpr int kBurnIn = 100;
constexpr int kThinning = 10;
constexpr double kIntegerSnap = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool is_integer(double x) { return x == std::round(x); }

/// Hit-and-run walk over {p >= 0, sum p = 1, sum n p = nbar}.
class PolytopeWalk {
 public:
  PolytopeWalk(double nbar, int cutoff, std::uint64_t seed) : rng_(seed) {
    const int dim = cutoff + 1;
    point_ = centroid(nbar, cutoff);
    if (dim >= 3) {
      RMatrix constraints(dim, 2);
      for (int n = 0; n < dim; ++n) {
        constraints(n, 0) = 1.0;
        constraints(n, 1) = n;
      }
      Eigen::HouseholderQR<RMatrix> qr(constraints);
      const RMatrix q = qr.householderQ();
      null_basis_ = q.rightCols(dim - 2);
    }
  }

  const RVector& point() const { return point_; }

  void step() {
    if (null_basis_.cols() == 0) return;
    std::normal_distribution<double> normal;
    RVector g(null_basis_.cols());
    for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = normal(rng_);
    RVector dir = null_basis_ * g;
    dir /= dir.norm();

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < dir.size(); ++i) {
      if (std::abs(dir[i]) < 1e-14) continue;
      const double bound = -std::max(point_[i], 0.0) / dir[i];
      if (dir[i] > 0.0) {
        lo = std::max(lo, bound);
      } else {
        hi = std::min(hi, bound);
      }
    }
    if (!(hi > lo)) return;  // polytope is a single point along this line
    std::uniform_real_distribution<double> uniform(lo, hi);
    point_ += uniform(rng_) * dir;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  // Mean of all vertices: point masses at integer nbar and the two-point
  // laws on (i, j) with i < nbar < j.
  static RVector centroid(double nbar, int cutoff) {
    RVector sum = RVector::Zero(cutoff + 1);
    int vertices = 0;
    for (int i = 0; i <= cutoff; ++i) {
      if (static_cast<double>(i) == nbar) {
        sum[i] += 1.0;
        ++vertices;
      }
      for (int j = i + 1; j <= cutoff; ++j) {
        if (!(i < nbar && nbar < j)) continue;
        sum[i] += (j - nbar) / (j - i);
        sum[j] += (nbar - i) / (j - i);
        ++vertices;
      }
    }
    return sum / vertices;
  }

  std::mt19937_64 rng_;
  RVector point_;
  RMatrix null_basis_;
};

void check_feasible(double nbar, int cutoff, int count) {
  if (cutoff < 0) throw std::invalid_argument("sample_states: cutoff must be >= 0");
  if (count < 1) throw std::invalid_argument("sample_states: count must be >= 1");
  if (!(nbar >= 0.0 && nbar <= cutoff)) {
    throw std::invalid_argument("sample_states: nbar must lie in [0, cutoff]");
  }
}

template <class Emit>
void run_chain(double nbar, int cutoff, int count, std::uint64_t seed, Emit&& emit) {
  check_feasible(nbar, cutoff, count);
  PolytopeWalk walk(nbar, cutoff, seed);
  for (int i = 0; i < kBurnIn; ++i) walk.step();
  for (int s = 0; s < count; ++s) {
    for (int i = 0; i < kThinning; ++i) walk.step();
    emit(walk, s);
  }
}

}  // namespace

std::vector<RVector> sample_weights(double nbar, int cutoff, int count, std::uint64_t seed) {
  std::vector<RVector> out;
  out.reserve(count);
  run_chain(nbar, cutoff, count, seed, [&](PolytopeWalk& walk, int) { out.push_back(walk.point()); });
  return out;
}

std::vector<StateSample> sample_states(double nbar, int cutoff, int count, std::uint64_t seed) {
  std::vector<StateSample> out;
  out.reserve(count);
  run_chain(nbar, cutoff, count, seed, [&](PolytopeWalk& walk, int index) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const RVector& p = walk.point();
    CVector amps(p.size());
    for (Eigen::Index n = 0; n < p.size(); ++n) {
      amps[n] = std::polar(std::sqrt(std::max(p[n], 0.0)), phase(walk.rng()));
    }
    out.push_back(StateSample{PureState::normalized(std::move(amps)), nbar, seed, index, 0.0});
  });
  return out;
}

std::uint64_t chain_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(splitmix64(seed) ^ (0xD1B54A32D192ED03ULL * (index + 1)));
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw std::invalid_argument("make_grid: need step > 0 and stop >= start");
  }
  std::vector<double> grid;
  const auto steps = static_cast<long>(std::floor((stop - start) / step + 0.5));
  for (long i = 0; i <= steps; ++i) {
    double x = start + static_cast<double>(i) * step;
    if (std::abs(x - std::round(x)) < kIntegerSnap) x = std::round(x);
    grid.push_back(x);
  }
  return grid;
}

namespace {

SweepPoint evaluate_point(const PriorPdf& prior, double nbar, std::size_t index,
                          const SweepOptions& options) {
  SweepPoint point;
  point.nbar = nbar;
  point.seed = chain_seed(options.seed, index);
  const PureState inbetween = InBetweenState(nbar).embed(options.cutoff);
  point.inbetween = mmse(inbetween, prior, options.policy).delta;
  point.pnr = pnr_mse(inbetween, prior, options.policy);
  if (is_integer(nbar)) {
    const PureState fock = FockState{static_cast<int>(nbar)}.embed(options.cutoff);
    point.fock = mmse(fock, prior, options.policy).delta;
  }
  point.samples = sample_states(nbar, options.cutoff, options.count, point.seed);
  for (StateSample& s : point.samples) s.mse = mmse(s.state, prior, options.policy).delta;
  return point;
}

}  // namespace

SweepResult sweep(const PriorPdf& prior, const std::vector<double>& nbar_grid,
                  const SweepOptions& options) {
  for (double nbar : nbar_grid) check_feasible(nbar, options.cutoff, options.count);

  SweepResult result;
  result.prior = prior.describe();
  result.cutoff = options.cutoff;
  result.count = options.count;
  result.seed = options.seed;
  result.points.resize(nbar_grid.size());

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(nbar_grid.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < nbar_grid.size() && !failed; i = next++) {
      try {
        result.points[i] = evaluate_point(prior, nbar_grid[i], i, options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

ConjectureReport conjecture_check(const SweepResult& result, double tolerance) {
  ConjectureReport report;
  for (const SweepPoint& point : result.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const StateSample& s : point.samples) {
      ++report.samples_checked;
      best = std::min(best, s.mse);
      if (s.mse < point.inbetween - tolerance) {
        report.violators.push_back(Violation{point.nbar, s.seed, s.index, s.mse, point.inbetween});
      }
    }
    if (point.fock) {
      if (std::abs(*point.fock - point.inbetween) > 1e-10) report.fock_mismatches.push_back(point.nbar);
      if (best < *point.fock - tolerance) report.fock_not_infimum.push_back(point.nbar);
    }
  }
  if (report.samples_checked == 0) report.warnings.emplace_back("no samples to check; trivially passed");
  return report;
}

PhaseSpread phase_spread(const RVector& weights, const PriorPdf& prior, int draws,
                         std::uint64_t seed, const NumericPolicy& policy) {
  if (draws < 1) throw std::invalid_argument("phase_spread: draws must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  PhaseSpread out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int d = 0; d < draws; ++d) {
    CVector amps(weights.size());
    for (Eigen::Index n = 0; n < weights.size(); ++n) {
      amps[n] = std::polar(std::sqrt(std::max(weights[n], 0.0)), phase(rng));
    }
    const double value = mmse(PureState::normalized(std::move(amps)), prior, policy).delta;
    out.min_mse = std::min(out.min_mse, value);
    out.max_mse = std::max(out.max_mse, value);
  }
  return out;
}

}  // namespace personick
