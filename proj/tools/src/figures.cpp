#include <filesystem>
#include <fstream>
#include <ostream>

#include "personick/fisher_bounds.hpp"
#include "personick/fock_closed_forms.hpp"
#include "personick/priors.hpp"
#include "personick/search_harness.hpp"
#include "personick/sweep_io.hpp"
#include "personick_cli/cli.hpp"

namespace personick::cli {

namespace {

struct SweepFigure {
  const char* file;
  PriorPdf prior;
};

std::string cell(const MaybeDivergent& x) {
  return x.is_divergent() ? "divergent" : format_real(x.value());
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string());
  return out;
}

// n, mmse and the Fisher-type quantities of |n> for n = 1..10.
void write_bounds_table(const std::filesystem::path& path, const PriorPdf& prior) {
  std::ofstream out = open_for_write(path);
  out << "n,mmse,je_inv,jd_inv,jb,jb_inv\n";
  for (int n = 1; n <= 10; ++n) {
    const BoundsReport r = fisher_report(n, prior);
    out << n << ',' << format_real(fock_mmse_generic(n, prior)) << ',' << cell(r.je_inv) << ','
        << cell(r.jd_inv) << ',' << cell(r.jb) << ',' << cell(r.jb_inv) << '\n';
  }
}

}  // namespace

std::vector<std::string> write_figures(const std::string& dir, std::uint64_t seed, int count,
                                       int cutoff, unsigned threads, std::ostream& log) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir + ": " + ec.message());
  if (count < 1) throw ConfigError("--count must be >= 1");
  if (cutoff < 1 || cutoff > kMaxPhotons) throw ConfigError("--cutoff out of range");

  const SweepFigure sweeps[] = {
      {"fig1a.csv", PriorPdf::two_point(0.541, 0.706, 0.279)},
      {"fig1b.csv", PriorPdf::two_point(0.377, 0.416, 0.139)},
      {"fig2a.csv", PriorPdf::beta(1.0, 1.0)},
      {"fig2b.csv", PriorPdf::beta(2.0, 4.0)},
  };
  SweepOptions options;
  options.cutoff = cutoff;
  options.count = count;
  options.seed = seed;
  options.threads = threads;
  const std::vector<double> grid = make_grid(0.0, cutoff, 0.1);

  std::vector<std::string> written;
  for (const SweepFigure& fig : sweeps) {
    const SweepResult result = sweep(fig.prior, grid, options);
    std::ofstream out = open_for_write(fs::path(dir) / fig.file);
    write_sweep_csv(result, out);
    const ConjectureReport report = conjecture_check(result);
    log << fig.file << ": " << report.samples_checked << " samples, " << report.violators.size()
        << " violators\n";
    written.emplace_back(fig.file);
  }

  write_bounds_table(fs::path(dir) / "fig3.csv", PriorPdf::two_point(0.79, 0.127, 0.641));
  written.emplace_back("fig3.csv");
  write_bounds_table(fs::path(dir) / "fig4.csv", PriorPdf::beta(2.33, 3.84));
  written.emplace_back("fig4.csv");
  return written;
}

}  // namespace personick::cli
