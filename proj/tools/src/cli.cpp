#include "personick_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "personick/fisher_bounds.hpp"
#include "personick/personick_solver.hpp"
#include "personick/pnr_measurement.hpp"
#include "personick/priors.hpp"
#include "personick/search_harness.hpp"
#include "personick/sweep_io.hpp"

namespace personick::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(std::string_view text, std::string_view context) {
  std::string t = trim(text);
  if (t.size() > 1 && t[0] == '+') t.erase(0, 1);  // from_chars rejects a leading '+'

  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw ConfigError(std::string(context) + ": cannot parse number '" + t + "'");
  }
  return value;
}

int to_int(std::string_view text, std::string_view context) {
  const std::string t = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(std::string(context) + ": cannot parse integer '" + t + "'");
  }
  return value;
}

// "0.5", "-1e-3", "0.3+0.4j", "0.3-0.4i", "2j"
Complex to_complex(std::string_view text, std::string_view context) {
  std::string t = trim(text);
  if (t.empty()) throw ConfigError(std::string(context) + ": empty amplitude");
  const char last = t.back();
  if (last != 'j' && last != 'i') return {to_double(t, context), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    const double im = (t.empty() || t == "+") ? 1.0 : (t == "-" ? -1.0 : to_double(t, context));
    return {0.0, im};
  }
  const std::string re_part = t.substr(0, split);
  const std::string im_part = t.substr(split);
  const double im = im_part == "+" ? 1.0 : (im_part == "-" ? -1.0 : to_double(im_part, context));
  return {to_double(re_part, context), im};
}

void check_photons(int n, std::string_view what) {
  if (n < 0 || n > kMaxPhotons) {
    throw ConfigError(std::string(what) + " must lie in [0, " + std::to_string(kMaxPhotons) + "]");
  }
}

PriorPdf parse_prior(const std::string& spec) {
  if (spec.empty()) throw ConfigError("--prior is required");
  try {
    return PriorPdf::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string join(const RVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_real(v[i]);
  }
  return s;
}

std::string show(const MaybeDivergent& x) {
  return x.is_divergent() ? "divergent" : format_real(x.value());
}

nlohmann::json to_json(const MaybeDivergent& x) {
  return x.is_divergent() ? nlohmann::json("divergent") : nlohmann::json(round_to_output(x.value()));
}

// Opens config.out when given, else uses `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

NumericPolicy policy_for(const RunConfig& config) {
  if (config.order < 1) throw ConfigError("--order must be >= 1");
  if (config.max_order < config.order) throw ConfigError("--max-order must be >= --order");
  NumericPolicy policy;
  policy.quadrature_order = config.order;
  policy.quadrature_max_order = config.max_order;
  return policy;
}

int run_mmse(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PriorPdf prior = parse_prior(config.prior);
  const PureState state = parse_state(config.state, config.cutoff);
  const MmseReport r = mmse(state, prior, policy_for(config));
  Sink sink(config.out, out);
  std::ostream& os = sink.get();
  const bool bound_only = config.command == Command::kBound;
  if (config.format == "json") {
    nlohmann::json doc;
    doc["schema"] = "v1";
    doc["prior"] = prior.describe();
    doc["delta_lb"] = round_to_output(r.delta_lb);
    if (!bound_only) {
      doc["delta"] = round_to_output(r.delta);
      doc["tr_gamma2"] = round_to_output(r.tr_gamma2);
      doc["b_eigenvalues"] = nlohmann::json::array();
      for (Eigen::Index i = 0; i < r.b_eigenvalues.size(); ++i) {
        doc["b_eigenvalues"].push_back(round_to_output(r.b_eigenvalues[i]));
      }
    }
    doc["commutator_g01"] = round_to_output(r.commutator_g01);
    doc["quadrature_order"] = r.quadrature_order;
    doc["ill_posed"] = r.ill_posed;
    os << doc.dump(2) << '\n';
  } else {
    if (!bound_only) os << "delta = " << format_real(r.delta) << '\n';
    os << "delta_lb = " << format_real(r.delta_lb) << '\n';
    if (!bound_only) {
      os << "tr_gamma2 = " << format_real(r.tr_gamma2) << '\n';
      os << "b_eigenvalues = " << join(r.b_eigenvalues) << '\n';
    }
    os << "commutator_g01 = " << format_real(r.commutator_g01) << '\n';
    os << "quadrature_order = " << r.quadrature_order << '\n';
  }
  if (r.ill_posed) {
    err << "error: Gamma1 has weight " << format_real(r.ill_posed_weight)
        << " outside the support of Gamma0\n";
    return kExitIllPosed;
  }
  if (!r.quadrature_converged) {
    err << "error: quadrature did not converge by order " << r.quadrature_order << '\n';
    return kExitIllPosed;
  }
  return kExitOk;
}

int run_pnr(const RunConfig& config, std::ostream& out) {
  const PriorPdf prior = parse_prior(config.prior);
  const PureState state = parse_state(config.state, config.cutoff);
  const NumericPolicy policy = policy_for(config);
  const double value = pnr_mse(state, prior, policy);
  const ConditionalMean cm = conditional_means(state, prior, policy);
  Sink sink(config.out, out);
  std::ostream& os = sink.get();
  if (config.format == "json") {
    nlohmann::json doc;
    doc["schema"] = "v1";
    doc["prior"] = prior.describe();
    doc["pnr_mse"] = round_to_output(value);
    doc["conditional_means"] = nlohmann::json::array();
    for (double pi : cm.pi) doc["conditional_means"].push_back(round_to_output(pi));
    os << doc.dump(2) << '\n';
  } else {
    os << "pnr_mse = " << format_real(value) << '\n';
    RVector pi = Eigen::Map<const RVector>(cm.pi.data(), static_cast<Eigen::Index>(cm.pi.size()));
    os << "conditional_means = " << join(pi) << '\n';
  }
  return kExitOk;
}

int run_fisher(const RunConfig& config, std::ostream& out) {
  const PriorPdf prior = parse_prior(config.prior);
  check_photons(config.n, "--n");
  const BoundsReport r = fisher_report(config.n, prior);
  const std::pair<const char*, const MaybeDivergent*> fields[] = {
      {"je_inv", &r.je_inv}, {"jd", &r.jd},         {"jp", &r.jp},
      {"jb", &r.jb},         {"jd_inv", &r.jd_inv}, {"jb_inv", &r.jb_inv}};
  Sink sink(config.out, out);
  std::ostream& os = sink.get();
  if (config.field != "all") {
    for (const auto& [name, value] : fields) {
      if (config.field == name) {
        os << show(*value) << '\n';
        return kExitOk;
      }
    }
    throw ConfigError("unknown --field '" + config.field + "'");
  }
  if (config.format == "json") {
    nlohmann::json doc;
    doc["schema"] = "v1";
    doc["prior"] = prior.describe();
    doc["n"] = config.n;
    for (const auto& [name, value] : fields) doc[name] = to_json(*value);
    os << doc.dump(2) << '\n';
  } else {
    for (const auto& [name, value] : fields) os << name << " = " << show(*value) << '\n';
  }
  return kExitOk;
}

void report_conjecture(const std::string& label, const SweepResult& result, std::ostream& err) {
  const ConjectureReport report = conjecture_check(result);
  err << label << ": " << report.samples_checked << " samples, " << report.violators.size()
      << " below the in-between curve by more than 1e-9";
  if (!report.fock_mismatches.empty()) err << ", " << report.fock_mismatches.size() << " fock mismatches";
  err << '\n';
  for (const Violation& v : report.violators) {
    err << "  nbar=" << format_real(v.nbar) << " seed=" << v.seed << " index=" << v.index
        << " mse=" << format_real(v.mse) << " inbetween=" << format_real(v.inbetween) << '\n';
  }
  for (const std::string& w : report.warnings) err << "  warning: " << w << '\n';
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PriorPdf prior = parse_prior(config.prior);
  const GridSpec g = parse_grid(config.grid);
  SweepOptions options;
  options.cutoff = config.cutoff.value_or(4);
  options.count = config.count;
  options.seed = config.seed;
  options.threads = thread_budget(config.threads);
  options.policy = policy_for(config);
  check_photons(options.cutoff, "--cutoff");
  if (options.count < 1) throw ConfigError("--count must be >= 1");
  std::vector<double> grid;
  try {
    grid = make_grid(g.start, g.stop, g.step);
    for (double x : grid) {
      if (x < 0.0 || x > options.cutoff) throw std::invalid_argument("grid values must lie in [0, cutoff]");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const SweepResult result = sweep(prior, grid, options);
  Sink sink(config.out, out);
  if (config.format == "json") {
    write_sweep_json(result, sink.get());
  } else {
    write_sweep_csv(result, sink.get());
  }
  report_conjecture("sweep " + result.prior, result, err);
  return kExitOk;
}

}  // namespace

PureState parse_state(std::string_view spec, std::optional<int> cutoff) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("state spec '" + std::string(spec) + "' must look like kind:params");
  }
  const std::string kind = trim(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  const std::string context = "state spec '" + std::string(spec) + "'";
  if (cutoff) check_photons(*cutoff, "--cutoff");

  std::optional<PureState> state;
  try {
    if (kind == "fock") {
      const int n = to_int(rest, context);
      check_photons(n, "fock photon number");
      state = FockState{n}.embed();
    } else if (kind == "inbetween") {
      const double nbar = to_double(rest, context);
      if (nbar < 0.0 || nbar > kMaxPhotons) throw ConfigError(context + ": nbar out of range");
      state = InBetweenState(nbar).embed();
    } else if (kind == "amps") {
      std::vector<Complex> amps;
      std::size_t start = 0;
      while (true) {
        const auto comma = rest.find(',', start);
        amps.push_back(to_complex(rest.substr(start, comma - start), context));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (static_cast<int>(amps.size()) > kMaxPhotons + 1) throw ConfigError(context + ": too many amplitudes");
      CVector v(static_cast<Eigen::Index>(amps.size()));
      for (std::size_t i = 0; i < amps.size(); ++i) v[static_cast<Eigen::Index>(i)] = amps[i];
      state = PureState::normalized(std::move(v));
    } else {
      throw ConfigError(context + ": unknown state kind '" + kind + "'");
    }
    if (cutoff) return state->padded(*cutoff);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(context + ": " + e.what());
  }
  return *state;
}

GridSpec parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ConfigError("grid spec '" + std::string(spec) + "' must look like start:stop:step");
  }
  const std::string context = "grid spec '" + std::string(spec) + "'";
  GridSpec g{to_double(spec.substr(0, first), context),
             to_double(spec.substr(first + 1, second - first - 1), context),
             to_double(spec.substr(second + 1), context)};
  if (!(g.step > 0.0) || g.stop < g.start) throw ConfigError(context + ": need step > 0 and stop >= start");
  return g;
}

unsigned thread_budget(unsigned requested) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PERSONICK_THREADS"); env != nullptr && *env != '\0') {
    const int cap = to_int(env, "PERSONICK_THREADS");
    if (cap < 1) throw ConfigError("PERSONICK_THREADS must be >= 1");
    threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kMmse:
      case Command::kBound:
        return run_mmse(config, out, err);
      case Command::kPnr:
        return run_pnr(config, out);
      case Command::kFisher:
        return run_fisher(config, out);
      case Command::kSweep:
        return run_sweep(config, out, err);
      case Command::kFigures: {
        if (config.out.empty()) throw ConfigError("figures: --out directory is required");
        const auto files = write_figures(config.out, config.seed, config.count,
                                         config.cutoff.value_or(4), thread_budget(config.threads), err);
        for (const std::string& f : files) out << f << '\n';
        return kExitOk;
      }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayesian MMSE toolkit for pure-loss transmissivity sensing"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<int> cutoff;

  const auto add_prior = [&](CLI::App* sub) {
    sub->add_option("--prior", config.prior,
                    "twopoint:q,t0,t1 | beta:a,b | delta:t0 | file:<csv of node,weight>")
        ->required();
  };
  const auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", config.state, "fock:n | inbetween:nbar | amps:<csv>")->required();
    sub->add_option("--cutoff", cutoff, "Fock cutoff N (pads the state)");
  };
  const auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--order", config.order, "starting quadrature order for beta priors")
        ->capture_default_str();
    sub->add_option("--max-order", config.max_order, "give up doubling beyond this order (exit 3)")
        ->capture_default_str();
    sub->add_option("--out", config.out, "output file (default: stdout)");
    config.format = formats.front();
    sub->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };

  CLI::App* mmse_cmd = app.add_subcommand("mmse", "MMSE, lower bound and optimal measurement");
  add_prior(mmse_cmd);
  add_state(mmse_cmd);
  add_common(mmse_cmd, {"text", "json"});

  CLI::App* bound_cmd = app.add_subcommand("bound", "trace-inequality lower bound on the MMSE");
  add_prior(bound_cmd);
  add_state(bound_cmd);
  add_common(bound_cmd, {"text", "json"});

  CLI::App* pnr_cmd = app.add_subcommand("pnr", "MSE of photon counting with the conditional-mean estimator");
  add_prior(pnr_cmd);
  add_state(pnr_cmd);
  add_common(pnr_cmd, {"text", "json"});

  CLI::App* fisher_cmd = app.add_subcommand("fisher", "Fisher-information based Bayesian quantities for |n>");
  add_prior(fisher_cmd);
  fisher_cmd->add_option("--n", config.n, "photon number of the Fock probe")->capture_default_str();
  fisher_cmd->add_option("--field", config.field, "single field to print")
      ->check(CLI::IsMember({"all", "je_inv", "jd", "jp", "jb", "jd_inv", "jb_inv"}))
      ->capture_default_str();
  add_common(fisher_cmd, {"text", "json"});

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "MSE of in-between and random states over a grid of nbar");
  add_prior(sweep_cmd);
  sweep_cmd->add_option("--grid", config.grid, "start:stop:step")->capture_default_str();
  sweep_cmd->add_option("--cutoff", cutoff, "Fock cutoff N (default 4)");
  sweep_cmd->add_option("--count", config.count, "random states per grid point")->capture_default_str();
  sweep_cmd->add_option("--seed", config.seed, "base seed")->capture_default_str();
  sweep_cmd->add_option("--threads", config.threads, "worker threads (0: all, capped by PERSONICK_THREADS)")
      ->capture_default_str();
  add_common(sweep_cmd, {"csv", "json"});

  CLI::App* figures_cmd = app.add_subcommand("figures", "regenerate every figure dataset into a directory");
  figures_cmd->add_option("--out", config.out, "output directory")->required();
  figures_cmd->add_option("--seed", config.seed, "base seed")->capture_default_str();
  figures_cmd->add_option("--count", config.count, "random states per grid point")->capture_default_str();
  figures_cmd->add_option("--cutoff", cutoff, "Fock cutoff N for the sweeps (default 4)");
  figures_cmd->add_option("--threads", config.threads, "worker threads (0: all, capped by PERSONICK_THREADS)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kExitConfig;
  }

  config.cutoff = cutoff;
  if (mmse_cmd->parsed()) config.command = Command::kMmse;
  if (bound_cmd->parsed()) config.command = Command::kBound;
  if (pnr_cmd->parsed()) config.command = Command::kPnr;
  if (fisher_cmd->parsed()) config.command = Command::kFisher;
  if (sweep_cmd->parsed()) config.command = Command::kSweep;
  if (figures_cmd->parsed()) config.command = Command::kFigures;
  return run(config, out, err);
}

}  // namespace personick::cli
