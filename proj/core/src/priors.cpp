#include "personick/priors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace personick {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view text, const std::string& context) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw std::invalid_argument(context + ": cannot parse number '" + t + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, const std::string& context) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

PriorPdf read_prior_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("prior file not readable: " + path);
  std::vector<double> nodes;
  std::vector<double> weights;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (lineno == 1 && t.find_first_of("0123456789") != 0 && t.front() != '.' &&
        t.front() != '-' && t.front() != '+') {
      continue;  // header row
    }
    const auto fields = parse_list(t, path + ":" + std::to_string(lineno));
    require(fields.size() == 2, path + ":" + std::to_string(lineno) + ": expected node,weight");
    nodes.push_back(fields[0]);
    weights.push_back(fields[1]);
  }
  require(!nodes.empty(), "prior file has no rows: " + path);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  require(std::abs(total - 1.0) <= 1e-6,
          "prior file weights sum to " + fmt(total) + ", expected 1: " + path);
  for (double& w : weights) w /= total;
  return PriorPdf::numeric(std::move(nodes), std::move(weights));
}

}  // namespace

PriorPdf PriorPdf::delta(double tau0) {
  require(in_unit(tau0), "delta prior: tau0 must lie in [0, 1]");
  return PriorPdf(DeltaPrior{tau0});
}

PriorPdf PriorPdf::two_point(double q, double tau0, double tau1) {
  require(in_unit(q), "two-point prior: q must lie in [0, 1]");
  require(in_unit(tau0) && in_unit(tau1), "two-point prior: tau0, tau1 must lie in [0, 1]");
  if (q == 1.0 || tau0 == tau1) return delta(tau0);
  if (q == 0.0) return delta(tau1);
  return PriorPdf(TwoPointPrior{q, tau0, tau1});
}

PriorPdf PriorPdf::beta(double alpha, double beta) {
  require(alpha > 0.0 && beta > 0.0 && std::isfinite(alpha) && std::isfinite(beta),
          "beta prior: alpha and beta must be positive");
  return PriorPdf(BetaPrior{alpha, beta});
}

PriorPdf PriorPdf::numeric(std::vector<double> nodes, std::vector<double> weights) {
  require(!nodes.empty() && nodes.size() == weights.size(),
          "numeric prior: nodes and weights must be non-empty and of equal length");
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(in_unit(nodes[i]), "numeric prior: nodes must lie in [0, 1]");
    require(weights[i] >= 0.0 && std::isfinite(weights[i]),
            "numeric prior: weights must be non-negative");
    total += weights[i];
  }
  require(std::abs(total - 1.0) <= 1e-12, "numeric prior: weights must sum to 1");
  return PriorPdf(NumericPrior{std::move(nodes), std::move(weights)});
}

PriorPdf PriorPdf::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos,
          "prior spec '" + std::string(spec) + "' must look like kind:params");
  const std::string kind = trim(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  const std::string context = "prior spec '" + std::string(spec) + "'";
  if (kind == "file") return read_prior_file(trim(rest));
  const auto args = parse_list(rest, context);
  if (kind == "delta") {
    require(args.size() == 1, context + ": delta takes t0");
    return delta(args[0]);
  }
  if (kind == "twopoint") {
    require(args.size() == 3, context + ": twopoint takes q,t0,t1");
    return two_point(args[0], args[1], args[2]);
  }
  if (kind == "beta") {
    require(args.size() == 2, context + ": beta takes a,b");
    return beta(args[0], args[1]);
  }
  throw std::invalid_argument(context + ": unknown prior kind '" + kind + "'");
}

std::string PriorPdf::describe() const {
  struct Visitor {
    std::string operator()(const DeltaPrior& d) const { return "delta:" + fmt(d.tau0); }
    std::string operator()(const TwoPointPrior& t) const {
      return "twopoint:" + fmt(t.q) + "," + fmt(t.tau0) + "," + fmt(t.tau1);
    }
    std::string operator()(const BetaPrior& b) const {
      return "beta:" + fmt(b.alpha) + "," + fmt(b.beta);
    }
    std::string operator()(const NumericPrior& n) const {
      return "numeric:" + std::to_string(n.nodes.size()) + "-nodes";
    }
  };
  return std::visit(Visitor{}, v_);
}

double log_beta_fn(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double moment(const PriorPdf& p, int k) {
  require(k >= 0, "moment: k must be >= 0");
  struct Visitor {
    int k;
    double operator()(const DeltaPrior& d) const { return std::pow(d.tau0, k); }
    double operator()(const TwoPointPrior& t) const {
      return t.q * std::pow(t.tau0, k) + (1.0 - t.q) * std::pow(t.tau1, k);
    }
    double operator()(const BetaPrior& b) const {
      return std::exp(log_beta_fn(b.alpha + k, b.beta) - log_beta_fn(b.alpha, b.beta));
    }
    double operator()(const NumericPrior& n) const {
      double total = 0.0;
      for (std::size_t i = 0; i < n.nodes.size(); ++i) total += n.weights[i] * std::pow(n.nodes[i], k);
      return total;
    }
  };
  return std::visit(Visitor{k}, p.variant());
}

double mean(const PriorPdf& p) { return moment(p, 1); }

double variance(const PriorPdf& p) {
  if (const auto* t = p.as<TwoPointPrior>()) {
    const double d = t->tau0 - t->tau1;
    return t->q * (1.0 - t->q) * d * d;
  }
  if (const auto* b = p.as<BetaPrior>()) {
    const double s = b->alpha + b->beta;
    return b->alpha * b->beta / (s * s * (s + 1.0));
  }
  if (p.is_delta()) return 0.0;
  const double m = moment(p, 1);
  return std::max(moment(p, 2) - m * m, 0.0);
}

bool is_discrete(const PriorPdf& p) { return !p.as<BetaPrior>(); }

namespace {

QuadratureRule point_masses(const PriorPdf& p, int order) {
  QuadratureRule rule;
  rule.order = order;
  if (const auto* d = p.as<DeltaPrior>()) {
    rule.nodes = {d->tau0};
    rule.weights = {1.0};
  } else if (const auto* t = p.as<TwoPointPrior>()) {
    rule.nodes = {t->tau0, t->tau1};
    rule.weights = {t->q, 1.0 - t->q};
  } else if (const auto* n = p.as<NumericPrior>()) {
    rule.nodes = n->nodes;
    rule.weights = n->weights;
  }
  return rule;
}

}  // namespace

QuadratureRule make_rule(const PriorPdf& p, int order) {
  const auto* b = p.as<BetaPrior>();
  if (!b) return point_masses(p, order);
  require(order >= 1, "make_rule: order must be >= 1");
  return gauss_jacobi01(order, b->alpha - 1.0, b->beta - 1.0);
}

QuadratureRule make_root_rule(const PriorPdf& p, int order) {
  const auto* b = p.as<BetaPrior>();
  if (!b) return point_masses(p, order);
  require(order >= 1, "make_root_rule: order must be >= 1");
  // tau = s^2: P(tau) dtau = 2 s^{2 alpha - 1} (1-s)^{beta-1} (1+s)^{beta-1} ds / B(alpha, beta)
  QuadratureRule s_rule = gauss_jacobi01(order, 2.0 * b->alpha - 1.0, b->beta - 1.0);
  const double scale =
      2.0 * std::exp(log_beta_fn(2.0 * b->alpha, b->beta) - log_beta_fn(b->alpha, b->beta));
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(s_rule.size());
  rule.weights.resize(s_rule.size());
  for (std::size_t i = 0; i < s_rule.size(); ++i) {
    const double s = s_rule.nodes[i];
    rule.nodes[i] = s * s;
    rule.weights[i] = scale * s_rule.weights[i] * std::pow(1.0 + s, b->beta - 1.0);
  }
  return rule;
}

double MaybeDivergent::value() const {
  if (divergent_) throw std::logic_error("MaybeDivergent::value on a divergent quantity");
  return value_;
}

MaybeDivergent MaybeDivergent::reciprocal() const {
  if (divergent_) return finite(0.0);
  if (value_ == 0.0) return divergent();
  return finite(1.0 / value_);
}

MaybeDivergent prior_fisher_jp(const PriorPdf& p) {
  const auto* b = p.as<BetaPrior>();
  if (!b || b->alpha <= 2.0 || b->beta <= 2.0) return MaybeDivergent::divergent();
  const double a1 = b->alpha - 1.0;
  const double b1 = b->beta - 1.0;
  // (d ln P)^2 P = [a1 (1-tau) - b1 tau]^2 tau^{alpha-3} (1-tau)^{beta-3} / B(alpha, beta)
  const QuadratureRule rule = gauss_jacobi01(4, b->alpha - 3.0, b->beta - 3.0);
  const double scale = std::exp(log_beta_fn(b->alpha - 2.0, b->beta - 2.0) -
                                log_beta_fn(b->alpha, b->beta));
  const double integral = rule.integrate([&](double tau) {
    const double score = a1 * (1.0 - tau) - b1 * tau;
    return score * score;
  });
  return MaybeDivergent::finite(scale * integral);
}

}  // namespace personick
