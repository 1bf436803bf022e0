#include "personick/sweep_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace personick {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_to_output(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "nbar,kind,mse,seed\n";
  for (const SweepPoint& p : result.points) {
    const std::string nbar = format_real(p.nbar);
    out << nbar << ",inbetween," << format_real(p.inbetween) << ",\n";
    out << nbar << ",pnr," << format_real(p.pnr) << ",\n";
    if (p.fock) out << nbar << ",fock," << format_real(*p.fock) << ",\n";
    for (const StateSample& s : p.samples) {
      out << nbar << ",sample," << format_real(s.mse) << ',' << s.seed << '\n';
    }
  }
}

void write_sweep_json(const SweepResult& result, std::ostream& out) {
  using nlohmann::json;
  json doc;
  doc["schema"] = "v1";
  doc["prior"] = result.prior;
  doc["cutoff"] = result.cutoff;
  doc["count"] = result.count;
  doc["seed"] = result.seed;
  json points = json::array();
  for (const SweepPoint& p : result.points) {
    json jp;
    jp["nbar"] = round_to_output(p.nbar);
    jp["inbetween"] = round_to_output(p.inbetween);
    jp["pnr"] = round_to_output(p.pnr);
    jp["fock"] = p.fock ? json(round_to_output(*p.fock)) : json(nullptr);
    jp["seed"] = p.seed;
    json samples = json::array();
    for (const StateSample& s : p.samples) samples.push_back(round_to_output(s.mse));
    jp["samples"] = std::move(samples);
    points.push_back(std::move(jp));
  }
  doc["points"] = std::move(points);
  out << doc.dump(2) << '\n';
}

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "nbar,kind,mse,seed") {
    throw std::runtime_error("sweep csv: missing header 'nbar,kind,mse,seed'");
  }
  std::vector<SweepCsvRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 4) {
      throw std::runtime_error("sweep csv line " + std::to_string(lineno) + ": expected 4 fields");
    }
    const auto fail = [&](const std::string& what) {
      throw std::runtime_error("sweep csv line " + std::to_string(lineno) + ": " + what);
    };
    const auto number = [&](const std::string& text, const char* what) {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || *end != '\0') fail(std::string("bad ") + what);
      return v;
    };
    SweepCsvRow row;
    row.nbar = number(fields[0], "nbar");
    row.kind = fields[1];
    if (row.kind != "inbetween" && row.kind != "pnr" && row.kind != "fock" && row.kind != "sample") {
      fail("unknown kind '" + row.kind + "'");
    }
    row.mse = number(fields[2], "mse");
    if (row.kind == "sample") {
      const std::string& f = fields[3];
      if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos) fail("bad seed");
      try {
        row.seed = std::stoull(f);
      } catch (const std::out_of_range&) {
        fail("seed out of range");
      }
    } else if (!fields[3].empty()) {
      fail("seed is only allowed on sample rows");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace personick
