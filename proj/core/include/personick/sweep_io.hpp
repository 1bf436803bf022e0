#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "personick/search_harness.hpp"

namespace personick {

/// 12 significant digits, the precision of every number the tools emit.
std::string format_real(double x);

/// Rounds x to the value format_real prints.
double round_to_output(double x);

/// CSV with header `nbar,kind,mse,seed`; kind is one of inbetween, pnr, fock,
/// sample. seed is empty except on sample rows, where it names the chain.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

/// JSON document with "schema": "v1".
void write_sweep_json(const SweepResult& result, std::ostream& out);

struct SweepCsvRow {
  double nbar = 0.0;
  std::string kind;
  double mse = 0.0;
  std::optional<std::uint64_t> seed;
};

/// Parses the format written by write_sweep_csv. Throws std::runtime_error on
/// malformed input.
std::vector<SweepCsvRow> read_sweep_csv(std::istream& in);

}  // namespace personick
