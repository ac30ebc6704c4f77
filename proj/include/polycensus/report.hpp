#pragma once

// Row formats for census results and the manifest written beside every
// output file.

#include <string>
#include <vector>

#include <json.hpp>

#include "polycensus/census.hpp"

namespace polycensus {

inline constexpr const char* kVersion = "1.0.0";

/// d,monic,variant,m,n,H,count,method,workers,elapsed_seconds
std::string csv_header();
/// elapsed_seconds is left empty unless with_timing is set, so that repeated
/// runs give byte-identical bodies.
std::string csv_row(const CountResult& r, bool with_timing);

/// Same fields as the CSV row; count is a decimal string.
nlohmann::json json_row(const CountResult& r, bool with_timing);

struct CsvRecord {
  int d = 0;
  bool monic = true;
  Variant variant = Variant::Total;
  int m = 0;
  int n = 0;
  Int height = 0;
  Int count = 0;
  std::string method;
};

/// Parses a CSV document with the header above. Throws PreconditionError on
/// malformed input.
std::vector<CsvRecord> parse_csv(const std::string& text);

struct RunManifest {
  std::vector<std::string> argv;
  nlohmann::json config;
  int workers = 1;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
};

std::string utc_timestamp();

}  // namespace polycensus
