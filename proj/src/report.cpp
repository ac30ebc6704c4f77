#include "polycensus/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace polycensus {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_small(const std::string& s, const char* what) {
  try {
    return static_cast<int>(Int::parse(s).to_int64());
  } catch (const std::exception&) {
    throw PreconditionError(std::string("csv: bad ") + what + " '" + s + "'");
  }
}

}  // namespace

std::string csv_header() { return "d,monic,variant,m,n,H,count,method,workers,elapsed_seconds"; }

std::string csv_row(const CountResult& r, bool with_timing) {
  const CountQuery& q = r.query;
  std::ostringstream os;
  os << q.d << ',' << (q.monic ? "true" : "false") << ',' << to_string(q.variant) << ',';
  if (q.variant == Variant::Split) {
    os << q.m << ',' << q.n;
  } else if (q.variant == Variant::IndecompPair) {
    const int ell = smallest_prime_factor(q.d);
    os << q.d / ell << ',' << ell;
  } else {
    os << ',';
  }
  os << ',' << q.height << ',' << r.count << ',' << to_string(r.method) << ',' << r.workers << ',';
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.elapsed_seconds);
    os << buf;
  }
  return os.str();
}

nlohmann::json json_row(const CountResult& r, bool with_timing) {
  const CountQuery& q = r.query;
  nlohmann::json j;
  j["d"] = q.d;
  j["monic"] = q.monic;
  j["variant"] = to_string(q.variant);
  if (q.variant == Variant::Split) {
    j["m"] = q.m;
    j["n"] = q.n;
  } else if (q.variant == Variant::IndecompPair) {
    const int ell = smallest_prime_factor(q.d);
    j["m"] = q.d / ell;
    j["n"] = ell;
  } else {
    j["m"] = nullptr;
    j["n"] = nullptr;
  }
  j["H"] = q.height.to_int64();
  j["count"] = r.count.to_string();
  j["method"] = to_string(r.method);
  j["workers"] = r.workers;
  j["elapsed_seconds"] = with_timing ? nlohmann::json(r.elapsed_seconds) : nlohmann::json(nullptr);
  return j;
}

std::vector<CsvRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<CsvRecord> out;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split_fields(line);
    if (header) {
      header = false;
      if (f.size() < 7 || f[0] != "d") throw PreconditionError("csv: missing header line");
      continue;
    }
    if (f.size() < 8) throw PreconditionError("csv: line " + std::to_string(lineno) + " has too few fields");
    CsvRecord r;
    r.d = parse_small(f[0], "degree");
    if (f[1] != "true" && f[1] != "false") throw PreconditionError("csv: bad monic flag '" + f[1] + "'");
    r.monic = f[1] == "true";
    if (f[2] == "total") {
      r.variant = Variant::Total;
    } else if (f[2] == "split") {
      r.variant = Variant::Split;
    } else if (f[2] == "indecomp_pair") {
      r.variant = Variant::IndecompPair;
    } else {
      throw PreconditionError("csv: bad variant '" + f[2] + "'");
    }
    if (!f[3].empty()) r.m = parse_small(f[3], "m");
    if (!f[4].empty()) r.n = parse_small(f[4], "n");
    try {
      r.height = Int::parse(f[5]);
      r.count = Int::parse(f[6]);
    } catch (const std::exception& e) {
      throw PreconditionError("csv: line " + std::to_string(lineno) + ": " + e.what());
    }
    r.method = f[7];
    out.push_back(r);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["tool"] = "polycensus";
  j["version"] = kVersion;
  j["argv"] = argv;
  j["config"] = config;
  j["workers"] = workers;
  j["started_utc"] = started_utc;
  j["finished_utc"] = finished_utc;
  j["outputs"] = outputs;
#ifdef __VERSION__
  j["compiler"] = __VERSION__;
#endif
  j["openmp"] = _OPENMP;
  return j;
}

}  // namespace polycensus
