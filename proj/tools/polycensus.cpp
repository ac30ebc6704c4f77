// polycensus: counting, decomposition, Mahler measure, growth fits and the
// acceptance suite from the command line.
//
// Exit codes: 0 success, 2 refused input (bad arguments, preconditions,
// budgets, overflow), 1 internal error or failed check.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "polycensus/acceptance.hpp"
#include "polycensus/asymptotics.hpp"
#include "polycensus/census.hpp"
#include "polycensus/decompose.hpp"
#include "polycensus/mahler.hpp"
#include "polycensus/report.hpp"

using namespace polycensus;

namespace {

/// A failed check (for instance forward and oracle disagreeing); exit 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (item.empty() || used != item.size()) throw PreconditionError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::pair<int, int> parse_split(const std::string& text) {
  const auto v = parse_ints(text, ',');
  if (v.size() != 2) throw PreconditionError("split must be m,n: '" + text + "'");
  return {v[0], v[1]};
}

/// "geometric:k" gives k heights spaced geometrically from 2 to height_max;
/// anything else is an explicit comma-separated list.
std::vector<Int> parse_grid(const std::string& text, const std::optional<std::string>& height_max) {
  std::vector<Int> grid;
  if (text.rfind("geometric:", 0) == 0) {
    if (!height_max) throw PreconditionError("--grid geometric:k needs --height-max");
    const int k = parse_ints(text.substr(10), ',').at(0);
    const Int top = Int::parse(*height_max);
    if (k < 1) throw PreconditionError("geometric grid needs k >= 1");
    if (top < Int(2)) throw PreconditionError("--height-max must be at least 2");
    const double hi = std::log(top.to_double());
    const double lo = std::log(2.0);
    for (int i = 0; i < k; ++i) {
      const double t = k == 1 ? 1.0 : static_cast<double>(i) / (k - 1);
      Int h = i == k - 1 ? top : Int(std::llround(std::exp(lo + t * (hi - lo))));
      if (grid.empty() || grid.back() < h) grid.push_back(h);
    }
    return grid;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(Int::parse(item));
  if (grid.empty()) throw PreconditionError("empty grid");
  return grid;
}

struct CountArgs {
  int degree = 0;
  bool non_monic = false;
  std::optional<std::string> height_max;
  std::optional<std::string> grid;
  std::string variant = "total";
  std::string method = "forward";
  int jobs = default_jobs();
  std::string out = "csv";
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> oracle_budget;
  bool timing = false;
  std::optional<std::string> output;
};

CountQuery base_query(const CountArgs& a) {
  CountQuery q;
  q.d = a.degree;
  q.monic = !a.non_monic;
  if (a.variant == "total") {
    q.variant = Variant::Total;
  } else if (a.variant == "indecomp-pair") {
    q.variant = Variant::IndecompPair;
  } else if (a.variant.rfind("split:", 0) == 0) {
    q.variant = Variant::Split;
    std::tie(q.m, q.n) = parse_split(a.variant.substr(6));
  } else {
    throw PreconditionError("unknown variant '" + a.variant + "'");
  }
  return q;
}

class RowWriter {
 public:
  RowWriter(std::ostream& os, bool json, bool timing) : os_(os), json_(json), timing_(timing) {
    if (!json_) os_ << csv_header() << '\n';
  }
  void write(const CountResult& r) {
    if (json_) {
      os_ << json_row(r, timing_).dump() << '\n';
    } else {
      os_ << csv_row(r, timing_) << '\n';
    }
    os_.flush();
  }

 private:
  std::ostream& os_;
  bool json_;
  bool timing_;
};

int run_count(const CountArgs& a, const std::vector<std::string>& argv) {
  const std::string started = utc_timestamp();
  if (a.out != "csv" && a.out != "json") throw PreconditionError("--out must be csv or json");
  if (a.method != "forward" && a.method != "oracle" && a.method != "both") {
    throw PreconditionError("--method must be forward, oracle or both");
  }
  if (a.jobs < 1) throw PreconditionError("--jobs must be at least 1");
  CensusConfig cfg = CensusConfig::from_env();
  if (a.budget) cfg.set_budget = *a.budget;
  if (a.oracle_budget) cfg.oracle_budget = *a.oracle_budget;

  std::vector<Int> grid;
  if (a.grid) {
    grid = parse_grid(*a.grid, a.height_max);
  } else if (a.height_max) {
    grid = {Int::parse(*a.height_max)};
  } else {
    throw PreconditionError("give --height-max or --grid");
  }
  const CountQuery base = base_query(a);
  CountQuery probe = base;
  probe.height = grid.front();
  probe.validate();

  std::ofstream file;
  if (a.output) {
    file.open(*a.output);
    if (!file) throw PreconditionError("cannot write " + *a.output);
  }
  std::ostream& os = a.output ? static_cast<std::ostream&>(file) : std::cout;
  RowWriter writer(os, a.out == "json", a.timing);

  const bool forward = a.method != "oracle";
  const bool oracle = a.method != "forward";
  if (forward && !oracle) {
    census_sweep(base, grid, a.jobs, cfg, [&](const CountResult& r) { writer.write(r); });
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i > 0 && !(grid[i - 1] < grid[i])) throw PreconditionError("grid must be strictly ascending");
      CountQuery q = base;
      q.height = grid[i];
      std::optional<CountResult> fwd;
      if (forward) {
        fwd = count_forward(q, a.jobs, cfg);
        writer.write(*fwd);
      }
      const CountResult orc = count_bruteforce(q, cfg);
      writer.write(orc);
      if (fwd && fwd->count != orc.count) {
        throw CheckFailed("forward count " + fwd->count.to_string() + " differs from oracle count " +
                          orc.count.to_string() + " at H=" + q.height.to_string());
      }
    }
  }

  if (a.output) {
    RunManifest m;
    m.argv = argv;
    m.workers = a.jobs;
    m.started_utc = started;
    m.finished_utc = utc_timestamp();
    m.outputs = {*a.output};
    std::vector<std::string> grid_text;
    for (const Int& h : grid) grid_text.push_back(h.to_string());
    const char* env = std::getenv("POLYCENSUS_BUDGET");
    m.config = {{"degree", base.d},
                {"monic", base.monic},
                {"variant", a.variant},
                {"method", a.method},
                {"grid", grid_text},
                {"out", a.out},
                {"timing", a.timing},
                {"set_budget", cfg.set_budget},
                {"oracle_budget", cfg.oracle_budget},
                {"POLYCENSUS_BUDGET", env ? nlohmann::json(env) : nlohmann::json(nullptr)}};
    std::ofstream mf(*a.output + ".manifest.json");
    mf << m.to_json().dump(2) << '\n';
    if (!mf) throw PreconditionError("cannot write manifest for " + *a.output);
  }
  return 0;
}

int run_decompose(const std::string& text, const std::optional<std::string>& split) {
  const IntPoly f = parse_poly(text);
  if (split) {
    const auto [m, n] = parse_split(*split);
    if (m < 2 || n < 2 || m * n != f.degree()) {
      throw PreconditionError("split (" + std::to_string(m) + "," + std::to_string(n) + ") does not fit degree " +
                              std::to_string(f.degree()));
    }
    if (const auto w = decompose_split(f, m, n)) {
      std::cout << "g = " << format_poly(w->g) << " ; h = " << format_poly(w->h) << '\n';
    } else {
      std::cout << "indecomposable\n";
    }
    return 0;
  }
  const auto chain = full_decomposition(f);
  if (chain.size() == 1) {
    std::cout << "indecomposable\n";
    return 0;
  }
  IntPoly outer = chain.front();
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) outer = compose(outer, chain[i]);
  std::cout << "g = " << format_poly(outer) << " ; h = " << format_poly(chain.back()) << '\n';
  if (chain.size() > 2) {
    std::cout << "chain =";
    for (std::size_t i = 0; i < chain.size(); ++i) std::cout << (i ? " o " : " ") << format_poly(chain[i]);
    std::cout << '\n';
  }
  return 0;
}

int run_mahler(const std::string& text, double tol) {
  const IntPoly f = parse_poly(text);
  RootOptions opts;
  opts.tol = tol;
  MahlerResult r;
  try {
    r = roots(f, opts);
  } catch (const ConvergenceError& e) {
    std::cerr << "warning: " << e.what() << '\n';
    r = e.best();
  }
  std::cout << std::setprecision(15);
  std::cout << "f = " << pretty(f) << '\n';
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    std::cout << "root " << r.roots[i].real() << (r.roots[i].imag() < 0 ? " - " : " + ")
              << std::fabs(r.roots[i].imag()) << "i  residual " << r.residuals[i] << '\n';
  }
  std::cout << "M(f) = " << r.measure << '\n';
  std::cout << "iterations = " << r.iterations << '\n';
  for (const auto& c : height_measure_checks(f, r.measure)) {
    std::cout << c.name << ": " << c.lhs << " <= " << c.rhs << "  slack " << c.slack << '\n';
  }
  return 0;
}

std::string describe(const Prediction& p) {
  std::ostringstream s;
  if (p.kind == PredictionKind::Vanishing) return "0 (vanishing)";
  s << std::fixed << std::setprecision(3) << p.exponent_value() << (p.log_factor ? " +log" : "")
    << (p.kind == PredictionKind::TwoSided ? " (two-sided)" : " (upper)");
  return s.str();
}

int run_fit(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  using Key = std::tuple<int, bool, int, int, int, std::string>;
  std::map<Key, std::vector<std::pair<double, double>>> groups;
  for (const CsvRecord& r : parse_csv(text)) {
    groups[{r.d, r.monic, static_cast<int>(r.variant), r.m, r.n, r.method}].emplace_back(r.height.to_double(),
                                                                                        r.count.to_double());
  }
  if (groups.empty()) throw PreconditionError("no rows to fit");
  std::cout << "d,monic,variant,m,n,method,points,fitted,model,power_exponent,log_exponent,rms,predicted\n";
  int fitted = 0;
  for (auto& [key, pts] : groups) {
    const auto& [d, monic, v, m, n, method] = key;
    const Variant variant = static_cast<Variant>(v);
    std::sort(pts.begin(), pts.end());
    std::cout << d << ',' << (monic ? "true" : "false") << ',' << to_string(variant) << ','
              << (variant == Variant::Total ? "" : std::to_string(m)) << ','
              << (variant == Variant::Total ? "" : std::to_string(n)) << ',' << method << ',';
    std::string predicted;
    try {
      predicted = describe(predicted_growth(d, monic, variant, m, n));
    } catch (const PreconditionError& e) {
      predicted = std::string("n/a: ") + e.what();
    }
    try {
      const GrowthFit g = fit_growth(pts);
      std::cout << g.points_used << ',' << std::fixed << std::setprecision(4) << g.exponent << ','
                << (g.log_model_preferred ? "power-log" : (g.log_conclusive ? "power" : "power (log inconclusive)"))
                << ',' << g.power_exponent << ',' << g.log_exponent << ',' << std::setprecision(6) << g.rms_residual
                << ',' << predicted << '\n';
      std::cout.unsetf(std::ios::fixed);
      ++fitted;
    } catch (const PreconditionError& e) {
      std::cout << pts.size() << ",,not fitted: " << e.what() << ",,,," << predicted << '\n';
    }
  }
  if (fitted == 0) throw PreconditionError("no group had enough points to fit");
  return 0;
}

int run_verify(int jobs, const std::vector<int>& ids_in, int samples) {
  std::vector<int> ids = ids_in;
  if (ids.empty()) {
    for (int id = 1; id <= acceptance_count(); ++id) ids.push_back(id);
  }
  for (int id : ids) acceptance_title(id);  // validates ids up front
  AcceptanceOptions opts;
  opts.workers = jobs;
  opts.samples = samples;
  int failed = 0;
  run_acceptance(ids, opts, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << ids.size() - static_cast<std::size_t>(failed) << "/" << ids.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Exact census of decomposable integer polynomials"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count decomposable polynomials of degree d and height <= H");
  count->add_option("--degree,-d", ca.degree, "Degree d >= 2")->required();
  auto* monic_flag = count->add_flag("--monic", "Monic polynomials (default)");
  count->add_flag("--non-monic", ca.non_monic, "All integer polynomials of exact degree d")->excludes(monic_flag);
  count->add_option("--height-max,-H", ca.height_max, "Height bound H, or the top of a geometric grid");
  count->add_option("--grid", ca.grid, "geometric:k, or an ascending list such as 25,50,100");
  count->add_option("--variant", ca.variant, "total | split:m,n | indecomp-pair")->capture_default_str();
  count->add_option("--method", ca.method, "forward | oracle | both")->capture_default_str();
  count->add_option("--jobs,-j", ca.jobs, "Worker threads for the forward census")->capture_default_str();
  count->add_option("--out", ca.out, "csv | json (one object per line)")->capture_default_str();
  count->add_option("--budget", ca.budget, "Cap on distinct entries in the forward set (env POLYCENSUS_BUDGET)");
  count->add_option("--oracle-budget", ca.oracle_budget, "Cap on polynomials walked by the oracle");
  count->add_flag("--timing", ca.timing, "Fill elapsed_seconds (rows are then no longer reproducible)");
  count->add_option("--output,-o", ca.output, "Write rows to FILE and a manifest to FILE.manifest.json");

  std::string poly_text;
  std::optional<std::string> split;
  auto* dec = app.add_subcommand("decompose", "Decompose a polynomial given as ascending coefficients a0,a1,...");
  dec->add_option("poly", poly_text, "Coefficients, constant first (use -- before a negative constant)")->required();
  dec->add_option("--split", split, "Only try the split m,n (deg g = m, deg h = n)");

  std::string mahler_text;
  double tol = RootOptions{}.tol;
  auto* mah = app.add_subcommand("mahler", "Roots, Mahler measure and height/measure inequalities");
  mah->add_option("poly", mahler_text, "Coefficients, constant first")->required();
  mah->add_option("--tol", tol, "Relative residual tolerance")->capture_default_str();

  std::string fit_path;
  auto* fit = app.add_subcommand("fit", "Fit growth exponents to count CSV and compare with predictions");
  fit->add_option("csv", fit_path, "CSV file written by count, or - for stdin")->required();

  int verify_jobs = default_jobs();
  int samples = AcceptanceOptions{}.samples;
  std::vector<int> criteria;
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--jobs,-j", verify_jobs, "Worker threads")->capture_default_str();
  ver->add_option("--criterion,-c", criteria, "Run only these criteria (1-13)");
  ver->add_option("--samples", samples, "Random cases for the sampled criteria")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return run_count(ca, args);
    if (*dec) return run_decompose(poly_text, split);
    if (*mah) return run_mahler(mahler_text, tol);
    if (*fit) return run_fit(fit_path);
    if (*ver) return run_verify(verify_jobs, criteria, samples);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
