// End-to-end acceptance checks.  Each check prints one [PASS]/[FAIL] line;
// the process exits nonzero when any check fails.  Parameters are frozen so
// reruns are comparable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "helpers.hpp"
#include "repgas/embedding.hpp"
#include "repgas/errors.hpp"
#include "repgas/hypergraph.hpp"
#include "repgas/identity.hpp"
#include "repgas/polynomial.hpp"
#include "repgas/series.hpp"
#include "repgas/stirling.hpp"
#include "repgas/threading.hpp"
#include "repgas/zeros.hpp"

using namespace repgas;
using Complex = std::complex<double>;
namespace fs = std::filesystem;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int number, const char* label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              label, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

MetricMeasureSpace unit_interval() {
  return MetricMeasureSpace::euclidean_box(Point{0.0}, Point{1.0});
}

// Every connected 2-uniform graph on 2..max_n labelled vertices, by walking
// all edge subsets.
std::vector<Hypergraph> connected_graph_corpus(int max_n) {
  std::vector<Hypergraph> corpus;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint32_t all = 1u << slots.size();
    for (std::uint32_t mask = 1; mask < all; ++mask) {
      std::vector<std::vector<int>> edges;
      for (std::size_t e = 0; e < slots.size(); ++e)
        if (mask >> e & 1u)
          edges.push_back({slots[e].first, slots[e].second});
      Hypergraph g(n, 2, edges);
      if (g.connected()) corpus.push_back(std::move(g));
    }
  }
  return corpus;
}

std::vector<Hypergraph> three_uniform_fixtures() {
  std::vector<Hypergraph> out;
  for (const char* name :
       {"three_uniform.hg", "loose_path3.hg", "tight_pair3.hg"})
    out.push_back(Hypergraph::from_file(testutil::data_path(name)));
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const char* name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void free_gas_truncated_sum() {
  Timer timer;
  const MetricMeasureSpace space = unit_interval();
  const Potential free = Potential::zero(space, 0.5).with_arity_cap(24);
  const Complex lambda{0.3, 0.2};
  QuadratureSpec spec;

  const SeriesResult z =
      partition_function(space, space.carrier_region(), free, lambda, 20, spec);
  const Complex exact = std::exp(lambda);
  const double rel = std::abs(z.value - exact) / std::abs(exact);
  const double elapsed = timer.seconds();
  report(1, "free gas at K=20 matches exp(lambda V) to 1e-10",
         rel <= 1e-10 && elapsed < 1.0,
         "rel " + num(rel) + ", " + num(elapsed) + "s");
}

void hard_rod_partition_value() {
  Timer timer;
  const MetricMeasureSpace space = unit_interval();
  const Potential rods = Potential::hard_sphere(space, 2, 0.25);
  QuadratureSpec spec;
  spec.resolution = 256;
  spec.budget = 1u << 16;

  const SeriesResult z = partition_function(space, space.carrier_region(), rods,
                                            Complex{0.3, 0.0}, 3, spec);
  const double err = std::abs(z.value - Complex{1.31125, 0.0});
  const double elapsed = timer.seconds();
  report(2, "hard rods reproduce Z = 1.31125 within 1e-3",
         err <= 1e-3 && elapsed < 10.0,
         "err " + num(err) + ", " + num(elapsed) + "s");
}

void density_identity_closes() {
  const MetricMeasureSpace space = unit_interval();
  const Region region = space.carrier_region();
  bool ok = true;
  std::string detail;

  const Potential rods = Potential::hard_sphere(space, 2, 0.25);
  double previous = 1e9;
  for (int resolution : {17, 33, 65}) {
    Timer timer;
    QuadratureSpec spec;
    spec.resolution = resolution;
    spec.budget = 1u << 16;
    const IdentityReport r = integral_identity_check(
        space, region, rods, Complex{0.2, 0.0}, Point{0.5}, 2, spec);
    ok = ok && r.residual <= 5e-3 && r.residual <= previous &&
         timer.seconds() < 300.0;
    previous = r.residual;
    detail += "rods@" + std::to_string(resolution) + " " + num(r.residual) + " ";
  }

  Timer timer;
  const Potential trip = Potential::hard_sphere(space, 3, 0.25);
  QuadratureSpec spec;
  spec.resolution = 17;
  spec.budget = 1u << 12;
  const IdentityReport r = integral_identity_check(
      space, region, trip, Complex{0.2, 0.0}, Point{0.5}, 3, spec, 4);
  ok = ok && r.residual <= 5e-3 && timer.seconds() < 300.0;
  detail += "triple " + num(r.residual);
  report(3, "recursive density identity within 5e-3, residual shrinking", ok,
         detail);
}

void partition_identity_closes() {
  const MetricMeasureSpace space = unit_interval();
  const Potential rods = Potential::hard_sphere(space, 2, 0.25);
  QuadratureSpec spec;
  spec.resolution = 65;
  spec.budget = 1u << 19;
  const Complex lambda{0.2, 0.0};
  const Point y{0.5};

  bool ok = true;
  std::string detail;
  for (double t : {0.0, 0.5, std::numeric_limits<double>::infinity()}) {
    const IdentityReport r = partition_identity_check(
        space, space.carrier_region(), rods, lambda, y, t, 3, spec);
    ok = ok && r.residual <= 5e-3;
    if (t == 0.0) ok = ok && r.residual == 0.0;
    detail += "t=" + num(t) + " " + num(r.residual) + " ";
  }
  report(4, "partial-pin partition identity, exact at t=0", ok, detail);
}

void log_partition_closes() {
  const MetricMeasureSpace space = unit_interval();
  QuadratureSpec spec;
  spec.resolution = 64;
  spec.budget = 1u << 16;

  const IdentityReport free =
      log_partition_check(space, space.carrier_region(),
                          Potential::zero(space, 0.5), Complex{0.3, 0.2}, spec);
  const IdentityReport rods = log_partition_check(
      space, space.carrier_region(), Potential::hard_sphere(space, 2, 0.25),
      Complex{0.2, 0.0}, spec);
  report(5, "density representation of Z within 1e-3",
         free.residual <= 1e-6 && rods.residual <= 1e-3,
         "free " + num(free.residual) + ", rods " + num(rods.residual));
}

void contraction_stays_bounded() {
  const MetricMeasureSpace space = unit_interval();
  const Region region = space.carrier_region();
  const Point y{0.5};
  bool ok = true;
  std::string detail;

  const Potential rods = Potential::hard_sphere(space, 2, 0.25);
  const Potential trip = Potential::hard_sphere(space, 3, 0.25);
  for (const Potential* p : {&rods, &trip}) {
    QuadratureSpec spec;
    spec.resolution = 64;
    const std::vector<double> coeff =
        contraction_coefficients(space, region, *p, y, 3, spec);
    double peak = 0.0;
    for (int levels = 1; levels <= 3; ++levels)
      for (int i = 0; i < 50; ++i) {
        const double z = static_cast<double>(i) / 49.0;  // 1/B_R = 1 here
        double g = 0.0;
        for (int k = levels; k >= 1; --k) g = (g + coeff[k]) * z;
        peak = std::max(peak, g);
        ok = ok && g <= 1.0 + 1e-6;
      }
    detail += (p == &rods ? "rods max " : "triple max ") + num(peak) + " ";
  }

  QuadratureSpec fine;
  fine.resolution = 640;
  const double endpoint =
      contraction_G(space, region, Potential::hard_sphere(space, 2, 0.15), y, 1,
                    1.0 / 0.6, fine);
  ok = ok && std::abs(endpoint - 1.0) <= 1e-3;
  detail += "endpoint " + num(endpoint);
  report(6, "contraction functional bounded by 1 on [0, 1/B_R]", ok, detail);
}

void closed_form_on_corpus() {
  Timer timer;
  std::vector<Hypergraph> corpus = connected_graph_corpus(6);
  const std::size_t two_uniform = corpus.size();
  for (Hypergraph& g : three_uniform_fixtures()) corpus.push_back(std::move(g));

  bool ok = true;
  double worst = 0.0;
  const Complex lambda{0.3, 0.2};
  for (const Hypergraph& g : corpus) {
    const Polynomial zg = independence_polynomial(g);
    const Complex via_powers = closed_form_partition(g, lambda);
    const Complex via_horner = zg(std::exp(lambda) - 1.0);
    const double gap = std::abs(via_powers - via_horner) /
                       std::max(1.0, std::abs(via_horner));
    worst = std::max(worst, gap);
    ok = ok && gap <= 1e-12;
  }

  double stirling_worst = 0.0;
  for (int l = 1; l <= 6; ++l)
    for (double x : {0.25, 0.5, 1.0})
      stirling_worst = std::max(stirling_worst, stirling_sum_check(x, l, 40));
  ok = ok && stirling_worst <= 1e-12;

  report(7, "closed form = polynomial composition on the corpus", ok,
         std::to_string(two_uniform) + "+3 graphs, worst " + num(worst) +
             ", stirling " + num(stirling_worst) + ", " +
             num(timer.seconds()) + "s");
}

void embedding_crosscheck() {
  Timer timer;
  std::vector<Hypergraph> graphs = connected_graph_corpus(4);
  for (Hypergraph& g : three_uniform_fixtures())
    if (g.vertex_count() <= 4 && g.connected()) graphs.push_back(std::move(g));

  bool ok = true;
  double worst = 0.0;
  std::size_t checked = 0;
  for (const Hypergraph& g : graphs) {
    const auto shared = std::make_shared<const Hypergraph>(g);
    const Embedding emb = build_embedding(shared, 10.0);
    QuadratureSpec spec;
    spec.resolution = 1;  // constant on each interval, so one node is exact
    const double volume = emb.region.volume();
    for (const Complex lambda : {Complex{0.1, 0.0}, Complex{0.1, 0.1}}) {
      const int k = default_truncation(std::abs(lambda) * volume, 1e-4);
      const SeriesResult z = partition_function(*emb.space, emb.region,
                                                emb.potential, lambda, k, spec);
      const Complex closed = closed_form_partition(g, lambda);
      const double gap = std::abs(z.value - closed);
      ok = ok && gap <= z.tail_bound + 1e-2;
      worst = std::max(worst, gap);
      ++checked;
    }
  }
  const double elapsed = timer.seconds();
  ok = ok && elapsed < 300.0;
  report(8, "interval embedding reproduces the closed form", ok,
         std::to_string(checked) + " sums, worst gap " + num(worst) + ", " +
             num(elapsed) + "s");
}

void zero_reports_hold() {
  Timer timer;
  std::vector<Hypergraph> corpus = connected_graph_corpus(6);
  for (Hypergraph& g : three_uniform_fixtures()) corpus.push_back(std::move(g));

  bool ok = true;
  for (const Hypergraph& g : corpus) {
    const ZeroReport r = activity_zero_report(g);
    ok = ok && r.pass;
  }

  const ZeroReport edge = activity_zero_report(
      Hypergraph::from_file(testutil::data_path("single_edge.hg")));
  ok = ok && std::abs(edge.lambda_min_modulus - std::log(2.0)) <= 1e-6 &&
       std::abs(edge.bound - 1.0 / (2.0 * std::exp(1.0))) <= 1e-9;
  report(9, "activity zeros clear the 1/(e B_R) disk on the corpus", ok,
         std::to_string(corpus.size()) + " graphs, single edge " +
             num(edge.lambda_min_modulus) + " vs " + num(edge.bound) + ", " +
             num(timer.seconds()) + "s");
}

void zscan_rows_pass(std::string& saved_csv) {
  Timer timer;
  const tools::RunConfig config =
      tools::RunConfig::load(testutil::data_path("hardrods.cfg"));
  const fs::path dir = fresh_dir("repgas_acc_zscan");
  set_worker_threads(1);
  const int rc = tools::cmd_zscan(config, dir);
  saved_csv = slurp(dir / "zscan.csv");

  std::size_t rows = 0;
  std::size_t passing = 0;
  std::istringstream lines(saved_csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    ++rows;
    if (line.size() >= 2 && line.substr(line.size() - 2) == ",1") ++passing;
  }
  const double elapsed = timer.seconds();
  report(10, "activity scan passes on the 0.99 disk grid",
         rc == 0 && rows == 40 * 16 && passing == rows && elapsed < 600.0,
         std::to_string(passing) + "/" + std::to_string(rows) + " rows, " +
             num(elapsed) + "s");
}

void ordering_separates_subsets() {
  const MetricMeasureSpace space = unit_interval();
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  bool ok = true;
  double smallest = 1e9;

  for (int trial = 0; trial < 10000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Point> tuple;
    for (int i = 0; i < k; ++i) tuple.push_back(Point{uni(rng)});

    std::vector<double> values;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<Point> subset;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1u) subset.push_back(tuple[static_cast<std::size_t>(i)]);
      values.push_back(space.ordering_value(subset));
    }
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      const double gap = values[i + 1] - values[i];
      smallest = std::min(smallest, gap);
      ok = ok && gap > 1e-12;
    }
  }
  report(11, "ordering values of distinct subsets stay separated", ok,
         "smallest gap " + num(smallest));
}

void ftc_paths_close() {
  bool ok = true;
  std::string detail;

  {
    std::vector<PathSample> path;
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
      const double s = (std::acos(-1.0) / 2.0) * i / n;
      PathSample p;
      p.s = s;
      p.value = std::polar(1.0, s);
      p.derivative = Complex{0.0, 1.0} * p.value;
      path.push_back(p);
    }
    const IdentityReport r = ftc_check(path);
    const double landing = std::abs(r.lhs - Complex{0.0, 1.0});
    ok = ok && landing <= 1e-9 && r.residual <= 1e-9;
    detail += "circle " + num(std::max(landing, r.residual)) + " ";
  }

  {
    std::vector<PathSample> path;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
      const double s = static_cast<double>(i) / n;
      PathSample p;
      p.s = s;
      p.value = Complex{1.0 + s, s * s};
      p.derivative = Complex{1.0, 2.0 * s};
      path.push_back(p);
    }
    const IdentityReport r = ftc_check(path);
    ok = ok && r.residual <= 1e-6;
    detail += "poly " + num(r.residual) + " ";
  }

  {
    std::vector<PathSample> path;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
      const double s = static_cast<double>(i) / n;
      PathSample p;
      p.s = s;
      p.value = (2.0 + s) * std::exp(Complex{0.0, 1.0} * s);
      p.derivative = std::exp(Complex{0.0, 1.0} * s) *
                     (1.0 + Complex{0.0, 1.0} * (2.0 + s));
      path.push_back(p);
    }
    const IdentityReport r = ftc_check(path);
    ok = ok && r.residual <= 1e-6;
    detail += "spiral " + num(r.residual);
  }

  report(12, "zero-free paths satisfy the log-derivative integral", ok, detail);
}

void zscan_thread_determinism(const std::string& csv_single) {
  Timer timer;
  const tools::RunConfig config =
      tools::RunConfig::load(testutil::data_path("hardrods.cfg"));
  const fs::path dir = fresh_dir("repgas_acc_zscan8");
  set_worker_threads(8);
  const int rc = tools::cmd_zscan(config, dir);
  set_worker_threads(0);
  const std::string csv_many = slurp(dir / "zscan.csv");
  report(13, "activity scan is byte-identical at 1 and 8 threads",
         rc == 0 && !csv_single.empty() && csv_single == csv_many,
         std::to_string(csv_many.size()) + " bytes, " + num(timer.seconds()) +
             "s");
}

}  // namespace

int main() {
  std::string zscan_csv;
  try {
    free_gas_truncated_sum();
    hard_rod_partition_value();
    density_identity_closes();
    partition_identity_closes();
    log_partition_closes();
    contraction_stays_bounded();
    closed_form_on_corpus();
    embedding_crosscheck();
    zero_reports_hold();
    zscan_rows_pass(zscan_csv);
    ordering_separates_subsets();
    ftc_paths_close();
    zscan_thread_determinism(zscan_csv);
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    return 1;
  }
  if (failures == 0) {
    std::printf("all 13 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
