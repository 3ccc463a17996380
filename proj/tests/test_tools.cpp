#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "commands.hpp"
#include "helpers.hpp"
#include "repgas/errors.hpp"
#include "repgas/threading.hpp"

using namespace repgas;
using tools::RunConfig;

namespace {

namespace fs = std::filesystem;

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

}  // namespace

TEST_CASE("hard rod configuration round-trips") {
  const RunConfig c = RunConfig::load(testutil::data_path("hardrods.cfg"));
  CHECK(c.space.kind == "euclidean_box");
  CHECK(c.space.dimension == 1);
  CHECK(c.space.lower == std::vector<double>{0.0});
  CHECK(c.space.upper == std::vector<double>{1.0});
  CHECK(c.potential.kind == "hard_sphere");
  CHECK(c.potential.k == 2);
  CHECK(c.potential.r == 0.25);
  CHECK(c.activity.fraction == 0.99);
  CHECK(c.activity.radial == 40);
  CHECK(c.activity.angular == 16);
  CHECK(c.quadrature.resolution == 256);
  CHECK(c.quadrature.budget == 65536);
  CHECK(c.identity.probe == std::vector<double>{0.5});
  CHECK(c.identity.lambda_re == 0.2);
  CHECK(c.identity.lambda_im == 0.0);
  REQUIRE(c.identity.thresholds.size() == 3);
  CHECK(c.identity.thresholds[0] == 0.0);
  CHECK(c.identity.thresholds[1] == 0.5);
  CHECK(std::isinf(c.identity.thresholds[2]));
  CHECK(c.contraction.levels == 3);
  CHECK(c.contraction.grid == 50);
  CHECK(c.series.k_id == 2);       // defaulted
  CHECK(c.series.truncation == -1);
}

TEST_CASE("free gas configuration round-trips") {
  const RunConfig c = RunConfig::load(testutil::data_path("idealgas.cfg"));
  CHECK(c.potential.kind == "zero");
  CHECK(c.potential.range == 0.5);
  CHECK(c.potential.arity_cap == 24);
  CHECK(c.series.truncation == 20);
  CHECK(c.activity.fraction == 0.5);
  CHECK(c.identity.lambda_im == 0.2);
  REQUIRE(c.identity.thresholds.size() == 1);
  CHECK(std::isinf(c.identity.thresholds[0]));
}

TEST_CASE("an empty file yields the documented defaults") {
  const fs::path p = fs::temp_directory_path() / "repgas_defaults.cfg";
  std::ofstream(p) << "# everything defaulted\n";
  const RunConfig c = RunConfig::load(p.string());
  CHECK(c.space.kind == "euclidean_box");
  CHECK(c.potential.kind == "hard_sphere");
  CHECK(c.potential.arity_cap == 8);
  CHECK(c.quadrature.resolution == 64);
  CHECK(c.quadrature.budget == (1u << 22));
  CHECK(c.quadrature.seed == 0);
  CHECK(c.series.k_id == 2);
  CHECK(c.tolerances.log_bound == 1e-3);
  CHECK(c.tolerances.contraction == 1e-6);
  CHECK(c.tolerances.tail == 1e-8);
  CHECK(c.output_directory == ".");
}

TEST_CASE("bad configurations are rejected with context") {
  CHECK_THROWS_AS(RunConfig::load(testutil::data_path("unknown_key.cfg")),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::load(testutil::data_path("bad_fraction.cfg")),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::load("/nonexistent/run.cfg"), ConfigError);

  try {
    RunConfig::load(testutil::data_path("unknown_key.cfg"));
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("flavor") != std::string::npos);
  }

  const fs::path p = fs::temp_directory_path() / "repgas_syntax.cfg";
  std::ofstream(p) << "[space]\nkind euclidean_box\n";  // missing '='
  CHECK_THROWS_AS(RunConfig::load(p.string()), ConfigError);
}

TEST_CASE("coordinate lists become points") {
  CHECK(tools::point_from({0.3}).dim() == 1);
  CHECK(tools::point_from({0.3})[0] == 0.3);
  const Point q = tools::point_from({1.0, 2.0, 3.0, 4.0});
  CHECK(q.dim() == 4);
  CHECK(q[3] == 4.0);
  CHECK_THROWS_AS(tools::point_from({}), ConfigError);
  CHECK_THROWS_AS(tools::point_from({1, 2, 3, 4, 5}), ConfigError);
}

TEST_CASE("instances materialize the configured objects") {
  const RunConfig rods = RunConfig::load(testutil::data_path("hardrods.cfg"));
  const tools::Instance a = tools::build_instance(rods);
  CHECK(a.space->kind() == MetricMeasureSpace::Kind::euclidean_box);
  CHECK(a.space->dim() == 1);
  CHECK(a.region.volume() == doctest::Approx(1.0));
  CHECK(a.potential.range() == 0.5);

  const RunConfig free = RunConfig::load(testutil::data_path("idealgas.cfg"));
  const tools::Instance b = tools::build_instance(free);
  CHECK(b.potential.range() == 0.5);
  CHECK(b.potential.arity_cap() == 24);
}

TEST_CASE("zscan output is byte-identical across thread counts") {
  RunConfig c = RunConfig::load(testutil::data_path("hardrods.cfg"));
  c.activity.radial = 6;
  c.activity.angular = 4;
  c.quadrature.resolution = 64;

  const fs::path one = fresh_dir("repgas_zscan_t1");
  const fs::path many = fresh_dir("repgas_zscan_t8");

  set_worker_threads(1);
  const int rc1 = tools::cmd_zscan(c, one);
  set_worker_threads(8);
  const int rc8 = tools::cmd_zscan(c, many);
  set_worker_threads(0);

  CHECK(rc1 == 0);
  CHECK(rc8 == 0);
  const std::string a = slurp(one / "zscan.csv");
  const std::string b = slurp(many / "zscan.csv");
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "lambda_re,lambda_im,abs_Z,tail_bound,abs_Z_minus_tail,abs_log_Z,bound,pass");
}

TEST_CASE("hypergraph command writes its three reports") {
  const fs::path dir = fresh_dir("repgas_hg_cmd");
  const int rc =
      tools::cmd_hypergraph(testutil::data_path("single_edge.hg"), 10.0, dir);
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "coefficients.csv"));
  CHECK(fs::exists(dir / "zeros.csv"));
  CHECK(fs::exists(dir / "report.csv"));

  const std::string coeff = slurp(dir / "coefficients.csv");
  CHECK(coeff.find("degree,count") == 0);
  CHECK(coeff.find("1,2") != std::string::npos);  // two singleton sets
}
