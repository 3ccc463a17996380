#include "commands.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "repgas/embedding.hpp"
#include "repgas/errors.hpp"
#include "repgas/identity.hpp"
#include "repgas/series.hpp"
#include "repgas/threading.hpp"
#include "repgas/zeros.hpp"

namespace repgas::tools {
namespace {

namespace fs = std::filesystem;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_csv(const fs::path& dir, const char* name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  return out;
}

void identity_row(std::ofstream& out, bool& all_pass, const char* check,
                  const std::string& param, const IdentityReport& report) {
  all_pass = all_pass && report.pass();
  out << check << ',' << param << ',' << fmt(report.lhs.real()) << ','
      << fmt(report.lhs.imag()) << ',' << fmt(report.rhs.real()) << ','
      << fmt(report.rhs.imag()) << ',' << fmt(report.residual) << ','
      << fmt(report.tolerance_budget) << ',' << (report.pass() ? 1 : 0)
      << '\n';
}

}  // namespace

int cmd_zscan(const RunConfig& config, const fs::path& out_dir) {
  Instance inst = build_instance(config);
  const double volume = inst.region.volume();
  const double ball = inst.space->ball_volume(inst.potential.range());
  if (!(ball > 0.0))
    throw ConfigError("activity scan needs a potential with positive range");
  const double radius = config.activity.fraction / (std::numbers::e * ball);
  const double bound = volume / ball;

  int truncation = config.series.truncation;
  if (truncation < 0)
    truncation = default_truncation(radius * volume, config.tolerances.tail);
  const std::vector<double> table = interaction_integrals(
      *inst.space, inst.region, inst.potential, truncation, config.quadrature);

  std::ofstream out = open_csv(out_dir, "zscan.csv");
  out << "lambda_re,lambda_im,abs_Z,tail_bound,abs_Z_minus_tail,abs_log_Z,"
         "bound,pass\n";
  bool all_pass = true;
  for (int i = 0; i < config.activity.radial; ++i) {
    const double rho = radius * (i + 1) / config.activity.radial;
    for (int j = 0; j < config.activity.angular; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / config.activity.angular;
      const std::complex<double> lambda = std::polar(rho, theta);
      SeriesResult z =
          partition_from_integrals(table, lambda, volume, config.quadrature);
      const double guard = std::abs(z.value) - z.tail_bound;
      double abs_log = std::numeric_limits<double>::quiet_NaN();
      bool pass = guard > 0.0;
      if (pass) {
        abs_log = std::abs(std::log(z.value));
        pass = abs_log <= bound + config.tolerances.log_bound;
      }
      all_pass = all_pass && pass;
      out << fmt(lambda.real()) << ',' << fmt(lambda.imag()) << ','
          << fmt(std::abs(z.value)) << ',' << fmt(z.tail_bound) << ','
          << fmt(guard) << ',' << fmt(abs_log) << ',' << fmt(bound) << ','
          << (pass ? 1 : 0) << '\n';
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_identity(const RunConfig& config, const fs::path& out_dir) {
  Instance inst = build_instance(config);
  const std::complex<double> lambda{config.identity.lambda_re,
                                    config.identity.lambda_im};
  const Point y = point_from(config.identity.probe);
  const int k_id = config.series.k_id;

  std::ofstream out = open_csv(out_dir, "identity.csv");
  out << "check,param,lhs_re,lhs_im,rhs_re,rhs_im,residual,budget,pass\n";
  bool all_pass = true;

  identity_row(out, all_pass, "integral", "k=" + std::to_string(k_id),
               integral_identity_check(*inst.space, inst.region,
                                       inst.potential, lambda, y, k_id,
                                       config.quadrature,
                                       config.series.truncation));
  for (double t : config.identity.thresholds)
    identity_row(out, all_pass, "partition", "t=" + fmt(t),
                 partition_identity_check(*inst.space, inst.region,
                                          inst.potential, lambda, y, t, k_id,
                                          config.quadrature));
  identity_row(out, all_pass, "logz", "",
               log_partition_check(*inst.space, inst.region, inst.potential,
                                   lambda, config.quadrature,
                                   config.series.truncation));
  return all_pass ? 0 : 1;
}

int cmd_contraction(const RunConfig& config, const fs::path& out_dir) {
  Instance inst = build_instance(config);
  const double ball = inst.space->ball_volume(inst.potential.range());
  if (!(ball > 0.0))
    throw ConfigError("contraction grid needs a potential with positive range");
  const Point y = point_from(config.identity.probe);

  const std::vector<double> coeff =
      contraction_coefficients(*inst.space, inst.region, inst.potential, y,
                               config.contraction.levels, config.quadrature);

  std::ofstream out = open_csv(out_dir, "contraction.csv");
  out << "z,G,pass\n";
  bool all_pass = true;
  for (int i = 0; i < config.contraction.grid; ++i) {
    const double z = (1.0 / ball) * i / (config.contraction.grid - 1);
    double g = 0.0;
    for (std::size_t k = coeff.size(); k-- > 1;) g = (g + coeff[k]) * z;
    const bool pass = g <= 1.0 + config.tolerances.contraction;
    all_pass = all_pass && pass;
    out << fmt(z) << ',' << fmt(g) << ',' << (pass ? 1 : 0) << '\n';
  }
  return all_pass ? 0 : 1;
}

int cmd_hypergraph(const fs::path& graph_file, double range,
                   const fs::path& out_dir) {
  auto graph = std::make_shared<const Hypergraph>(
      Hypergraph::from_file(graph_file.string()));

  const Polynomial poly = independence_polynomial(*graph);
  {
    std::ofstream out = open_csv(out_dir, "coefficients.csv");
    out << "degree,count\n";
    const auto& c = poly.coefficients();
    for (std::size_t l = 0; l < c.size(); ++l)
      out << l << ',' << static_cast<std::uint64_t>(std::llround(c[l].real()))
          << '\n';
  }

  const ZeroReport report = activity_zero_report(*graph);
  {
    std::ofstream out = open_csv(out_dir, "zeros.csv");
    out << "kind,re,im,modulus\n";
    for (const auto& z : report.polynomial_roots)
      out << "z," << fmt(z.real()) << ',' << fmt(z.imag()) << ','
          << fmt(std::abs(z)) << '\n';
    for (const auto& l : report.lambda_zeros)
      out << "lambda," << fmt(l.real()) << ',' << fmt(l.imag()) << ','
          << fmt(std::abs(l)) << '\n';
  }
  {
    std::ofstream out = open_csv(out_dir, "report.csv");
    out << "min_modulus,bound,extremal_ratio,branch_window,vacuous,pass\n";
    out << fmt(report.lambda_min_modulus) << ',' << fmt(report.bound) << ','
        << fmt(report.extremal_ratio) << ',' << report.branch_window << ','
        << (report.vacuous() ? 1 : 0) << ',' << (report.pass ? 1 : 0) << '\n';
  }

  bool all_pass = report.pass;

  // Continuum cross-check: the interval-union gas must reproduce the closed
  // form Z_G(e^lambda - 1).  The integrand is constant on carrier cells, so
  // one midpoint node per interval integrates exactly; only the series tail
  // separates the two values.
  if (graph->connected() && graph->vertex_count() <= 4) {
    const Embedding emb = build_embedding(graph, range);
    const double volume = emb.region.volume();
    QuadratureSpec spec;
    spec.resolution = 1;

    const std::complex<double> activities[] = {{0.1, 0.0}, {0.1, 0.1}};
    int truncation = 0;
    for (const auto& lambda : activities)
      truncation = std::max(
          truncation, default_truncation(std::abs(lambda) * volume, 1e-8));
    const std::vector<double> table = interaction_integrals(
        *emb.space, emb.region, emb.potential, truncation, spec);

    std::ofstream out = open_csv(out_dir, "crosscheck.csv");
    out << "lambda_re,lambda_im,series_re,series_im,closed_re,closed_im,"
           "residual,budget,pass\n";
    for (const auto& lambda : activities) {
      const SeriesResult z =
          partition_from_integrals(table, lambda, volume, spec);
      const std::complex<double> closed = closed_form_partition(*graph, lambda);
      const double residual = std::abs(z.value - closed);
      const double budget = z.tail_bound + 1e-2;
      const bool pass = residual <= budget;
      all_pass = all_pass && pass;
      out << fmt(lambda.real()) << ',' << fmt(lambda.imag()) << ','
          << fmt(z.value.real()) << ',' << fmt(z.value.imag()) << ','
          << fmt(closed.real()) << ',' << fmt(closed.imag()) << ','
          << fmt(residual) << ',' << fmt(budget) << ',' << (pass ? 1 : 0)
          << '\n';
    }
  }

  return all_pass ? 0 : 1;
}

int cmd_info(const RunConfig& config) {
  Instance inst = build_instance(config);
  const double volume = inst.region.volume();
  const double ball = inst.space->ball_volume(inst.potential.range());

  std::printf("space kind         %s\n", config.space.kind.c_str());
  std::printf("carrier volume     %.6g\n", inst.space->carrier_volume());
  std::printf("region volume      %.6g\n", volume);
  std::printf("interaction range  %.6g\n", inst.potential.range());
  std::printf("ball volume B_R    %.6g\n", ball);
  if (ball > 0.0) {
    const double disk = 1.0 / (std::numbers::e * ball);
    const double edge = config.activity.fraction * disk;
    std::printf("disk radius        %.6g  (1/(e B_R))\n", disk);
    std::printf("scan radius        %.6g  (fraction %.6g)\n", edge,
                config.activity.fraction);
    std::printf("default K          %d  (tail <= %.1g at the scan edge)\n",
                default_truncation(edge * volume, config.tolerances.tail),
                config.tolerances.tail);
  } else {
    std::printf("disk radius        unbounded (zero-range potential)\n");
  }
  std::printf("arity cap          %d\n", inst.potential.arity_cap());
  std::printf("quadrature         %s, resolution %d, budget %zu, seed %llu\n",
              config.quadrature.scheme ==
                      QuadratureSpec::Scheme::tensor_midpoint
                  ? "tensor_midpoint"
                  : "quasi_random",
              config.quadrature.resolution, config.quadrature.budget,
              static_cast<unsigned long long>(config.quadrature.seed));
  std::printf("worker threads     %d\n", worker_threads());
  return 0;
}

}  // namespace repgas::tools
