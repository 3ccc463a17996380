#include "config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "repgas/errors.hpp"

namespace repgas::tools {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Raw key-value view of the file plus consumption tracking, so every key the
// schema does not ask for can be reported as unknown.
class RawConfig {
 public:
  explicit RawConfig(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          fail(lineno, "unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty()) fail(lineno, "empty section name");
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) fail(lineno, "expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail(lineno, "empty key");
      if (section.empty()) fail(lineno, "key outside any [section]");
      if (!entries_[section].emplace(key, value).second)
        fail(lineno, "duplicate key " + section + "." + key);
    }
  }

  const std::string* find(const std::string& section, const std::string& key) {
    auto s = entries_.find(section);
    if (s == entries_.end()) return nullptr;
    auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    consumed_.insert({section, key});
    return &k->second;
  }

  void reject_unknown() const {
    for (const auto& [section, keys] : entries_)
      for (const auto& [key, value] : keys)
        if (consumed_.count({section, key}) == 0)
          throw ConfigError("unknown config key " + section + "." + key +
                            " in " + path_);
  }

 private:
  [[noreturn]] void fail(int lineno, const std::string& message) const {
    throw ConfigError(path_ + ":" + std::to_string(lineno) + ": " + message);
  }

  std::string path_;
  std::map<std::string, std::map<std::string, std::string>> entries_;
  std::set<std::pair<std::string, std::string>> consumed_;
};

[[noreturn]] void bad_value(const std::string& section, const std::string& key,
                            const std::string& raw, const char* expected) {
  throw ConfigError("config key " + section + "." + key + ": expected " +
                    expected + ", got \"" + raw + "\"");
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& raw) {
  try {
    std::size_t used = 0;
    double v = std::stod(raw, &used);
    if (used != raw.size()) bad_value(section, key, raw, "a number");
    return v;
  } catch (const std::logic_error&) {
    bad_value(section, key, raw, "a number");
  }
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         double& out) {
  if (const std::string* v = raw.find(section, key))
    out = parse_double(section, key, *v);
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         int& out) {
  if (const std::string* v = raw.find(section, key)) {
    double d = parse_double(section, key, *v);
    if (d != static_cast<int>(d)) bad_value(section, key, *v, "an integer");
    out = static_cast<int>(d);
  }
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         std::uint64_t& out) {
  if (const std::string* v = raw.find(section, key)) {
    try {
      std::size_t used = 0;
      unsigned long long u = std::stoull(*v, &used);
      if (used != v->size()) bad_value(section, key, *v, "an unsigned integer");
      out = u;
    } catch (const std::logic_error&) {
      bad_value(section, key, *v, "an unsigned integer");
    }
  }
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         std::string& out) {
  if (const std::string* v = raw.find(section, key)) out = *v;
}

std::vector<double> parse_list(const std::string& section,
                               const std::string& key,
                               const std::string& raw) {
  std::string body = trim(raw);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    bad_value(section, key, raw, "a [bracketed, comma-separated] list");
  body = trim(body.substr(1, body.size() - 2));
  std::vector<double> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_double(section, key, trim(item)));
  return out;
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         std::vector<double>& out) {
  if (const std::string* v = raw.find(section, key))
    out = parse_list(section, key, *v);
}

void get(RawConfig& raw, const std::string& section, const std::string& key,
         std::optional<std::vector<double>>& out) {
  if (const std::string* v = raw.find(section, key))
    out = parse_list(section, key, *v);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
  RawConfig raw(path);
  RunConfig c;

  get(raw, "space", "kind", c.space.kind);
  get(raw, "space", "dimension", c.space.dimension);
  get(raw, "space", "lower", c.space.lower);
  get(raw, "space", "upper", c.space.upper);
  get(raw, "space", "file", c.space.file);
  get(raw, "space", "range", c.space.range);

  get(raw, "region", "lower", c.region.lower);
  get(raw, "region", "upper", c.region.upper);

  get(raw, "potential", "kind", c.potential.kind);
  get(raw, "potential", "k", c.potential.k);
  get(raw, "potential", "r", c.potential.r);
  get(raw, "potential", "alpha", c.potential.alpha);
  get(raw, "potential", "range", c.potential.range);
  get(raw, "potential", "arity_cap", c.potential.arity_cap);

  get(raw, "activity", "fraction", c.activity.fraction);
  get(raw, "activity", "radial", c.activity.radial);
  get(raw, "activity", "angular", c.activity.angular);

  get(raw, "series", "truncation", c.series.truncation);
  get(raw, "series", "k_id", c.series.k_id);

  std::string scheme = "tensor_midpoint";
  get(raw, "quadrature", "scheme", scheme);
  if (scheme == "tensor_midpoint")
    c.quadrature.scheme = QuadratureSpec::Scheme::tensor_midpoint;
  else if (scheme == "quasi_random")
    c.quadrature.scheme = QuadratureSpec::Scheme::quasi_random;
  else
    throw ConfigError("quadrature.scheme must be tensor_midpoint or "
                      "quasi_random, got \"" + scheme + "\"");
  get(raw, "quadrature", "resolution", c.quadrature.resolution);
  get(raw, "quadrature", "budget", c.quadrature.budget);
  get(raw, "quadrature", "seed", c.quadrature.seed);

  get(raw, "identity", "probe", c.identity.probe);
  get(raw, "identity", "lambda_re", c.identity.lambda_re);
  get(raw, "identity", "lambda_im", c.identity.lambda_im);
  get(raw, "identity", "thresholds", c.identity.thresholds);

  get(raw, "contraction", "levels", c.contraction.levels);
  get(raw, "contraction", "grid", c.contraction.grid);

  get(raw, "tolerances", "log_bound", c.tolerances.log_bound);
  get(raw, "tolerances", "contraction", c.tolerances.contraction);
  get(raw, "tolerances", "tail", c.tolerances.tail);

  get(raw, "output", "directory", c.output_directory);

  raw.reject_unknown();

  const bool euclidean = c.space.kind == "euclidean_box";
  require(euclidean || c.space.kind == "hypergraph_intervals",
          "space.kind must be euclidean_box or hypergraph_intervals");
  if (euclidean) {
    require(c.space.dimension >= 1 && c.space.dimension <= kMaxDim,
            "space.dimension must be in [1, 4]");
    require(c.space.lower.size() == static_cast<std::size_t>(c.space.dimension) &&
                c.space.upper.size() == static_cast<std::size_t>(c.space.dimension),
            "space.lower and space.upper must have one entry per dimension");
    for (int i = 0; i < c.space.dimension; ++i)
      require(c.space.lower[static_cast<std::size_t>(i)] <
                  c.space.upper[static_cast<std::size_t>(i)],
              "space bounds must satisfy lower < upper on every axis");
  } else {
    require(!c.space.file.empty(), "space.file is required for "
                                   "hypergraph_intervals");
    require(c.space.range > 0.0, "space.range must be positive");
    require(!c.region.lower && !c.region.upper,
            "region overrides apply to euclidean boxes only");
  }
  require(c.region.lower.has_value() == c.region.upper.has_value(),
          "region.lower and region.upper must be given together");

  const std::string& pk = c.potential.kind;
  require(pk == "hard_sphere" || pk == "soft_sphere" || pk == "zero" ||
              pk == "hypergraph_pure_k",
          "potential.kind must be one of hard_sphere, soft_sphere, zero, "
          "hypergraph_pure_k");
  if (pk == "hard_sphere" || pk == "soft_sphere") {
    require(c.potential.k >= 2, "potential.k must be at least 2");
    require(c.potential.r > 0.0, "potential.r must be positive");
  }
  if (pk == "soft_sphere")
    require(c.potential.alpha > 0.0, "potential.alpha must be positive");
  if (pk == "zero")
    require(c.potential.range >= 0.0, "potential.range must be nonnegative");
  if (pk == "hypergraph_pure_k")
    require(!euclidean,
            "hypergraph_pure_k requires space.kind = hypergraph_intervals");
  require(c.potential.arity_cap >= 1, "potential.arity_cap must be positive");

  require(c.activity.fraction > 0.0 && c.activity.fraction < 1.0,
          "activity.fraction must lie strictly between 0 and 1");
  require(c.activity.radial >= 1 && c.activity.angular >= 1,
          "activity grid counts must be positive");

  require(c.series.truncation >= -1, "series.truncation must be >= -1");
  require(c.series.k_id >= 1, "series.k_id must be positive");

  require(c.quadrature.resolution >= 1, "quadrature.resolution must be positive");
  require(c.quadrature.budget >= 1, "quadrature.budget must be positive");

  const std::size_t probe_dim =
      euclidean ? static_cast<std::size_t>(c.space.dimension) : 1;
  require(c.identity.probe.size() == probe_dim,
          "identity.probe dimension must match the space");
  require(!c.identity.thresholds.empty(),
          "identity.thresholds must not be empty");

  require(c.contraction.levels >= 1 &&
              c.contraction.levels <= c.potential.arity_cap,
          "contraction.levels must be in [1, potential.arity_cap]");
  require(c.contraction.grid >= 2, "contraction.grid needs at least 2 points");

  require(c.tolerances.log_bound > 0.0 && c.tolerances.contraction > 0.0 &&
              c.tolerances.tail > 0.0,
          "tolerances must be positive");

  require(!c.output_directory.empty(), "output.directory must not be empty");
  return c;
}

Point point_from(const std::vector<double>& coords) {
  switch (coords.size()) {
    case 1: return Point{coords[0]};
    case 2: return Point{coords[0], coords[1]};
    case 3: return Point{coords[0], coords[1], coords[2]};
    case 4: return Point{coords[0], coords[1], coords[2], coords[3]};
    default: throw ConfigError("point needs 1 to 4 coordinates");
  }
}

Instance build_instance(const RunConfig& config) {
  std::shared_ptr<const MetricMeasureSpace> space;
  if (config.space.kind == "euclidean_box") {
    space = std::make_shared<const MetricMeasureSpace>(
        MetricMeasureSpace::euclidean_box(point_from(config.space.lower),
                                          point_from(config.space.upper)));
  } else {
    auto graph = std::make_shared<const Hypergraph>(
        Hypergraph::from_file(config.space.file));
    space = std::make_shared<const MetricMeasureSpace>(
        MetricMeasureSpace::hypergraph_intervals(graph, config.space.range));
  }

  Region region = config.region.lower
                      ? Region::box(point_from(*config.region.lower),
                                    point_from(*config.region.upper))
                      : space->carrier_region();

  const PotentialConfig& pc = config.potential;
  Potential potential = Potential::zero(*space);
  if (pc.kind == "hard_sphere")
    potential = Potential::hard_sphere(*space, pc.k, pc.r);
  else if (pc.kind == "soft_sphere")
    potential = Potential::soft_sphere(*space, pc.k, pc.r, pc.alpha);
  else if (pc.kind == "zero")
    potential = Potential::zero(*space, pc.range);
  else
    potential = Potential::hypergraph_pure(*space);
  potential = potential.with_arity_cap(pc.arity_cap);

  return Instance{std::move(space), std::move(region), std::move(potential)};
}

}  // namespace repgas::tools
