#pragma once

#include <filesystem>

#include "config.hpp"

namespace repgas::tools {

// Subcommand bodies.  Each returns the process exit code: 0 when every check
// in the run passes, 1 when any fails.  Configuration and IO problems are
// thrown (ConfigError and friends) and mapped to exit 2 by the entry point.
//
// CSV artifacts are written under `out_dir` (created if missing) with a
// header row, 17-significant-digit values, and LF line endings.

// Partition scan over the activity disk |lambda| <= fraction/(e B_R); writes
// zscan.csv.  A grid point passes when the truncated sum is certified away
// from zero (|Z_K| > tail) and |log Z| <= volume/B_R + log_bound tolerance.
int cmd_zscan(const RunConfig& config, const std::filesystem::path& out_dir);

// Density and partition identities at the configured probe point; writes
// identity.csv with one row per check (the recursive integral identity, the
// partial-pin partition identity per threshold, and the density
// representation of Z).
int cmd_identity(const RunConfig& config, const std::filesystem::path& out_dir);

// Contraction functional G over a uniform grid of [0, 1/B_R]; writes
// contraction.csv.  Rows pass while G(z) <= 1 + contraction tolerance.
int cmd_contraction(const RunConfig& config,
                    const std::filesystem::path& out_dir);

// Exact hypergraph gas analysis of an edge-list file: independence
// polynomial coefficients, activity zeros against the 1/(e(Delta+1)) disk,
// and, for connected graphs with at most 4 vertices, the continuum
// cross-check of the interval embedding at lambda in {0.1, 0.1 + 0.1i}.
// `range` is the embedding's interaction range.
int cmd_hypergraph(const std::filesystem::path& graph_file, double range,
                   const std::filesystem::path& out_dir);

// Prints the derived scales of a configuration (B_R, region volume, disk
// radius, default truncation) to stdout.
int cmd_info(const RunConfig& config);

}  // namespace repgas::tools
