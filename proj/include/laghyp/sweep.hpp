#pragma once

#include "laghyp/catalog.hpp"
#include "laghyp/config.hpp"
#include "laghyp/uncertainty.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laghyp {

/// Deterministic parallel map: fn(i) for i in [0, n), any thread count;
/// each index owns its output slot so results are identical for any
/// worker count.
void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn);

struct SweepRow {
    std::string entry_id;
    double alpha = 0.0, p = 0.0, a = 0.0, b = 0.0;
    TheoremId theorem = TheoremId::T15;
    bool admissible = false;
    double norm_p = 0.0, wnorm_space = 0.0, wnorm_dual = 0.0;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
    double plancherel_defect = 0.0, scale_defect = 0.0;
    std::string error;
};

std::string csv_header();
std::string csv_format_row(const SweepRow& row);

/// All sweep rows for the config, sorted lexicographically by
/// (entry, alpha, p, a, b, theorem). Byte-identical output for any
/// thread count.
std::vector<SweepRow> compute_sweep_rows(const SweepConfig& cfg, int threads);

/// `sweep` subcommand: rows to out_dir/sweep.csv plus two-column plot
/// data files. Returns the process exit code.
int run_sweep(const SweepConfig& cfg, std::ostream& log);

/// `selftest` subcommand: the module invariant suites, one pass/fail
/// line each. Returns 0 iff everything passed.
int run_selftest(const SweepConfig& cfg, std::ostream& out);

/// `constants` subcommand: closed-form and constructive constants at
/// the given parameters, with provenance and hypothesis flags.
int run_constants(double alpha, std::optional<double> a, std::optional<double> b,
                  std::optional<double> p, std::ostream& out);

} // namespace laghyp
