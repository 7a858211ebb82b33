#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rwa/bounds.hpp"

namespace rwa {

enum class SweepAxis { S, M, t, omega, lambda };

std::string axis_name(SweepAxis axis);

struct SweepConfig {
    SweepAxis axis = SweepAxis::t;
    bool log_scale = false;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool axis_phase_unit = false; // t axis given as omega*t

    // fixed point in parameter space (the swept field is ignored)
    int twice_spin = 1;
    int excitations = 0;
    double omega = 0.0;
    double lambda = 0.0;
    double time_value = 0.0;
    bool time_is_phase = false; // time_value holds omega*t
    double delta = 0.0;
    int n_max_override = 0; // 0 = auto 2(M+2S)

    std::vector<BoundVariant> variants;
    bool include_exact = true;
    std::string out_path;

    std::vector<double> axis_values() const; // validated grid
};

struct SweepRow {
    double axis_value = 0.0;
    std::optional<double> exact;
    std::vector<std::optional<double>> variant_totals;
    std::optional<double> bethe_residual;
    std::optional<double> truncation_ratio;
    std::string status = "ok";
};

SweepConfig parse_sweep_config_text(const std::string& text);
SweepConfig parse_sweep_config(const std::string& path);

// Evaluate every axis point: Bethe roots (standard guess first, previous
// point's roots as rescue), eigenstate, requested bounds, exact error and
// truncation diagnostic. Point failures land in the row's status column;
// the sweep itself continues. Points run concurrently under RWA_THREADS.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows);

struct SuiteReport {
    std::string name;
    int checks = 0;
    int failures = 0;
    // Smallest remaining slack across the suite's inequalities; negative
    // means the worst check failed by that much.
    double worst_margin = 0.0;
    std::string detail;
};

// Registered property suites: basis, unitarity, eigenstates, lemmas, bounds.
// "all" expands to every suite. Fixed seeds; deterministic.
std::vector<SuiteReport> verify_suites(const std::vector<std::string>& names);

// RWA_THREADS cap (0 or unset = hardware concurrency).
int thread_budget();

} // namespace rwa
