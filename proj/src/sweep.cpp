#include "rwa/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "rwa/format.hpp"

namespace rwa {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

SweepAxis axis_from_name(const std::string& name) {
    if (name == "S") return SweepAxis::S;
    if (name == "M") return SweepAxis::M;
    if (name == "t") return SweepAxis::t;
    if (name == "omega") return SweepAxis::omega;
    if (name == "lambda") return SweepAxis::lambda;
    throw ValidationError("unknown sweep axis '" + name + "'");
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("expected a boolean, got '" + v + "'");
}

std::string error_label(const std::exception& e) {
    if (dynamic_cast<const NonConvergence*>(&e)) return "NonConvergence";
    if (dynamic_cast<const SingularJacobian*>(&e)) return "SingularJacobian";
    if (dynamic_cast<const RootCollision*>(&e)) return "RootCollision";
    if (dynamic_cast<const ZeroRoot*>(&e)) return "ZeroRoot";
    if (dynamic_cast<const ResidualTooLarge*>(&e)) return "ResidualTooLarge";
    if (dynamic_cast<const NonRealEnergy*>(&e)) return "NonRealEnergy";
    if (dynamic_cast<const QuadratureError*>(&e)) return "QuadratureError";
    if (dynamic_cast<const CutoffTooSmall*>(&e)) return "CutoffTooSmall";
    if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
    if (dynamic_cast<const NumericalError*>(&e)) return "NumericalError";
    return "Error";
}

// One fully resolved sweep point.
struct PointSetup {
    double axis_value = 0.0;
    int twice_spin = 0;
    int excitations = 0;
    ModelParams params{1.0, 0.0, 0.0};
    double t = 0.0;
    int n_max = 0;
};

} // namespace

std::string axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::S: return "S";
    case SweepAxis::M: return "M";
    case SweepAxis::t: return "t";
    case SweepAxis::omega: return "omega";
    case SweepAxis::lambda: return "lambda";
    }
    throw ValidationError("unknown sweep axis");
}

std::vector<double> SweepConfig::axis_values() const {
    if (count < 2)
        throw ValidationError("sweep count must be at least 2");
    if (!(start < stop))
        throw ValidationError("sweep range must be increasing");
    if (log_scale && (start <= 0.0 || stop <= 0.0))
        throw ValidationError("log scale requires positive endpoints");

    std::vector<double> values(static_cast<size_t>(count));
    if (log_scale) {
        const double la = std::log10(start), lb = std::log10(stop);
        for (int i = 0; i < count; ++i)
            values[size_t(i)] =
                std::pow(10.0, la + (lb - la) * i / double(count - 1));
    } else {
        for (int i = 0; i < count; ++i)
            values[size_t(i)] = start + (stop - start) * i / double(count - 1);
    }

    for (double& v : values) {
        if (axis == SweepAxis::S) {
            const double twice = 2.0 * v;
            if (std::abs(twice - std::round(twice)) > 1e-9)
                throw ValidationError("S-axis grid point " + format_double(v) +
                                      " is not a half-integer");
            v = std::round(twice) / 2.0; // snap so CSV values are exact
        } else if (axis == SweepAxis::M) {
            if (std::abs(v - std::round(v)) > 1e-9)
                throw ValidationError("M-axis grid point " + format_double(v) +
                                      " is not an integer");
            v = std::round(v);
        }
    }
    return values;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
    SweepConfig cfg;
    cfg.variants = {BoundVariant::General, BoundVariant::Scaling};

    bool saw_axis = false, saw_start = false, saw_stop = false, saw_count = false;
    bool saw_spin = false, saw_exc = false, saw_omega = false, saw_lambda = false;
    bool saw_time = false, saw_path = false;

    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "sweep" && section != "fixed" && section != "output")
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": key outside any section");

        if (section == "sweep") {
            if (key == "axis") { cfg.axis = axis_from_name(value); saw_axis = true; }
            else if (key == "scale") {
                if (value == "linear") cfg.log_scale = false;
                else if (value == "log") cfg.log_scale = true;
                else throw ValidationError("scale must be linear or log");
            }
            else if (key == "start") { cfg.start = parse_double(value); saw_start = true; }
            else if (key == "stop") { cfg.stop = parse_double(value); saw_stop = true; }
            else if (key == "count") { cfg.count = int(parse_double(value)); saw_count = true; }
            else if (key == "unit") {
                if (value == "value") cfg.axis_phase_unit = false;
                else if (value == "phase") cfg.axis_phase_unit = true;
                else throw ValidationError("unit must be value or phase");
            }
            else throw ValidationError("unknown [sweep] key '" + key + "'");
        } else if (section == "fixed") {
            if (key == "spin") { cfg.twice_spin = parse_half_integer_twice(value); saw_spin = true; }
            else if (key == "excitations") { cfg.excitations = int(parse_double(value)); saw_exc = true; }
            else if (key == "omega") { cfg.omega = parse_double(value); saw_omega = true; }
            else if (key == "lambda") { cfg.lambda = parse_double(value); saw_lambda = true; }
            else if (key == "time") {
                if (saw_time) throw ValidationError("give either time or phase, not both");
                cfg.time_value = parse_double(value); cfg.time_is_phase = false; saw_time = true;
            }
            else if (key == "phase") {
                if (saw_time) throw ValidationError("give either time or phase, not both");
                cfg.time_value = parse_double(value); cfg.time_is_phase = true; saw_time = true;
            }
            else if (key == "delta") cfg.delta = parse_double(value);
            else if (key == "nmax") cfg.n_max_override = int(parse_double(value));
            else throw ValidationError("unknown [fixed] key '" + key + "'");
        } else { // output
            if (key == "variants") {
                cfg.variants.clear();
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ','))
                    cfg.variants.push_back(variant_from_name(trim(item)));
                if (cfg.variants.empty())
                    throw ValidationError("variants list is empty");
            }
            else if (key == "include_exact") cfg.include_exact = parse_bool(value);
            else if (key == "path") { cfg.out_path = value; saw_path = true; }
            else throw ValidationError("unknown [output] key '" + key + "'");
        }
    }

    if (!saw_axis) throw ValidationError("config is missing [sweep] axis");
    if (!saw_start || !saw_stop || !saw_count)
        throw ValidationError("config is missing the sweep range");
    if (!saw_path) throw ValidationError("config is missing [output] path");
    if (cfg.axis != SweepAxis::S && !saw_spin)
        throw ValidationError("config is missing [fixed] spin");
    if (cfg.axis != SweepAxis::M && !saw_exc)
        throw ValidationError("config is missing [fixed] excitations");
    if (cfg.axis != SweepAxis::omega && !saw_omega)
        throw ValidationError("config is missing [fixed] omega");
    if (cfg.axis != SweepAxis::lambda && !saw_lambda)
        throw ValidationError("config is missing [fixed] lambda");
    if (cfg.axis != SweepAxis::t && !saw_time)
        throw ValidationError("config is missing [fixed] time or phase");
    if (cfg.axis_phase_unit && cfg.axis != SweepAxis::t)
        throw ValidationError("unit = phase only applies to the t axis");

    for (BoundVariant v : cfg.variants)
        if (v == BoundVariant::DickeFock || v == BoundVariant::LinearCombination)
            throw ValidationError("variant '" + variant_name(v) +
                                  "' is not sweepable (needs product-state labels)");
    if (cfg.n_max_override < 0)
        throw ValidationError("nmax override must be non-negative");

    (void)cfg.axis_values(); // surface grid problems at parse time
    return cfg;
}

SweepConfig parse_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config_text(buf.str());
}

namespace {

PointSetup resolve_point(const SweepConfig& cfg, double axis_value) {
    PointSetup p;
    p.axis_value = axis_value;
    p.twice_spin = cfg.twice_spin;
    p.excitations = cfg.excitations;
    p.params.omega = cfg.omega;
    p.params.lambda = cfg.lambda;
    p.params.delta = cfg.delta;

    switch (cfg.axis) {
    case SweepAxis::S:
        p.twice_spin = int(std::lround(2.0 * axis_value));
        break;
    case SweepAxis::M:
        p.excitations = int(std::lround(axis_value));
        break;
    case SweepAxis::omega:
        p.params.omega = axis_value;
        break;
    case SweepAxis::lambda:
        p.params.lambda = axis_value;
        break;
    case SweepAxis::t:
        break;
    }

    if (cfg.axis == SweepAxis::t)
        p.t = cfg.axis_phase_unit ? axis_value / p.params.omega : axis_value;
    else
        p.t = cfg.time_is_phase ? cfg.time_value / p.params.omega : cfg.time_value;

    p.n_max = cfg.n_max_override > 0
                  ? cfg.n_max_override
                  : default_cutoff(p.twice_spin, p.excitations);
    return p;
}

} // namespace

int thread_budget() {
    int budget = 0;
    if (const char* env = std::getenv("RWA_THREADS"))
        budget = std::atoi(env);
    if (budget <= 0)
        budget = int(std::max(1u, std::thread::hardware_concurrency()));
    return budget;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    const std::vector<double> values = config.axis_values();
    const int n = int(values.size());

    // Root solving runs serially along the axis so the rescue chain (previous
    // point's roots as fallback guess) is well defined and deterministic.
    std::vector<PointSetup> setups;
    std::vector<std::optional<BetheRoots>> roots(static_cast<size_t>(n));
    std::vector<std::string> root_errors(static_cast<size_t>(n));
    setups.reserve(size_t(n));
    std::optional<BetheRoots> previous;
    for (int i = 0; i < n; ++i) {
        setups.push_back(resolve_point(config, values[size_t(i)]));
        const PointSetup& p = setups.back();
        try {
            roots[size_t(i)] = solve_bethe(p.twice_spin, p.excitations);
        } catch (const NumericalError& fresh_failure) {
            // Rescue with the previous point's roots when the shape matches
            // (same length, or one short along the M axis: pad with the last
            // component of the standard guess).
            bool rescued = false;
            if (previous && previous->twice_spin == p.twice_spin &&
                previous->excitations == p.excitations) {
                try {
                    roots[size_t(i)] =
                        solve_bethe(p.twice_spin, p.excitations, &previous->roots);
                    rescued = true;
                } catch (const NumericalError&) {
                }
            } else if (previous && previous->excitations == p.excitations - 1 &&
                       p.excitations >= 1) {
                Vector guess(p.excitations);
                guess.head(p.excitations - 1) = previous->roots;
                guess[p.excitations - 1] =
                    initial_guess(p.twice_spin, p.excitations)[p.excitations - 1];
                try {
                    roots[size_t(i)] =
                        solve_bethe(p.twice_spin, p.excitations, &guess);
                    rescued = true;
                } catch (const NumericalError&) {
                }
            }
            if (!rescued)
                root_errors[size_t(i)] = error_label(fresh_failure);
        }
        if (roots[size_t(i)])
            previous = roots[size_t(i)];
    }

    std::vector<SweepRow> rows(static_cast<size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n)
                return;
            const PointSetup& p = setups[size_t(i)];
            SweepRow& row = rows[size_t(i)];
            row.axis_value = p.axis_value;
            row.variant_totals.assign(config.variants.size(), std::nullopt);
            if (!roots[size_t(i)]) {
                row.status = root_errors[size_t(i)];
                continue;
            }
            try {
                const SectorDims dims(p.twice_spin, p.n_max);
                ModelParams resonant = p.params;
                resonant.delta = 0.0;
                const TCEigenstate eig = build_eigenstate(
                    p.twice_spin, p.excitations, *roots[size_t(i)], dims, resonant);
                row.bethe_residual = roots[size_t(i)]->residual_norm;

                if (config.include_exact)
                    row.exact =
                        exact_rwa_error(dims, p.params, p.t, eig.state);
                row.truncation_ratio =
                    truncation_check(dims, p.params, p.t, eig.state);

                for (size_t v = 0; v < config.variants.size(); ++v) {
                    BoundReport rep;
                    switch (config.variants[v]) {
                    case BoundVariant::General:
                        rep = general_bound(eig, resonant, p.t);
                        break;
                    case BoundVariant::Intermediate:
                        rep = intermediate_bound(dims, eig.state, resonant, p.t);
                        break;
                    case BoundVariant::WorstCase:
                        rep = worst_case_bound(dims, eig.state, resonant, p.t,
                                               p.twice_spin);
                        break;
                    case BoundVariant::AnalyticClosedForm:
                        rep = analytic_bound(p.twice_spin, p.excitations,
                                             resonant, p.t);
                        break;
                    case BoundVariant::Scaling:
                        rep = scaling_bound(p.twice_spin, p.excitations,
                                            resonant, p.t);
                        break;
                    case BoundVariant::OffResonant:
                        rep = off_resonant_bound(eig, p.params, p.t);
                        break;
                    default:
                        throw ValidationError("variant not sweepable");
                    }
                    row.variant_totals[v] = rep.total;
                }
            } catch (const std::exception& e) {
                row.status = error_label(e);
                row.exact.reset();
                row.truncation_ratio.reset();
            }
        }
    };

    const int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // rows were produced in axis order; keep the sort explicit for safety
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) {
                         return a.axis_value < b.axis_value;
                     });
    return rows;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows) {
    out << axis_name(config.axis);
    if (config.include_exact)
        out << ",exact_error";
    for (BoundVariant v : config.variants)
        out << ',' << variant_name(v);
    out << ",bethe_residual,truncation_ratio,status\n";

    auto cell = [&](const std::optional<double>& v) {
        out << ',';
        if (v)
            out << format_double(*v);
    };
    for (const SweepRow& row : rows) {
        out << format_double(row.axis_value);
        if (config.include_exact)
            cell(row.exact);
        for (const auto& v : row.variant_totals)
            cell(v);
        cell(row.bethe_residual);
        cell(row.truncation_ratio);
        out << ',' << row.status << '\n';
    }
}

// ---------------------------------------------------------------------------
// verification suites

namespace {

struct SuiteRun {
    SuiteReport report;
    void check(bool ok, double margin, const std::string& what) {
        ++report.checks;
        if (report.checks == 1 || margin < report.worst_margin) {
            report.worst_margin = margin;
            report.detail = what;
        }
        if (!ok) {
            ++report.failures;
            if (report.detail.find("FAILED") == std::string::npos ||
                margin <= report.worst_margin)
                report.detail = "FAILED: " + what;
        }
    }
};

Vector random_state(std::mt19937& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = Complex(normal(rng), normal(rng));
    return v / v.norm();
}

SuiteReport suite_basis() {
    SuiteRun run;
    run.report.name = "basis";
    for (const SectorDims dims : {SectorDims(1, 0), SectorDims(2, 3),
                                  SectorDims(5, 7), SectorDims(10, 12)}) {
        bool bijective = true;
        for (int i = 0; i < dims.dim(); ++i) {
            const auto [tm, n] = dims.labels_of(i);
            if (dims.index_of(tm, n) != i)
                bijective = false;
        }
        run.check(bijective, bijective ? 1.0 : -1.0, "index bijection");

        const auto spin = build_spin_operators(dims);
        const auto boson = build_boson_operators(dims);
        const double herm =
            std::max({(spin.sz - spin.sz.adjoint()).cwiseAbs().maxCoeff(),
                      (spin.ssq - spin.ssq.adjoint()).cwiseAbs().maxCoeff(),
                      (boson.nhat - boson.nhat.adjoint()).cwiseAbs().maxCoeff()});
        run.check(herm < 1e-13, 1e-13 - herm, "hermiticity of diagonals");
        const double adjoints =
            std::max((spin.splus - spin.sminus.adjoint()).cwiseAbs().maxCoeff(),
                     (boson.adag - boson.a.adjoint()).cwiseAbs().maxCoeff());
        run.check(adjoints == 0.0, -adjoints, "ladder adjoint pairing");

        const Matrix comm_z =
            spin.sz * spin.splus - spin.splus * spin.sz - spin.splus;
        const Matrix comm_pm =
            spin.splus * spin.sminus - spin.sminus * spin.splus - 2.0 * spin.sz;
        const double ladder = std::max(comm_z.cwiseAbs().maxCoeff(),
                                       comm_pm.cwiseAbs().maxCoeff());
        run.check(ladder < 1e-12, 1e-12 - ladder, "ladder algebra");
    }
    return run.report;
}

SuiteReport suite_unitarity() {
    SuiteRun run;
    run.report.name = "unitarity";
    std::mt19937 rng(12001);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int dim = 12;
    for (int rep = 0; rep < 100; ++rep) {
        Matrix a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                a(i, j) = Complex(normal(rng), normal(rng));
        const Matrix h = 0.5 * (a + a.adjoint());
        const Vector psi = random_state(rng, dim);
        const double t = 5.0 * std::uniform_real_distribution<double>()(rng);
        const double drift =
            std::abs(spectral_propagate(h, t, psi).norm() - 1.0);
        run.check(drift < 1e-11, 1e-11 - drift, "propagation norm drift");
    }
    spectral_cache_clear(); // the random matrices are one-shot
    return run.report;
}

SuiteReport suite_eigenstates() {
    SuiteRun run;
    run.report.name = "eigenstates";
    const ModelParams params{300.0, 0.3, 0.0};
    for (int ts = 1; ts <= 10; ++ts) {
        for (int m = 0; m <= 6; ++m) {
            try {
                const BetheRoots roots = solve_bethe(ts, m);
                const SectorDims dims(ts, default_cutoff(ts, m));
                const TCEigenstate eig =
                    build_eigenstate(ts, m, roots, dims, params);
                run.check(eig.residual < 1e-8, 1e-8 - eig.residual,
                          "eigen-residual 2S=" + std::to_string(ts) +
                              " M=" + std::to_string(m));
                const double cmax =
                    (eig.coefficients / eig.coefficients.norm())
                        .cwiseAbs()
                        .maxCoeff();
                run.check(cmax <= 1.0 + 1e-12, 1.0 + 1e-12 - cmax,
                          "normalized coefficient magnitude");
            } catch (const std::exception& e) {
                run.check(false, -1.0, std::string("construction threw: ") + e.what());
            }
        }
    }
    return run.report;
}

SuiteReport suite_lemmas() {
    SuiteRun run;
    run.report.name = "lemmas";
    std::mt19937 rng(52001);
    std::uniform_int_distribution<int> pick_k(1, 4);
    std::uniform_int_distribution<int> pick_dir(0, 1);

    // bosonic monomial bound: ||m^(k) psi|| <= ||sqrt((n+1)...(n+k)) psi||
    {
        const SectorDims dims(1, 14);
        const auto boson = build_boson_operators(dims);
        for (int rep = 0; rep < 200; ++rep) {
            const int k = pick_k(rng);
            Matrix mono = Matrix::Identity(dims.dim(), dims.dim());
            for (int f = 0; f < k; ++f)
                mono = (pick_dir(rng) ? boson.adag : boson.a) * mono;
            Vector psi = random_state(rng, dims.dim());
            for (int i = 0; i < dims.dim(); ++i) {
                const auto [tm, n] = dims.labels_of(i);
                (void)tm;
                if (n > dims.n_max - k)
                    psi[i] = 0.0;
            }
            psi /= psi.norm();
            Vector weighted = psi;
            for (int i = 0; i < dims.dim(); ++i) {
                const auto [tm, n] = dims.labels_of(i);
                (void)tm;
                double prod = 1.0;
                for (int f = 1; f <= k; ++f)
                    prod *= (n + f);
                weighted[i] *= std::sqrt(prod);
            }
            const double lhs = (mono * psi).norm();
            const double rhs = weighted.norm() + 1e-10;
            run.check(lhs <= rhs, rhs - lhs, "photon monomial bound");
        }
    }

    // photon growth under the rotating-frame flow: <n>_t <= <n>_0 + 2S
    {
        const SectorDims dims(4, 10);
        const ModelParams params{1.7, 0.4, 0.0};
        const auto boson = build_boson_operators(dims);
        std::uniform_real_distribution<double> pick_t(0.0, 5.0);
        for (int rep = 0; rep < 100; ++rep) {
            const Vector psi = random_state(rng, dims.dim());
            const double t = pick_t(rng);
            const Vector flow = rotating_frame_state(dims, params, t, psi);
            const double lhs = (flow.adjoint() * (boson.nhat * flow))(0).real();
            const double rhs =
                (psi.adjoint() * (boson.nhat * psi))(0).real() + 4.0 + 1e-9;
            run.check(lhs <= rhs, rhs - lhs, "photon growth bound");
        }
    }

    // free-energy conservation under the rotating-term flow
    {
        const SectorDims dims(3, 9);
        const ModelParams params{2.3, 0.7, 0.0};
        const Matrix h0 = build_h0(dims, params);
        const Matrix htc = build_tavis_cummings(dims, params);
        for (double t : {0.1 / params.omega, 1.0 / params.omega, 10.0 / params.omega}) {
            for (int rep = 0; rep < 10; ++rep) {
                const Vector psi = random_state(rng, dims.dim());
                const Vector psi_t = spectral_propagate(htc, t, psi);
                const double before = (psi.adjoint() * (h0 * psi))(0).real();
                const double after = (psi_t.adjoint() * (h0 * psi_t))(0).real();
                const double dev = std::abs(after - before);
                run.check(dev < 1e-9 * params.omega, 1e-9 * params.omega - dev,
                          "free-energy conservation");
            }
        }
    }

    // integrated action on the rotating-frame state vs the oscillating term
    {
        const ModelParams params{300.0, 0.3, 0.0};
        for (const auto& [ts, m] : std::vector<std::pair<int, int>>{
                 {1, 1}, {4, 3}, {10, 5}}) {
            const BetheRoots roots = solve_bethe(ts, m);
            const SectorDims dims(ts, default_cutoff(ts, m));
            const TCEigenstate eig = build_eigenstate(ts, m, roots, dims, params);
            for (double t : {M_PI / (8.0 * params.omega),
                             M_PI / (3.0 * params.omega), 1.0 / params.omega}) {
                const Vector flow =
                    rotating_frame_state(dims, params, t, eig.state);
                const double lhs =
                    integrated_action_norm(dims, params, t, flow);
                const double fc = std::min(f_C(dims, eig.state, +1),
                                           f_C(dims, eig.state, -1));
                const double rhs = params.lambda / params.omega *
                                       std::abs(std::sin(params.omega * t)) * fc +
                                   1e-10;
                run.check(lhs <= rhs, rhs - lhs, "integrated action vs first term");
            }
        }
    }
    return run.report;
}

SuiteReport suite_bounds() {
    SuiteRun run;
    run.report.name = "bounds";
    const ModelParams params{300.0, 0.3, 0.0};
    std::mt19937 rng(90001);

    for (int ts : {1, 2, 4}) {
        for (int m = 0; m <= 3; ++m) {
            const BetheRoots roots = solve_bethe(ts, m);
            const SectorDims dims(ts, default_cutoff(ts, m));
            const TCEigenstate eig = build_eigenstate(ts, m, roots, dims, params);
            const double t = M_PI / (4.0 * params.omega);

            const double exact = exact_rwa_error(dims, params, t, eig.state);
            const BoundReport gen = general_bound(eig, params, t);
            const BoundReport sca = scaling_bound(ts, m, params, t);
            run.check(exact <= gen.total + 1e-9, gen.total + 1e-9 - exact,
                      "exact below general");
            run.check(gen.total <= sca.total + 1e-9, sca.total + 1e-9 - gen.total,
                      "general below scaling");

            const auto [fc_env, fl_env] = analytic_fCfL(ts, m);
            const double fc_mat = std::max(f_C(dims, eig.state, +1),
                                           f_C(dims, eig.state, -1));
            const double fl_mat = f_L(dims, eig.state);
            run.check(fc_mat <= fc_env + 1e-9, fc_env + 1e-9 - fc_mat,
                      "closed-form envelope for f_C");
            run.check(fl_mat <= fl_env + 1e-9, fl_env + 1e-9 - fl_mat,
                      "closed-form envelope for f_L");

            // the reported sign attains the minimum
            const double other = (gen.min_sign == 1) ? f_C(dims, eig.state, -1)
                                                     : f_C(dims, eig.state, +1);
            const double won = std::min(f_C(dims, eig.state, +1),
                                        f_C(dims, eig.state, -1));
            run.check(won <= other + 1e-15, other - won, "minimizing sign reported");

            const BoundReport inter =
                intermediate_bound(dims, eig.state, params, t);
            const double rel =
                std::abs(inter.total - gen.total) / std::max(gen.total, 1e-300);
            run.check(rel < 1e-9, 1e-9 - rel,
                      "a-posteriori form collapses on eigenstates");
        }
    }

    // degree-1 homogeneity of the functionals
    {
        const SectorDims dims(3, 6);
        const Vector psi = random_state(rng, dims.dim());
        const Complex c(0.3, -1.2);
        const Vector scaled = c * psi;
        const double ac = std::abs(c);
        for (int sign : {1, -1}) {
            const double dev =
                std::abs(f_C(dims, scaled, sign) - ac * f_C(dims, psi, sign));
            run.check(dev < 1e-12 * std::max(1.0, ac * f_C(dims, psi, sign)),
                      1e-12 - dev, "f_C homogeneity");
        }
        const double dev_l = std::abs(f_L(dims, scaled) - ac * f_L(dims, psi));
        run.check(dev_l < 1e-11 * f_L(dims, psi), 1e-11 - dev_l, "f_L homogeneity");
        const double dev_d = std::abs(f_d(dims, scaled) - ac * f_d(dims, psi));
        run.check(dev_d < 1e-12 * std::max(1.0, f_d(dims, psi)), 1e-12 - dev_d,
                  "f_d homogeneity");
    }
    return run.report;
}

} // namespace

std::vector<SuiteReport> verify_suites(const std::vector<std::string>& names) {
    std::vector<std::string> expanded;
    for (const std::string& name : names) {
        if (name == "all") {
            for (const char* s : {"basis", "unitarity", "eigenstates", "lemmas", "bounds"})
                expanded.push_back(s);
        } else {
            expanded.push_back(name);
        }
    }
    std::vector<SuiteReport> reports;
    for (const std::string& name : expanded) {
        if (name == "basis") reports.push_back(suite_basis());
        else if (name == "unitarity") reports.push_back(suite_unitarity());
        else if (name == "eigenstates") reports.push_back(suite_eigenstates());
        else if (name == "lemmas") reports.push_back(suite_lemmas());
        else if (name == "bounds") reports.push_back(suite_bounds());
        else throw ValidationError("unknown verification suite '" + name + "'");
    }
    return reports;
}

} // namespace rwa
