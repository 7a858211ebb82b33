#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "rwa/bounds.hpp"
#include "rwa/format.hpp"
#include "rwa/plot.hpp"
#include "rwa/sweep.hpp"

namespace {

using namespace rwa;

// stdout by default, file when --out was given
struct OutStream {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file)
                throw ValidationError("cannot open output file '" + path + "'");
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

std::string fmt_complex_cell(const Complex& z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

int run_basis(const std::string& spin, int n_max, bool describe,
              const std::string& out_path) {
    const SectorDims dims(parse_half_integer_twice(spin), n_max);
    OutStream os(out_path);
    if (!describe) {
        os.out() << "twice_spin,n_max,dim\n"
                 << dims.twice_spin << ',' << dims.n_max << ',' << dims.dim()
                 << '\n';
        return 0;
    }
    os.out() << "idx,m_twice,n\n";
    for (int i = 0; i < dims.dim(); ++i) {
        const auto [tm, n] = dims.labels_of(i);
        os.out() << i << ',' << tm << ',' << n << '\n';
    }
    return 0;
}

int run_hamiltonian(const std::string& model, const std::string& spin, int n_max,
                    double omega, double lambda, double delta,
                    const std::string& out_path) {
    const SectorDims dims(parse_half_integer_twice(spin), n_max);
    const ModelParams params{omega, lambda, delta};
    Matrix h;
    if (model == "dicke")
        h = build_dicke(dims, params);
    else if (model == "tc")
        h = build_tavis_cummings(dims, params);
    else if (model == "h0")
        h = build_h0(dims, params);
    else
        throw ValidationError("model must be dicke, tc, or h0");

    OutStream os(out_path);
    os.out() << "row,col,re,im\n";
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < h.cols(); ++c)
            if (h(r, c) != Complex(0.0, 0.0))
                os.out() << r << ',' << c << ',' << fmt_complex_cell(h(r, c))
                         << '\n';
    return 0;
}

int run_bethe(const std::string& spin, int excitations, double tol,
              const std::string& out_path) {
    BetheConfig config;
    config.tol_residual = tol;
    const BetheRoots roots =
        solve_bethe(parse_half_integer_twice(spin), excitations, nullptr, config);
    OutStream os(out_path);
    os.out() << "idx,re,im\n";
    for (int i = 0; i < roots.roots.size(); ++i)
        os.out() << i << ',' << fmt_complex_cell(roots.roots[i]) << '\n';
    os.out() << "# residual_norm," << format_double(roots.residual_norm) << '\n';
    os.out() << "# iterations," << roots.iterations << '\n';
    return 0;
}

int run_eigenstate(const std::string& spin, int excitations, double omega,
                   double lambda, int n_max, const std::string& out_path) {
    const int ts = parse_half_integer_twice(spin);
    const ModelParams params{omega, lambda, 0.0};
    const SectorDims dims(ts, n_max > 0 ? n_max : default_cutoff(ts, excitations));
    const BetheRoots roots = solve_bethe(ts, excitations);
    const TCEigenstate eig = build_eigenstate(ts, excitations, roots, dims, params);

    OutStream os(out_path);
    os.out() << "m_twice,n,re,im\n";
    for (int n = eig.n_lo; n <= eig.excitations; ++n) {
        const int tm = 2 * (eig.excitations - n) - ts;
        const Complex amp = eig.state[dims.index_of(tm, n)];
        os.out() << tm << ',' << n << ',' << fmt_complex_cell(amp) << '\n';
    }
    os.out() << "# energy," << format_double(eig.energy) << '\n';
    os.out() << "# residual," << format_double(eig.residual) << '\n';
    return 0;
}

int run_error(const std::string& spin, int excitations, double omega,
              double lambda, double t, int n_max, bool with_oracle) {
    const int ts = parse_half_integer_twice(spin);
    const ModelParams params{omega, lambda, 0.0};
    const SectorDims dims(ts, n_max > 0 ? n_max : default_cutoff(ts, excitations));
    const BetheRoots roots = solve_bethe(ts, excitations);
    const TCEigenstate eig = build_eigenstate(ts, excitations, roots, dims, params);

    std::cout << "error=" << format_double(
                     exact_rwa_error(dims, params, t, eig.state))
              << '\n';
    std::cout << "truncation_ratio="
              << format_double(truncation_check(dims, params, t, eig.state))
              << '\n';
    if (with_oracle) {
        const Matrix h = build_dicke(dims, params);
        const double h_scale = h.cwiseAbs().maxCoeff();
        const int steps =
            std::max(1000, int(std::ceil(1000.0 * h_scale * std::abs(t))));
        const OdeResult ode = ode_oracle(h, t, eig.state, steps);
        const Vector spectral = spectral_propagate(h, t, eig.state);
        std::cout << "oracle_deviation="
                  << format_double((spectral - ode.state).norm()) << '\n';
        std::cout << "oracle_norm_drift=" << format_double(ode.norm_drift)
                  << '\n';
    }
    return 0;
}

int run_bound(const std::string& variant_str, const std::string& spin,
              int excitations, double omega, double lambda, double t,
              double delta, bool compare_exact, const std::string& mproj,
              int photons, int n_spins, const std::string& out_path) {
    const int ts = parse_half_integer_twice(spin);
    const BoundVariant variant = variant_from_name(variant_str);
    const ModelParams params{omega, lambda, delta};
    ModelParams resonant = params;
    resonant.delta = 0.0;

    BoundReport rep;
    std::optional<double> exact;

    if (variant == BoundVariant::DickeFock) {
        const int tm = parse_half_integer_twice(mproj);
        rep = dicke_fock_bound(ts, tm, photons, params, t);
        if (compare_exact) {
            const int m_eff = (ts + tm) / 2 + photons;
            const SectorDims dims(ts, default_cutoff(ts, m_eff));
            Vector psi = Vector::Zero(dims.dim());
            psi[dims.index_of(tm, photons)] = 1.0;
            exact = exact_rwa_error(dims, params, t, psi);
        }
    } else if (variant == BoundVariant::AnalyticClosedForm ||
               variant == BoundVariant::Scaling) {
        rep = (variant == BoundVariant::Scaling)
                  ? scaling_bound(ts, excitations, params, t)
                  : analytic_bound(ts, excitations, params, t);
        if (compare_exact) {
            const SectorDims dims(ts, default_cutoff(ts, excitations));
            const BetheRoots roots = solve_bethe(ts, excitations);
            const TCEigenstate eig =
                build_eigenstate(ts, excitations, roots, dims, resonant);
            exact = exact_rwa_error(dims, params, t, eig.state);
        }
    } else {
        const SectorDims dims(ts, default_cutoff(ts, excitations));
        const BetheRoots roots = solve_bethe(ts, excitations);
        const TCEigenstate eig =
            build_eigenstate(ts, excitations, roots, dims, resonant);
        switch (variant) {
        case BoundVariant::General:
            rep = general_bound(eig, params, t);
            break;
        case BoundVariant::Intermediate:
            rep = intermediate_bound(dims, eig.state, resonant, t);
            break;
        case BoundVariant::WorstCase:
            rep = worst_case_bound(dims, eig.state, resonant, t,
                                   n_spins > 0 ? n_spins : ts);
            break;
        case BoundVariant::OffResonant:
            rep = off_resonant_bound(eig, params, t);
            break;
        default:
            throw ValidationError("variant '" + variant_str +
                                  "' is not available from the command line");
        }
        if (compare_exact)
            exact = exact_rwa_error(dims, params, t, eig.state);
    }

    if (exact)
        attach_exact(rep, *exact);
    if (rep.min_sign != 0)
        std::cerr << "min_sign=" << (rep.min_sign > 0 ? '+' : '-') << '\n';

    OutStream os(out_path);
    os.out() << "variant,first_term,second_term,extra_term,total,exact_error,ratio\n";
    os.out() << variant_name(rep.variant) << ',' << format_double(rep.first_term)
             << ',' << format_double(rep.second_term) << ','
             << format_double(rep.extra_term) << ',' << format_double(rep.total)
             << ',';
    if (rep.exact_error) {
        os.out() << format_double(*rep.exact_error) << ','
                 << format_double(rep.total / *rep.exact_error);
    } else {
        os.out() << ',';
    }
    os.out() << '\n';
    return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_override) {
    SweepConfig config = parse_sweep_config(config_path);
    if (!out_override.empty())
        config.out_path = out_override;
    const std::vector<SweepRow> rows = run_sweep(config);
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file '" + config.out_path + "'");
    write_sweep_csv(out, config, rows);
    std::cerr << "wrote " << rows.size() << " rows to " << config.out_path << '\n';
    return 0;
}

int run_verify(const std::vector<std::string>& suites) {
    const auto reports = verify_suites(suites);
    bool failed = false;
    for (const auto& r : reports) {
        std::cout << "suite " << r.name << ": " << r.checks << " checks, "
                  << r.failures << " failures, worst margin "
                  << format_double(r.worst_margin + 0.0) << " (" << r.detail
                  << ")\n";
        if (r.failures > 0)
            failed = true;
    }
    return failed ? 4 : 0;
}

int run_plot(const std::string& in_path, const std::string& out_path,
             const std::string& x_col, const std::vector<std::string>& y_cols,
             bool log_x, bool log_y) {
    const Table table = read_csv_file(in_path);
    PlotSpec spec;
    spec.x_col = x_col;
    spec.y_cols = y_cols;
    spec.log_x = log_x;
    spec.log_y = log_y;
    const std::string svg = emit_plot(table, spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file '" + out_path + "'");
    out << svg;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotating-wave approximation error analysis for collective "
                 "spin-boson dynamics"};
    app.require_subcommand(1);

    std::string spin = "1/2", model = "dicke", variant = "general";
    std::string mproj = "-1/2";
    std::string config_path, in_path, out_path, x_col;
    std::vector<std::string> y_cols, suites;
    int excitations = 0, n_max = 0, photons = 0, n_spins = 0;
    double omega = 1.0, lambda = 0.0, delta = 0.0, t = 0.0, tol = 1e-12;
    bool describe = false, with_oracle = false, compare_exact = false;
    bool log_x = false, log_y = false;

    auto* basis = app.add_subcommand("basis", "Describe the sector basis order");
    basis->add_option("--spin", spin, "Total spin S (e.g. 5, 2.5, 5/2)")->required();
    basis->add_option("--nmax", n_max, "Photon cutoff")->required();
    basis->add_flag("--describe", describe, "One line per basis index");
    basis->add_option("--out", out_path, "Output file (default stdout)");

    auto* ham = app.add_subcommand("hamiltonian", "Dump a Hamiltonian as sparse CSV");
    ham->add_option("--model", model, "dicke | tc | h0")->required();
    ham->add_option("--spin", spin)->required();
    ham->add_option("--nmax", n_max)->required();
    ham->add_option("--omega", omega)->required();
    ham->add_option("--lambda", lambda)->required();
    ham->add_option("--delta", delta);
    ham->add_option("--out", out_path);

    auto* bethe = app.add_subcommand("bethe", "Solve the root equations");
    bethe->add_option("--spin", spin)->required();
    bethe->add_option("--excitations", excitations)->required();
    bethe->add_option("--tol", tol, "Residual tolerance");
    bethe->add_option("--out", out_path);

    auto* eig = app.add_subcommand("eigenstate", "Construct an eigenstate of the rotating model");
    eig->add_option("--spin", spin)->required();
    eig->add_option("--excitations", excitations)->required();
    eig->add_option("--omega", omega)->required();
    eig->add_option("--lambda", lambda)->required();
    eig->add_option("--nmax", n_max, "Photon cutoff (default 2(M+2S))");
    eig->add_option("--out", out_path);

    auto* err = app.add_subcommand("error", "Exact norm difference of the two evolutions");
    err->add_option("--spin", spin)->required();
    err->add_option("--excitations", excitations)->required();
    err->add_option("--omega", omega)->required();
    err->add_option("--lambda", lambda)->required();
    err->add_option("--time", t)->required();
    err->add_option("--nmax", n_max);
    err->add_flag("--oracle", with_oracle, "Cross-check with the RK4 integrator");

    auto* bnd = app.add_subcommand("bound", "Evaluate an analytic error bound");
    bnd->add_option("--variant", variant,
                    "general | intermediate | worst | analytic | scaling | dickefock | offres")
        ->required();
    bnd->add_option("--spin", spin)->required();
    bnd->add_option("--excitations", excitations);
    bnd->add_option("--omega", omega)->required();
    bnd->add_option("--lambda", lambda)->required();
    bnd->add_option("--time", t)->required();
    bnd->add_option("--delta", delta);
    bnd->add_option("--mproj", mproj, "Spin projection m (dickefock)");
    bnd->add_option("--photons", photons, "Photon index n (dickefock)");
    bnd->add_option("--nspins", n_spins, "Spin count N >= 2S (worst)");
    bnd->add_flag("--compare-exact", compare_exact, "Also compute the exact error");
    bnd->add_option("--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a config file");
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--out", out_path, "Override the config's output path");

    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", suites, "basis | unitarity | eigenstates | lemmas | bounds | all")
        ->required();

    auto* plot = app.add_subcommand("plot", "Render a sweep CSV as an SVG chart");
    plot->add_option("--in", in_path)->required();
    plot->add_option("--out", out_path)->required();
    plot->add_option("--x", x_col, "x column (default: first)");
    plot->add_option("--y", y_cols, "y columns (default: every numeric column)");
    plot->add_flag("--logx", log_x);
    plot->add_flag("--logy", log_y);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed())
            return run_basis(spin, n_max, describe, out_path);
        if (ham->parsed())
            return run_hamiltonian(model, spin, n_max, omega, lambda, delta, out_path);
        if (bethe->parsed())
            return run_bethe(spin, excitations, tol, out_path);
        if (eig->parsed())
            return run_eigenstate(spin, excitations, omega, lambda, n_max, out_path);
        if (err->parsed())
            return run_error(spin, excitations, omega, lambda, t, n_max, with_oracle);
        if (bnd->parsed())
            return run_bound(variant, spin, excitations, omega, lambda, t, delta,
                             compare_exact, mproj, photons, n_spins, out_path);
        if (sweep->parsed())
            return run_sweep_cmd(config_path, out_path);
        if (verify->parsed())
            return run_verify(suites);
        if (plot->parsed())
            return run_plot(in_path, out_path, x_col, y_cols, log_x, log_y);
    } catch (const rwa::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rwa::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
