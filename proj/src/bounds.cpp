#include "rwa/bounds.hpp"

#include <cmath>

namespace rwa {

namespace {

double sq(double x) { return x * x; }

void finish(BoundReport& r) {
    r.total = r.first_term + r.second_term + r.extra_term;
}

// Diagonal polynomial of the photon number: prod_j (nhat + offsets[j]).
Vector apply_photon_shift(const SectorDims& dims, const Vector& psi,
                          std::initializer_list<double> offsets) {
    Vector out = psi;
    for (int i = 0; i < out.size(); ++i) {
        const auto [tm, n] = dims.labels_of(i);
        (void)tm;
        double f = 1.0;
        for (double off : offsets)
            f *= (n + off);
        out[i] *= f;
    }
    return out;
}

} // namespace

std::string variant_name(BoundVariant v) {
    switch (v) {
    case BoundVariant::General: return "general";
    case BoundVariant::Intermediate: return "intermediate";
    case BoundVariant::WorstCase: return "worst";
    case BoundVariant::AnalyticClosedForm: return "analytic";
    case BoundVariant::Scaling: return "scaling";
    case BoundVariant::DickeFock: return "dickefock";
    case BoundVariant::LinearCombination: return "lincomb";
    case BoundVariant::OffResonant: return "offres";
    }
    throw ValidationError("unknown bound variant");
}

BoundVariant variant_from_name(const std::string& name) {
    for (BoundVariant v :
         {BoundVariant::General, BoundVariant::Intermediate, BoundVariant::WorstCase,
          BoundVariant::AnalyticClosedForm, BoundVariant::Scaling,
          BoundVariant::DickeFock, BoundVariant::LinearCombination,
          BoundVariant::OffResonant})
        if (variant_name(v) == name)
            return v;
    throw ValidationError("unknown bound variant '" + name + "'");
}

double f_C(const SectorDims& dims, const Vector& psi, int sign) {
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    if (sign != 1 && sign != -1)
        throw ValidationError("f_C sign must be +1 or -1");
    const auto spin = build_spin_operators(dims);
    const Matrix& ladder = (sign == 1) ? spin.splus : spin.sminus;
    const double casimir_term = (spin.ssq * psi - spin.sz * (spin.sz * psi)).norm();
    const double ladder_term = (ladder * (ladder * psi)).norm();
    const double photon = apply_photon_shift(dims, psi, {2.0}).norm();
    return std::sqrt(2.0 * casimir_term + 2.0 * ladder_term) * std::sqrt(photon);
}

double f_L(const SectorDims& dims, const Vector& psi) {
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    const auto spin = build_spin_operators(dims);
    const auto chain = [&](const Matrix& a, const Matrix& b, const Matrix& c,
                           const Matrix& d) {
        return std::sqrt((a * (b * (c * (d * psi)))).norm());
    };
    const Matrix& sp = spin.splus;
    const Matrix& sm = spin.sminus;
    const double spin_sum = chain(sp, sm, sp, sm)   // (S+S-)^2
                          + chain(sm, sp, sm, sp)   // (S-S+)^2
                          + chain(sp, sp, sm, sm)   // (S+)^2 (S-)^2
                          + chain(sm, sm, sp, sp);  // (S-)^2 (S+)^2
    const double photon = apply_photon_shift(dims, psi, {4.0, 4.0}).norm();
    return spin_sum * std::sqrt(photon);
}

double f_d(const SectorDims& dims, const Vector& psi) {
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    const auto spin = build_spin_operators(dims);
    const double spin_sum = std::sqrt((spin.splus * (spin.sminus * psi)).norm()) +
                            std::sqrt((spin.sminus * (spin.splus * psi)).norm());
    const double photon = apply_photon_shift(dims, psi, {1.0}).norm();
    return spin_sum * std::sqrt(photon);
}

BoundReport general_bound(const TCEigenstate& eig, const ModelParams& params,
                          double t) {
    params.validate();
    if (params.delta != 0.0)
        throw ValidationError(
            "general bound assumes zero detuning; use the offres variant");
    BoundReport r;
    r.variant = BoundVariant::General;
    r.params = params;
    r.twice_spin = eig.twice_spin;
    r.excitations = eig.excitations;
    r.t = t;

    const double fc_plus = f_C(eig.dims, eig.state, +1);
    const double fc_minus = f_C(eig.dims, eig.state, -1);
    r.min_sign = (fc_plus <= fc_minus) ? +1 : -1;
    const double fc = std::min(fc_plus, fc_minus);
    const double ratio = params.lambda / params.omega;
    r.first_term = ratio * std::abs(std::sin(params.omega * t)) * fc;
    r.second_term =
        3.0 * std::abs(t) * params.lambda * ratio * f_L(eig.dims, eig.state);
    finish(r);
    return r;
}

BoundReport intermediate_bound(const SectorDims& dims, const Vector& psi,
                               const ModelParams& params, double t,
                               int quad_steps) {
    params.validate();
    if (quad_steps < 1)
        throw ValidationError("quadrature needs at least one panel");
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    BoundReport r;
    r.variant = BoundVariant::Intermediate;
    r.params = params;
    r.twice_spin = dims.twice_spin;
    r.t = t;

    const double ratio = params.lambda / params.omega;
    const Vector psi_t = rotating_frame_state(dims, params, t, psi);
    const double fc_plus = f_C(dims, psi_t, +1);
    const double fc_minus = f_C(dims, psi_t, -1);
    r.min_sign = (fc_plus <= fc_minus) ? +1 : -1;
    r.first_term = ratio * std::abs(std::sin(params.omega * t)) *
                   std::min(fc_plus, fc_minus);

    if (t == 0.0) {
        r.first_term = 0.0;
        r.second_term = 0.0;
        finish(r);
        return r;
    }

    // Composite Simpson over [0, t] of f_L along the rotating-frame flow;
    // evaluate on a shared node grid so the halved run reuses nothing stale.
    auto integrand = [&](double s) {
        return f_L(dims, rotating_frame_state(dims, params, s, psi));
    };
    auto simpson = [&](int panels) {
        const double h = t / panels;
        double acc = 0.0;
        for (int i = 0; i < panels; ++i) {
            const double a = i * h;
            acc += (h / 6.0) *
                   (integrand(a) + 4.0 * integrand(a + 0.5 * h) + integrand(a + h));
        }
        return acc;
    };
    const double coarse = simpson(quad_steps);
    const double fine = simpson(2 * quad_steps);
    r.quadrature_error =
        std::abs(coarse - fine) / std::max(std::abs(fine), 1e-300);
    if (r.quadrature_error > 1e-6)
        throw QuadratureError("Simpson step-halving changed the bound integral by " +
                              std::to_string(r.quadrature_error));
    r.second_term = 3.0 * params.lambda * ratio * fine;
    finish(r);
    return r;
}

BoundReport worst_case_bound(const SectorDims& dims, const Vector& psi,
                             const ModelParams& params, double t, int n_spins) {
    params.validate();
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    if (n_spins < dims.twice_spin)
        throw ValidationError("spin count below 2S is inconsistent with the sector");
    BoundReport r;
    r.variant = BoundVariant::WorstCase;
    r.params = params;
    r.twice_spin = dims.twice_spin;
    r.t = t;

    const double n = double(n_spins);
    const double ratio = params.lambda / params.omega;
    const double photon_lin =
        apply_photon_shift(dims, psi, {n + 2.0}).norm();
    const double photon_quad =
        apply_photon_shift(dims, psi, {n + 4.0, n + 4.0}).norm();
    r.first_term = ratio * std::abs(std::sin(params.omega * t)) *
                   std::sqrt(n * n + n) * std::sqrt(photon_lin);
    r.second_term =
        3.0 * params.lambda * ratio * std::abs(t) * n * n * std::sqrt(photon_quad);
    finish(r);
    return r;
}

std::pair<double, double> analytic_fCfL(int twice_spin, int excitations) {
    if (twice_spin < 1 || excitations < 0)
        throw ValidationError("bad sector labels for the closed forms");
    const double s = 0.5 * twice_spin;
    const double m = excitations;

    const double poly_a =
        s * (16.0 * std::pow(s, 4) + 40.0 * std::pow(s, 3) + 30.0 * sq(s) +
             5.0 * s - 1.0);
    const double poly_b =
        s * (8.0 * std::pow(s, 4) + 20.0 * std::pow(s, 3) + 10.0 * sq(s) -
             5.0 * s - 3.0);
    const double bracket =
        std::sqrt(std::sqrt(2.0) * std::sqrt(poly_b) + std::sqrt(poly_a));
    const double poly_m = (2.0 * s + 1.0) * (3.0 * sq(m) - 6.0 * m * (s - 2.0) +
                                             4.0 * sq(s) - 11.0 * s + 12.0);
    const double fc = std::sqrt(2.0) / std::pow(45.0, 0.25) *
                      std::pow(poly_m, 0.25) * bracket;

    const double p1 = 16.0 * std::pow(s, 9) + 72.0 * std::pow(s, 8) +
                      144.0 * std::pow(s, 7) + 168.0 * std::pow(s, 6) +
                      126.0 * std::pow(s, 5) + 63.0 * std::pow(s, 4) +
                      26.0 * std::pow(s, 3) + 12.0 * sq(s) + 3.0 * s;
    const double rr = 32.0 * std::pow(s, 9) + 144.0 * std::pow(s, 8) +
                      240.0 * std::pow(s, 7) + 168.0 * std::pow(s, 6) +
                      42.0 * std::pow(s, 5) + 21.0 * std::pow(s, 4) +
                      10.0 * std::pow(s, 3) - 18.0 * sq(s) - 9.0 * s;
    const double w = 15.0 * std::pow(m, 4) - 60.0 * std::pow(m, 3) * (s - 4.0) +
                     1682.0 * sq(s) +
                     30.0 * sq(m) * (4.0 * sq(s) - 23.0 * s + 48.0) -
                     60.0 * m * (2.0 * std::pow(s, 3) - 15.0 * sq(s) +
                                 44.0 * s - 64.0) +
                     48.0 * std::pow(s, 4) - 444.0 * std::pow(s, 3) -
                     3361.0 * s + 3840.0;
    const double fl = 2.0 / std::pow(4725.0, 0.25) *
                      (2.0 * std::pow(p1, 0.25) +
                       std::pow(2.0, 0.75) * std::pow(rr, 0.25)) *
                      std::pow(2.0 * s + 1.0, 0.25) * std::pow(w, 0.25);
    return {fc, fl};
}

BoundReport analytic_bound(int twice_spin, int excitations,
                           const ModelParams& params, double t) {
    params.validate();
    BoundReport r;
    r.variant = BoundVariant::AnalyticClosedForm;
    r.params = params;
    r.twice_spin = twice_spin;
    r.excitations = excitations;
    r.t = t;
    const auto [fc, fl] = analytic_fCfL(twice_spin, excitations);
    const double ratio = params.lambda / params.omega;
    r.first_term = ratio * std::abs(std::sin(params.omega * t)) * fc;
    r.second_term = 3.0 * params.lambda * ratio * std::abs(t) * fl;
    finish(r);
    return r;
}

BoundReport scaling_bound(int twice_spin, int excitations,
                          const ModelParams& params, double t) {
    params.validate();
    if (twice_spin < 1 || excitations < 0)
        throw ValidationError("bad sector labels for the scaling bound");
    BoundReport r;
    r.variant = BoundVariant::Scaling;
    r.params = params;
    r.twice_spin = twice_spin;
    r.excitations = excitations;
    r.t = t;
    const double s = 0.5 * twice_spin;
    const double m = excitations;
    const double ratio = params.lambda / params.omega;
    r.first_term = 2.0 * ratio * std::abs(std::sin(params.omega * t)) *
                   sq(s + 1.0) * std::sqrt(m + 2.0);
    r.second_term = 18.0 * params.lambda * ratio * std::abs(t) *
                    std::pow(s + 1.0, 3.5) * (m + 2.0);
    finish(r);
    return r;
}

BoundReport dicke_fock_bound(int twice_spin, int twice_m, int photons,
                             const ModelParams& params, double t) {
    params.validate();
    if (std::abs(twice_m) > twice_spin || (twice_spin - twice_m) % 2 != 0)
        throw ValidationError("bad spin projection for the product-state bound");
    if (photons < 0)
        throw ValidationError("photon count must be non-negative");
    // effective excitation S + n + m; integer because m and S share parity
    const int m_eff = (twice_spin + twice_m) / 2 + photons;
    const int branches = std::min(twice_spin, m_eff) + 1;
    BoundReport r = scaling_bound(twice_spin, m_eff, params, t);
    r.variant = BoundVariant::DickeFock;
    r.first_term *= branches;
    r.second_term *= branches;
    finish(r);
    return r;
}

void attach_exact(BoundReport& report, double exact) {
    report.exact_error = exact;
    if (!(exact <= report.total + 1e-9))
        throw NumericalError("exact error " + std::to_string(exact) +
                             " exceeds the bound total " +
                             std::to_string(report.total));
}

BoundReport off_resonant_bound(const TCEigenstate& eig, const ModelParams& params,
                               double t) {
    params.validate();
    ModelParams resonant = params;
    resonant.delta = 0.0;
    BoundReport r = general_bound(eig, resonant, t);
    r.variant = BoundVariant::OffResonant;
    r.params = params;
    r.extra_term = std::abs(t) * (params.lambda / params.omega) *
                   (std::abs(params.delta) / 2.0) * f_d(eig.dims, eig.state);
    finish(r);
    return r;
}

} // namespace rwa
