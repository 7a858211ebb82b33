#pragma once

#include <optional>
#include <string>

#include "rwa/dynamics.hpp"
#include "rwa/eigenstates.hpp"

namespace rwa {

enum class BoundVariant {
    General,
    Intermediate,
    WorstCase,
    AnalyticClosedForm,
    Scaling,
    DickeFock,
    LinearCombination,
    OffResonant,
};

std::string variant_name(BoundVariant v);
BoundVariant variant_from_name(const std::string& name);

struct BoundReport {
    BoundVariant variant = BoundVariant::General;
    double first_term = 0.0;  // the sin-modulated term
    double second_term = 0.0; // the linear-in-t term
    double extra_term = 0.0;  // detuning contribution, 0 when delta = 0
    double total = 0.0;
    std::optional<double> exact_error;

    // parameter echo
    ModelParams params{1.0, 0.0, 0.0};
    int twice_spin = 0;
    int excitations = 0;
    double t = 0.0;

    int min_sign = 0;              // winner of the f_C minimization, 0 when n/a
    double quadrature_error = 0.0; // step-halving certificate (intermediate only)
};

// State functionals. sign is +1/-1.
// f_C: [2||(S^2 - Sz^2)psi|| + 2||(S+-)^2 psi||]^{1/2} ||(nhat+2)psi||^{1/2}
double f_C(const SectorDims& dims, const Vector& psi, int sign);
// f_L: [sum of four ||.||^{1/2} spin terms] ||(nhat+4)^2 psi||^{1/2}
double f_L(const SectorDims& dims, const Vector& psi);
// f_d: [||S+S- psi||^{1/2} + ||S-S+ psi||^{1/2}] ||(nhat+1)psi||^{1/2}
double f_d(const SectorDims& dims, const Vector& psi);

// (lambda/omega)|sin wt| min_pm f_C(psi) + 3|t|(lambda^2/omega) f_L(psi).
// Requires delta = 0; use off_resonant_bound otherwise.
BoundReport general_bound(const TCEigenstate& eig, const ModelParams& params,
                          double t);

// A-posteriori form for arbitrary states: the first term uses the
// rotating-frame state at time t, the second integrates f_L along the flow by
// composite Simpson quadrature (value at 2*quad_steps panels, certificate from
// the quad_steps run).
BoundReport intermediate_bound(const SectorDims& dims, const Vector& psi,
                               const ModelParams& params, double t,
                               int quad_steps = 8);

// Spin-state-independent: (lambda/omega)|sin wt| sqrt(N^2+N) sqrt(||(nhat+N+2)psi||)
// + 3(lambda^2/omega)|t| N^2 sqrt(||(nhat+N+4)^2 psi||), N >= 2S.
BoundReport worst_case_bound(const SectorDims& dims, const Vector& psi,
                             const ModelParams& params, double t, int n_spins);

// Closed-form envelopes of the two functionals as polynomials in (S, M).
std::pair<double, double> analytic_fCfL(int twice_spin, int excitations);

// General-form bound with the closed-form envelopes in place of the
// matrix-evaluated functionals.
BoundReport analytic_bound(int twice_spin, int excitations,
                           const ModelParams& params, double t);

// 2(lambda/omega)|sin wt|(S+1)^2 sqrt(M+2) + 18(lambda^2/omega)|t|(S+1)^{7/2}(M+2).
BoundReport scaling_bound(int twice_spin, int excitations,
                          const ModelParams& params, double t);

// Product states |S,m> tensor phi_n: K copies of the scaling form at effective
// excitation S+n+m, K = min(2S, S+n+m) + 1.
BoundReport dicke_fock_bound(int twice_spin, int twice_m, int photons,
                             const ModelParams& params, double t);

// General bound plus the detuning term |t|(lambda/omega)(delta/2) f_d(psi).
BoundReport off_resonant_bound(const TCEigenstate& eig,
                               const ModelParams& params, double t);

// Record a measured exact error on the report and enforce validity
// (exact <= total + 1e-9).
void attach_exact(BoundReport& report, double exact);

} // namespace rwa
