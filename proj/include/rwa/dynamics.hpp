#pragma once

#include <memory>

#include "rwa/hamiltonians.hpp"

namespace rwa {

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors; // unitary, columns
};

// Decompose a Hermitian matrix, memoized behind a process-wide cache keyed by
// the matrix content hash. Thread-safe; each matrix is decomposed once even
// under concurrent first access.
std::shared_ptr<const SpectralDecomposition> spectral_decompose(const Matrix& h);

// Number of cached decompositions currently held (test/diagnostic hook).
std::size_t spectral_cache_size();
void spectral_cache_clear();

// V exp(-i t Lambda) V^dag psi. Rejects non-Hermitian input.
Vector spectral_propagate(const Matrix& h, double t, const Vector& psi);

// U2(t) psi = exp(i t H0) exp(-i t H_TC) psi: the rotating-frame flow.
Vector rotating_frame_state(const SectorDims& dims, const ModelParams& params,
                            double t, const Vector& psi);

// || (exp(-i t H_TC) - exp(-i t H_D)) psi || for a normalized psi; in [0, 2].
double exact_rwa_error(const SectorDims& dims, const ModelParams& params,
                       double t, const Vector& psi);

// |error(n_max) - error(2 n_max)| / max(error(2 n_max), 1e-14). The state is
// zero-padded into the doubled sector.
double truncation_check(const SectorDims& dims, const ModelParams& params,
                        double t, const Vector& psi);

// || -(lambda/omega) sin(wt) (e^{iwt} S+ adag + e^{-iwt} S- a) psi ||.
double integrated_action_norm(const SectorDims& dims, const ModelParams& params,
                              double t, const Vector& psi);

struct OdeResult {
    Vector state;
    double norm_drift; // | ||psi_t|| - ||psi_0|| |
};

// Fixed-step RK4 integration of dpsi/dt = -i H psi; independent verification
// path for the spectral propagator.
OdeResult ode_oracle(const Matrix& h, double t, const Vector& psi, int steps);

// Default photon cutoff 2 (M + 2S) used throughout the numerics.
int default_cutoff(int twice_spin, int excitations);

} // namespace rwa
