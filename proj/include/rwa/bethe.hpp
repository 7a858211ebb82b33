#pragma once

#include <vector>

#include "rwa/sector.hpp"

namespace rwa {

struct BetheConfig {
    double tol_residual = 1e-12;
    int max_iter = 200;
    double damping = 1.0;        // initial step factor, halved on residual increase
    double collision_tol = 1e-9; // minimum allowed |e_i - e_j| and |e_i|

    void validate() const;
};

struct BetheRoots {
    int twice_spin = 0;
    int excitations = 0;
    Vector roots;               // sorted by (real, imag)
    double residual_norm = 0.0; // re-certified after the solve
    int iterations = 0;
};

// (a + i b, a + 2i b, ..., a + M i b) with a = sqrt(2S)/2, b = sqrt(2S)/M.
Vector initial_guess(int twice_spin, int excitations);

// Component n: 2S/e_n - e_n - sum_{j != n} 2/(e_n - e_j).
// Rejects zero roots and near-collisions (pole of the system).
Vector bethe_residual(const Vector& roots, int twice_spin,
                      double collision_tol = 1e-9);

// Analytic Jacobian of the residual.
Matrix bethe_jacobian(const Vector& roots, int twice_spin);

// Damped Newton from `guess` (default: initial_guess). The returned roots are
// the fixed point of that basin, sorted for deterministic output.
BetheRoots solve_bethe(int twice_spin, int excitations,
                       const Vector* guess = nullptr,
                       const BetheConfig& config = {});

// Best-effort enumeration of all min(2S, M)+1 solution branches, via repeated
// solves from randomly perturbed guesses with deduplication. Only M <= 2 is
// supported.
std::vector<BetheRoots> enumerate_branches(int twice_spin, int excitations,
                                           int tries = 60, unsigned seed = 7,
                                           const BetheConfig& config = {});

} // namespace rwa
