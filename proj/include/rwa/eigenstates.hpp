#pragma once

#include "rwa/bethe.hpp"
#include "rwa/hamiltonians.hpp"

namespace rwa {

struct TCEigenstate {
    int twice_spin = 0;
    int excitations = 0; // M
    BetheRoots roots;
    int n_lo = 0;        // photon expansion starts at max(0, M - 2S)
    Vector coefficients; // c[n - n_lo] for n in [n_lo, M], pre-normalization
    double energy = 0.0; // omega (M - S) - lambda sum(roots)
    SectorDims dims{1, 0};
    Vector state;          // normalized
    double residual = 0.0; // ||H_TC psi - E psi||
};

// e_n(roots): sum over size-n subsets of the product, via the incremental
// polynomial-coefficient recurrence (O(M^2), numerically stable).
Complex elementary_symmetric(const Vector& roots, int n);
Vector elementary_symmetric_all(const Vector& roots); // all orders 0..M

// c_{S,M,n} = (-1)^{M-n} sqrt(n! (M-n)! (2S)! / (2S-M+n)!) e_n(roots) for
// n in [max(0, M-2S), M]. Exact integer factorials below 20!, log-gamma above;
// rejects M + 2S > 60.
Vector coefficients(int twice_spin, int excitations, const Vector& roots);

// Assemble sum_n c_n |S, M-n-S> tensor phi_n, normalize, compute the energy,
// and validate every invariant (eigen-residual, excitation eigenvalue,
// coefficient-vs-vector norm, real energy).
TCEigenstate build_eigenstate(int twice_spin, int excitations,
                              const BetheRoots& roots, const SectorDims& dims,
                              const ModelParams& params);

// Independent construction: apply the factors (e_i adag - S+) one at a time to
// |S,-S> tensor phi_0. Used only to cross-check the coefficient formula.
Vector build_eigenstate_oracle(int twice_spin, int excitations,
                               const Vector& roots, const SectorDims& dims);

} // namespace rwa
