#pragma once

#include "rwa/sector.hpp"

namespace rwa {

struct ModelParams {
    double omega;       // field frequency, > 0
    double lambda;      // coupling, >= 0
    double delta = 0.0; // detuning of the spin splitting from omega

    void validate() const;
};

// H0 = omega (Sz + nhat), diagonal.
Matrix build_h0(const SectorDims& dims, const ModelParams& params);

// Full model: (omega + delta) Sz + omega nhat + lambda (S+ + S-)(a + adag).
Matrix build_dicke(const SectorDims& dims, const ModelParams& params);

// Rotating terms only: (omega + delta) Sz + omega nhat + lambda (S+ a + S- adag).
// Commutes with H0 exactly, truncation included.
Matrix build_tavis_cummings(const SectorDims& dims, const ModelParams& params);

// Excitation number Sz + nhat; eigenstates of the rotating model with M
// excitations have eigenvalue M - S.
Matrix build_excitation_number(const SectorDims& dims);

} // namespace rwa
