#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "rwa/errors.hpp"

namespace rwa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Fixed total-spin sector tensor a photon space truncated at n_max.
// Spin is stored as twice-S so half-integers stay exact.
struct SectorDims {
    int twice_spin; // 2S >= 1
    int n_max;      // photon cutoff >= 0

    SectorDims(int twice_spin_, int n_max_);

    int dim() const { return (twice_spin + 1) * (n_max + 1); }
    double spin() const { return 0.5 * twice_spin; }

    // Basis order: m descending from S, then n ascending. This ordering is
    // the normative one for every CSV dump.
    int index_of(int twice_m, int n) const;
    std::pair<int, int> labels_of(int index) const; // (twice_m, n)

    bool operator==(const SectorDims&) const = default;
};

// C(S, m, +/-) = sqrt((S -+ m)(S +- m + 1)); zero when the target leaves the
// ladder. sign is +1 for raising, -1 for lowering.
double ladder_coefficient(int twice_s, int twice_m, int sign);

struct SpinOperators {
    Matrix sz, splus, sminus, ssq;
};

struct BosonOperators {
    Matrix a, adag, nhat;
};

SpinOperators build_spin_operators(const SectorDims& dims);
BosonOperators build_boson_operators(const SectorDims& dims);

} // namespace rwa
