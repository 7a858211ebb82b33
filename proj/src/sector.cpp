#include "rwa/sector.hpp"

#include <cmath>
#include <string>

namespace rwa {

SectorDims::SectorDims(int twice_spin_, int n_max_)
    : twice_spin(twice_spin_), n_max(n_max_) {
    if (twice_spin < 1)
        throw ValidationError("twice-spin must be a positive integer, got " +
                              std::to_string(twice_spin));
    if (n_max < 0)
        throw ValidationError("photon cutoff must be non-negative, got " +
                              std::to_string(n_max));
}

int SectorDims::index_of(int twice_m, int n) const {
    if (twice_m > twice_spin || twice_m < -twice_spin)
        throw ValidationError("spin projection out of range");
    if ((twice_spin - twice_m) % 2 != 0)
        throw ValidationError("spin projection parity mismatch");
    if (n < 0 || n > n_max)
        throw ValidationError("photon number out of range");
    return (twice_spin - twice_m) / 2 * (n_max + 1) + n;
}

std::pair<int, int> SectorDims::labels_of(int index) const {
    if (index < 0 || index >= dim())
        throw ValidationError("basis index out of range");
    const int row = index / (n_max + 1);
    const int n = index % (n_max + 1);
    return {twice_spin - 2 * row, n};
}

double ladder_coefficient(int twice_s, int twice_m, int sign) {
    if (twice_s < 1)
        throw ValidationError("twice-spin must be positive");
    if (sign != 1 && sign != -1)
        throw ValidationError("ladder sign must be +1 or -1");
    if (std::abs(twice_m) > twice_s)
        throw ValidationError("|m| exceeds S in ladder coefficient");
    if ((twice_s - twice_m) % 2 != 0)
        throw ValidationError("m must differ from S by an integer");
    if (std::abs(twice_m + 2 * sign) > twice_s)
        return 0.0; // stepping off the ladder annihilates
    const double s = 0.5 * twice_s;
    const double m = 0.5 * twice_m;
    return std::sqrt((s - sign * m) * (s + sign * m + 1.0));
}

SpinOperators build_spin_operators(const SectorDims& dims) {
    const int d = dims.dim();
    SpinOperators ops;
    ops.sz = Matrix::Zero(d, d);
    ops.splus = Matrix::Zero(d, d);
    ops.sminus = Matrix::Zero(d, d);

    for (int tm = -dims.twice_spin; tm <= dims.twice_spin; tm += 2) {
        const double cp = ladder_coefficient(dims.twice_spin, tm, +1);
        const double cm = ladder_coefficient(dims.twice_spin, tm, -1);
        for (int n = 0; n <= dims.n_max; ++n) {
            const int col = dims.index_of(tm, n);
            ops.sz(col, col) = 0.5 * tm;
            if (cp != 0.0)
                ops.splus(dims.index_of(tm + 2, n), col) = cp;
            if (cm != 0.0)
                ops.sminus(dims.index_of(tm - 2, n), col) = cm;
        }
    }
    const double s = dims.spin();
    ops.ssq = s * (s + 1.0) * Matrix::Identity(d, d);
    return ops;
}

BosonOperators build_boson_operators(const SectorDims& dims) {
    const int d = dims.dim();
    BosonOperators ops;
    ops.a = Matrix::Zero(d, d);
    ops.adag = Matrix::Zero(d, d);
    ops.nhat = Matrix::Zero(d, d);

    for (int tm = -dims.twice_spin; tm <= dims.twice_spin; tm += 2) {
        for (int n = 0; n <= dims.n_max; ++n) {
            const int col = dims.index_of(tm, n);
            ops.nhat(col, col) = n;
            if (n < dims.n_max) {
                // adag: phi_n -> sqrt(n+1) phi_{n+1}; the n_max -> n_max+1
                // transition is dropped by the hard truncation.
                ops.adag(dims.index_of(tm, n + 1), col) = std::sqrt(n + 1.0);
            }
            if (n > 0)
                ops.a(dims.index_of(tm, n - 1), col) = std::sqrt(double(n));
        }
    }
    return ops;
}

} // namespace rwa
