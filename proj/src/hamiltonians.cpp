#include "rwa/hamiltonians.hpp"

namespace rwa {

void ModelParams::validate() const {
    if (!(omega > 0.0))
        throw ValidationError("omega must be positive");
    if (!(lambda >= 0.0))
        throw ValidationError("lambda must be non-negative");
    if (!std::isfinite(omega) || !std::isfinite(lambda) || !std::isfinite(delta))
        throw ValidationError("model parameters must be finite");
}

Matrix build_h0(const SectorDims& dims, const ModelParams& params) {
    params.validate();
    const int d = dims.dim();
    Matrix h = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const auto [tm, n] = dims.labels_of(i);
        h(i, i) = params.omega * (0.5 * tm + n);
    }
    return h;
}

namespace {

// Shared assembly: the diagonal plus the requested ladder-boson couplings.
// Every ket couples to at most four neighbours, so the fill is quadratic in
// the dimension with no matrix products.
Matrix build_coupled(const SectorDims& dims, const ModelParams& params,
                     bool rotating, bool counter_rotating) {
    const int d = dims.dim();
    Matrix h = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const auto [tm, n] = dims.labels_of(i);
        h(i, i) = (params.omega + params.delta) * (0.5 * tm) + params.omega * n;
        for (int sign : {+1, -1}) {
            const double c = ladder_coefficient(dims.twice_spin, tm, sign);
            if (c == 0.0)
                continue;
            const int tm2 = tm + 2 * sign;
            // S+ a and S- adag rotate with the field; S+ adag and S- a do not.
            const bool lowers_photon = (sign == +1);
            if (rotating) {
                const int n2 = lowers_photon ? n - 1 : n + 1;
                if (n2 >= 0 && n2 <= dims.n_max) {
                    const double root = std::sqrt(double(lowers_photon ? n : n2));
                    h(dims.index_of(tm2, n2), i) +=
                        params.lambda * (c * root);
                }
            }
            if (counter_rotating) {
                const int n2 = lowers_photon ? n + 1 : n - 1;
                if (n2 >= 0 && n2 <= dims.n_max) {
                    const double root = std::sqrt(double(lowers_photon ? n2 : n));
                    h(dims.index_of(tm2, n2), i) +=
                        params.lambda * (c * root);
                }
            }
        }
    }
    return h;
}

} // namespace

Matrix build_dicke(const SectorDims& dims, const ModelParams& params) {
    params.validate();
    return build_coupled(dims, params, true, true);
}

Matrix build_tavis_cummings(const SectorDims& dims, const ModelParams& params) {
    params.validate();
    return build_coupled(dims, params, true, false);
}

Matrix build_excitation_number(const SectorDims& dims) {
    const int d = dims.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const auto [tm, n] = dims.labels_of(i);
        m(i, i) = 0.5 * tm + n;
    }
    return m;
}

} // namespace rwa
