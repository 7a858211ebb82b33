#include "rwa/eigenstates.hpp"

#include <cmath>
#include <string>

namespace rwa {

namespace {

// sqrt(n! (M-n)! (2S)! / (2S-M+n)!), exact in 64-bit integers when every
// factorial argument stays below 20, log-gamma otherwise.
double coefficient_magnitude(int twice_spin, int m_exc, int n) {
    const int a1 = n;
    const int a2 = m_exc - n;
    const int a3 = twice_spin;
    const int a4 = twice_spin - m_exc + n;
    if (a1 < 20 && a2 < 20 && a3 < 20 && a4 < 20) {
        auto fact = [](int k) {
            unsigned long long f = 1;
            for (int i = 2; i <= k; ++i)
                f *= (unsigned long long)i;
            return f;
        };
        const long double num =
            (long double)fact(a1) * (long double)fact(a2) * (long double)fact(a3);
        return double(std::sqrt(num / (long double)fact(a4)));
    }
    const double lg = std::lgamma(a1 + 1.0) + std::lgamma(a2 + 1.0) +
                      std::lgamma(a3 + 1.0) - std::lgamma(a4 + 1.0);
    return std::exp(0.5 * lg);
}

} // namespace

Vector elementary_symmetric_all(const Vector& roots) {
    const int m = int(roots.size());
    Vector c = Vector::Zero(m + 1);
    c[0] = 1.0;
    for (int i = 0; i < m; ++i)
        for (int k = std::min(i + 1, m); k >= 1; --k)
            c[k] += roots[i] * c[k - 1];
    return c;
}

Complex elementary_symmetric(const Vector& roots, int n) {
    if (n < 0 || n > roots.size())
        throw ValidationError("elementary symmetric order out of range");
    return elementary_symmetric_all(roots)[n];
}

Vector coefficients(int twice_spin, int excitations, const Vector& roots) {
    if (twice_spin < 1 || excitations < 0)
        throw ValidationError("bad sector labels for coefficients");
    if (int(roots.size()) != excitations)
        throw ValidationError("root count must equal the excitation count");
    if (excitations + twice_spin > 60)
        throw ValidationError("coefficient factorials overflow beyond M + 2S > 60");

    const int n_lo = std::max(0, excitations - twice_spin);
    const Vector esym = elementary_symmetric_all(roots);
    Vector c(excitations - n_lo + 1);
    for (int n = n_lo; n <= excitations; ++n) {
        const double sign = ((excitations - n) % 2 == 0) ? 1.0 : -1.0;
        c[n - n_lo] =
            sign * coefficient_magnitude(twice_spin, excitations, n) * esym[n];
    }
    return c;
}

Vector build_eigenstate_oracle(int twice_spin, int excitations,
                               const Vector& roots, const SectorDims& dims) {
    if (dims.twice_spin != twice_spin)
        throw ValidationError("sector spin does not match the state's spin");
    if (dims.n_max < excitations)
        throw CutoffTooSmall("photon cutoff " + std::to_string(dims.n_max) +
                             " below excitation count " +
                             std::to_string(excitations));
    const auto spin = build_spin_operators(dims);
    const auto boson = build_boson_operators(dims);
    Vector v = Vector::Zero(dims.dim());
    v[dims.index_of(-twice_spin, 0)] = 1.0;
    for (int i = 0; i < excitations; ++i)
        v = roots[i] * (boson.adag * v) - spin.splus * v;
    return v;
}

TCEigenstate build_eigenstate(int twice_spin, int excitations,
                              const BetheRoots& roots, const SectorDims& dims,
                              const ModelParams& params) {
    params.validate();
    if (dims.twice_spin != twice_spin)
        throw ValidationError("sector spin does not match the state's spin");
    if (dims.n_max < excitations)
        throw CutoffTooSmall("photon cutoff " + std::to_string(dims.n_max) +
                             " below excitation count " +
                             std::to_string(excitations));
    if (roots.excitations != excitations || int(roots.roots.size()) != excitations)
        throw ValidationError("root record does not match the excitation count");

    TCEigenstate eig;
    eig.twice_spin = twice_spin;
    eig.excitations = excitations;
    eig.roots = roots;
    eig.dims = dims;
    eig.n_lo = std::max(0, excitations - twice_spin);
    eig.coefficients = coefficients(twice_spin, excitations, roots.roots);

    const Complex root_sum = roots.roots.sum();
    if (std::abs(root_sum.imag()) > 1e-9)
        throw NonRealEnergy("root sum has imaginary part " +
                            std::to_string(root_sum.imag()));
    const double s = 0.5 * twice_spin;
    eig.energy = params.omega * (excitations - s) - params.lambda * root_sum.real();

    Vector v = Vector::Zero(dims.dim());
    for (int n = eig.n_lo; n <= excitations; ++n) {
        // photon index n pairs with spin projection m = M - n - S
        const int tm = 2 * (excitations - n) - twice_spin;
        v[dims.index_of(tm, n)] = eig.coefficients[n - eig.n_lo];
    }

    const double coeff_norm = eig.coefficients.norm();
    const double vec_norm = v.norm();
    if (!(vec_norm > 0.0))
        throw NumericalError("eigenstate has zero norm");
    if (std::abs(vec_norm - coeff_norm) > 1e-10 * vec_norm)
        throw NumericalError("coefficient norm disagrees with assembled norm");
    eig.state = v / vec_norm;

    const Matrix h_tc = build_tavis_cummings(dims, params);
    eig.residual = (h_tc * eig.state - eig.energy * eig.state).norm();
    if (!(eig.residual < 1e-8))
        throw ResidualTooLarge("eigenstate residual " +
                               std::to_string(eig.residual));

    const Matrix exc = build_excitation_number(dims);
    const double exc_dev =
        (exc * eig.state - (excitations - s) * eig.state).norm();
    if (!(exc_dev < 1e-10))
        throw NumericalError("excitation eigenvalue defect " +
                             std::to_string(exc_dev));
    return eig;
}

} // namespace rwa
