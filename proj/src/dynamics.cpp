#include "rwa/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstring>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace rwa {

namespace {

struct CacheKey {
    long dim;
    std::uint64_t h1, h2;
    bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const {
        return std::size_t(k.h1 ^ (k.h2 * 0x9e3779b97f4a7c15ULL) ^
                           std::uint64_t(k.dim));
    }
};

// Two independent FNV-1a passes over the raw matrix bytes; 128 collision bits
// is plenty for the handful of Hamiltonians alive in one campaign.
CacheKey content_key(const Matrix& h) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(h.data());
    const std::size_t nbytes = sizeof(Complex) * std::size_t(h.size());
    std::uint64_t h1 = 14695981039346656037ULL;
    std::uint64_t h2 = 0xcbf29ce484222325ULL ^ 0x123456789abcdef0ULL;
    for (std::size_t i = 0; i < nbytes; ++i) {
        h1 = (h1 ^ bytes[i]) * 1099511628211ULL;
        h2 = (h2 ^ bytes[i]) * 0x100000001b3ULL;
        h2 ^= h2 >> 29;
    }
    return {long(h.rows()), h1, h2};
}

struct CacheCell {
    std::once_flag once;
    std::shared_ptr<const SpectralDecomposition> decomp;
};

std::shared_mutex cache_mutex;
std::unordered_map<CacheKey, std::shared_ptr<CacheCell>, CacheKeyHash> cache_map;
std::deque<CacheKey> cache_order;
constexpr std::size_t kCacheCapacity = 8;

void require_hermitian(const Matrix& h) {
    if (h.rows() != h.cols())
        throw ValidationError("propagator needs a square matrix");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale)
        throw ValidationError("matrix is not Hermitian (defect " +
                              std::to_string(defect) + ")");
}

} // namespace

int default_cutoff(int twice_spin, int excitations) {
    return 2 * (excitations + twice_spin);
}

std::shared_ptr<const SpectralDecomposition> spectral_decompose(const Matrix& h) {
    require_hermitian(h);
    const CacheKey key = content_key(h);

    std::shared_ptr<CacheCell> cell;
    {
        std::unique_lock lock(cache_mutex);
        auto it = cache_map.find(key);
        if (it == cache_map.end()) {
            cell = std::make_shared<CacheCell>();
            cache_map.emplace(key, cell);
            cache_order.push_back(key);
            while (cache_order.size() > kCacheCapacity) {
                cache_map.erase(cache_order.front());
                cache_order.pop_front();
            }
        } else {
            cell = it->second;
        }
    }

    std::call_once(cell->once, [&] {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
        if (solver.info() != Eigen::Success)
            throw NumericalError("Hermitian eigendecomposition failed");
        auto d = std::make_shared<SpectralDecomposition>();
        d->eigenvalues = solver.eigenvalues();
        d->eigenvectors = solver.eigenvectors();
        cell->decomp = std::move(d);
    });
    if (!cell->decomp)
        throw NumericalError("Hermitian eigendecomposition failed");
    return cell->decomp;
}

std::size_t spectral_cache_size() {
    std::shared_lock lock(cache_mutex);
    return cache_map.size();
}

void spectral_cache_clear() {
    std::unique_lock lock(cache_mutex);
    cache_map.clear();
    cache_order.clear();
}

Vector spectral_propagate(const Matrix& h, double t, const Vector& psi) {
    if (psi.size() != h.rows())
        throw ValidationError("state dimension does not match the matrix");
    const auto decomp = spectral_decompose(h);
    Vector modal = decomp->eigenvectors.adjoint() * psi;
    for (int i = 0; i < modal.size(); ++i)
        modal[i] *= std::polar(1.0, -t * decomp->eigenvalues[i]);
    return decomp->eigenvectors * modal;
}

Vector rotating_frame_state(const SectorDims& dims, const ModelParams& params,
                            double t, const Vector& psi) {
    const Vector inner = spectral_propagate(build_tavis_cummings(dims, params), t, psi);
    return spectral_propagate(build_h0(dims, params), -t, inner);
}

double exact_rwa_error(const SectorDims& dims, const ModelParams& params,
                       double t, const Vector& psi) {
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw ValidationError("exact error requires a normalized state");
    const Vector tc = spectral_propagate(build_tavis_cummings(dims, params), t, psi);
    const Vector full = spectral_propagate(build_dicke(dims, params), t, psi);
    return (tc - full).norm();
}

double truncation_check(const SectorDims& dims, const ModelParams& params,
                        double t, const Vector& psi) {
    const double base = exact_rwa_error(dims, params, t, psi);
    const SectorDims wide(dims.twice_spin, 2 * dims.n_max);
    Vector padded = Vector::Zero(wide.dim());
    for (int i = 0; i < dims.dim(); ++i) {
        const auto [tm, n] = dims.labels_of(i);
        padded[wide.index_of(tm, n)] = psi[i];
    }
    const double refined = exact_rwa_error(wide, params, t, padded);
    return std::abs(base - refined) / std::max(refined, 1e-14);
}

double integrated_action_norm(const SectorDims& dims, const ModelParams& params,
                              double t, const Vector& psi) {
    params.validate();
    if (psi.size() != dims.dim())
        throw ValidationError("state dimension does not match the sector");
    const auto spin = build_spin_operators(dims);
    const auto boson = build_boson_operators(dims);
    const Complex phase = std::polar(1.0, params.omega * t);
    const double amp = -(params.lambda / params.omega) * std::sin(params.omega * t);
    const Vector image = phase * (spin.splus * (boson.adag * psi)) +
                         std::conj(phase) * (spin.sminus * (boson.a * psi));
    return std::abs(amp) * image.norm();
}

OdeResult ode_oracle(const Matrix& h, double t, const Vector& psi, int steps) {
    require_hermitian(h);
    if (steps < 1)
        throw ValidationError("ODE oracle needs at least one step");
    if (psi.size() != h.rows())
        throw ValidationError("state dimension does not match the matrix");

    const Complex minus_i(0.0, -1.0);
    const double dt = t / steps;
    Vector y = psi;
    for (int k = 0; k < steps; ++k) {
        const Vector k1 = minus_i * (h * y);
        const Vector k2 = minus_i * (h * (y + 0.5 * dt * k1));
        const Vector k3 = minus_i * (h * (y + 0.5 * dt * k2));
        const Vector k4 = minus_i * (h * (y + dt * k3));
        y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    OdeResult out;
    out.norm_drift = std::abs(y.norm() - psi.norm());
    out.state = std::move(y);
    if (out.norm_drift > 1e-6)
        throw NumericalError("ODE oracle norm drift " +
                             std::to_string(out.norm_drift) +
                             "; raise the step count");
    return out;
}

} // namespace rwa
