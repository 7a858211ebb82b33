#include <doctest.h>

#include <cmath>
#include <random>

#include "rwa/dynamics.hpp"
#include "rwa/eigenstates.hpp"

using namespace rwa;

namespace {

Matrix random_hermitian(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = Complex(dist(rng), dist(rng));
    return 0.5 * (a + a.adjoint());
}

Vector random_state(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = Complex(dist(rng), dist(rng));
    return v / v.norm();
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("diagonal propagation applies the analytic phases") {
    const SectorDims dims(3, 4);
    const ModelParams p{1.7, 0.0, 0.0};
    const Matrix h0 = build_h0(dims, p);
    const Vector psi = random_state(dims.dim(), 11);
    const double t = 0.83;
    const Vector out = spectral_propagate(h0, t, psi);
    for (int i = 0; i < dims.dim(); ++i) {
        const auto [tm, n] = dims.labels_of(i);
        const Complex expected =
            psi[i] * std::polar(1.0, -t * p.omega * (0.5 * tm + n));
        CHECK(std::abs(out[i] - expected) < 1e-12);
    }
}

TEST_CASE("propagation at time zero is the identity") {
    const Matrix h = random_hermitian(16, 5);
    const Vector psi = random_state(16, 6);
    CHECK((spectral_propagate(h, 0.0, psi) - psi).norm() < 1e-13);
}

TEST_CASE("propagation preserves the norm") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const Matrix h = random_hermitian(24, seed);
        const Vector psi = random_state(24, seed + 100);
        const Vector out = spectral_propagate(h, 1.7 + 0.1 * seed, psi);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("propagation composes over time") {
    const Matrix h = random_hermitian(18, 33);
    const Vector psi = random_state(18, 34);
    const Vector two_steps =
        spectral_propagate(h, 0.4, spectral_propagate(h, 0.7, psi));
    const Vector one_step = spectral_propagate(h, 1.1, psi);
    CHECK((two_steps - one_step).norm() < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
    Matrix h = random_hermitian(6, 2);
    h(0, 1) += Complex(0.0, 1e-6);
    const Vector psi = random_state(6, 3);
    CHECK_THROWS_AS(spectral_propagate(h, 1.0, psi), ValidationError);
    CHECK_THROWS_AS(spectral_propagate(random_hermitian(6, 2), 1.0,
                                       random_state(5, 4)),
                    ValidationError);
}

TEST_CASE("spectral flow matches the Runge-Kutta integrator") {
    const Matrix h = random_hermitian(12, 77);
    const Vector psi = random_state(12, 78);
    const double t = 0.9;
    const OdeResult ode = ode_oracle(h, t, psi, 4000);
    CHECK(ode.norm_drift < 1e-9);
    CHECK((spectral_propagate(h, t, psi) - ode.state).norm() < 1e-7);
}

TEST_CASE("integrator reports unacceptable drift") {
    const Matrix h = 50.0 * random_hermitian(10, 9);
    const Vector psi = random_state(10, 10);
    CHECK_THROWS_AS(ode_oracle(h, 5.0, psi, 3), NumericalError);
    CHECK_THROWS_AS(ode_oracle(h, 1.0, psi, 0), ValidationError);
}

TEST_CASE("decomposition cache holds repeated matrices") {
    spectral_cache_clear();
    CHECK(spectral_cache_size() == 0);
    const Vector psi = random_state(10, 50);
    const Matrix h = random_hermitian(10, 51);
    spectral_propagate(h, 0.3, psi);
    spectral_propagate(h, 0.6, psi);
    spectral_propagate(h, 0.9, psi);
    CHECK(spectral_cache_size() == 1);
    const auto first = spectral_decompose(h);
    const auto again = spectral_decompose(h);
    CHECK(first.get() == again.get());
}

TEST_CASE("decomposition cache evicts the oldest entries") {
    spectral_cache_clear();
    for (unsigned k = 0; k < 12; ++k)
        spectral_decompose(random_hermitian(8, 200 + k));
    CHECK(spectral_cache_size() == 8);
    spectral_cache_clear();
}

TEST_CASE("rotating frame is trivial at time zero") {
    const SectorDims dims(4, 6);
    const ModelParams p{1.3, 0.4, 0.0};
    const Vector psi = random_state(dims.dim(), 61);
    CHECK((rotating_frame_state(dims, p, 0.0, psi) - psi).norm() < 1e-12);
}

TEST_CASE("approximation error vanishes when it must") {
    const SectorDims dims(3, 8);
    const Vector psi = random_state(dims.dim(), 71);
    CHECK(exact_rwa_error(dims, {1.5, 0.4, 0.0}, 0.0, psi) < 1e-13);
    CHECK(exact_rwa_error(dims, {1.5, 0.0, 0.0}, 2.7, psi) < 1e-12);
}

TEST_CASE("approximation error requires a normalized state") {
    const SectorDims dims(2, 3);
    Vector psi = random_state(dims.dim(), 81);
    psi *= 1.5;
    CHECK_THROWS_AS(exact_rwa_error(dims, {1.0, 0.3, 0.0}, 0.5, psi),
                    ValidationError);
}

TEST_CASE("error is bounded by two for unit states") {
    const SectorDims dims(2, 10);
    const Vector psi = random_state(dims.dim(), 91);
    const double err = exact_rwa_error(dims, {1.0, 0.9, 0.0}, 3.9, psi);
    CHECK(err >= 0.0);
    CHECK(err <= 2.0);
}

TEST_CASE("truncation diagnostic separates ample from tight cutoffs") {
    const int ts = 2, m_exc = 2;
    const ModelParams p{1.7, 0.4, 0.0};
    const double t = 2.0;
    const BetheRoots roots = solve_bethe(ts, m_exc);

    const SectorDims ample(ts, 16);
    const TCEigenstate eig = build_eigenstate(ts, m_exc, roots, ample, p);
    CHECK(truncation_check(ample, p, t, eig.state) < 1e-12);

    const SectorDims tight(ts, m_exc);
    const TCEigenstate squeezed = build_eigenstate(ts, m_exc, roots, tight, p);
    CHECK(truncation_check(tight, p, t, squeezed.state) > 1e-2);
}

TEST_CASE("interaction term norm matches a direct operator evaluation") {
    const SectorDims dims(4, 7);
    const ModelParams p{2.1, 0.35, 0.0};
    const Vector psi = random_state(dims.dim(), 101);
    for (double t : {0.0, 0.3, 1.1}) {
        const auto spin = build_spin_operators(dims);
        const auto boson = build_boson_operators(dims);
        const Complex ph = std::polar(1.0, p.omega * t);
        const Matrix op = ph * spin.splus * boson.adag +
                          std::conj(ph) * spin.sminus * boson.a;
        const double expected = std::abs(-(p.lambda / p.omega) *
                                         std::sin(p.omega * t)) *
                                (op * psi).norm();
        CHECK(integrated_action_norm(dims, p, t, psi) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("default cutoff formula") {
    CHECK(default_cutoff(10, 5) == 30);
    CHECK(default_cutoff(1, 0) == 2);
    CHECK(default_cutoff(4, 6) == 20);
}

} // TEST_SUITE
