#include <doctest.h>

#include <cmath>
#include <complex>

#include "rwa/dynamics.hpp"
#include "rwa/eigenstates.hpp"

using namespace rwa;

namespace {

// Brute force over all size-k subsets; fine for the small orders tested here.
Complex esym_brute(const Vector& roots, int k) {
    const int m = int(roots.size());
    Complex acc = (k == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    if (k == 0)
        return acc;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        Complex prod(1.0, 0.0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i))
                prod *= roots[i];
        acc += prod;
    }
    return acc;
}

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace

TEST_SUITE("eigenstates") {

TEST_CASE("elementary symmetric polynomials match subset enumeration") {
    Vector roots(6);
    roots[0] = Complex(1.3, 0.7);
    roots[1] = Complex(-0.4, 1.9);
    roots[2] = Complex(2.2, -0.3);
    roots[3] = Complex(0.8, 0.8);
    roots[4] = Complex(-1.1, -0.6);
    roots[5] = Complex(0.05, 2.4);
    const Vector all = elementary_symmetric_all(roots);
    REQUIRE(all.size() == 7);
    for (int k = 0; k <= 6; ++k) {
        const Complex brute = esym_brute(roots, k);
        CHECK(std::abs(all[k] - brute) <=
              1e-12 * std::max(1.0, std::abs(brute)));
        CHECK(std::abs(elementary_symmetric(roots, k) - brute) <=
              1e-12 * std::max(1.0, std::abs(brute)));
    }
}

TEST_CASE("coefficient magnitudes follow the factorial formula") {
    for (int ts : {1, 4, 10}) {
        for (int m_exc : {1, 3, 6}) {
            const BetheRoots roots = solve_bethe(ts, m_exc);
            const Vector c = coefficients(ts, m_exc, roots.roots);
            const Vector esym = elementary_symmetric_all(roots.roots);
            const int n_lo = std::max(0, m_exc - ts);
            REQUIRE(c.size() == m_exc - n_lo + 1);
            for (int n = n_lo; n <= m_exc; ++n) {
                const long double mag2 =
                    factorial_ld(n) * factorial_ld(m_exc - n) *
                    (factorial_ld(ts) / factorial_ld(ts - m_exc + n));
                const double expected =
                    double(std::sqrt(mag2)) * std::abs(esym[n]);
                CHECK(std::abs(c[n - n_lo]) ==
                      doctest::Approx(expected).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("coefficient signs alternate") {
    const BetheRoots roots = solve_bethe(10, 3);
    const Vector c = coefficients(10, 3, roots.roots);
    // real roots with positive sum: e_n > 0, so sign pattern is (-1)^{M-n}
    for (int n = 0; n <= 3; ++n) {
        const Complex ratio = c[n] / std::abs(c[n]);
        const double sign = ((3 - n) % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(ratio.real() * sign - 1.0) < 1e-9);
    }
}

TEST_CASE("large sectors are rejected before precision is lost") {
    Vector fake(1);
    fake[0] = Complex(1.0, 0.0);
    CHECK_THROWS_AS(coefficients(60, 1, fake), ValidationError);
}

TEST_CASE("no excitations gives the vacuum product state") {
    const SectorDims dims(5, 4);
    const BetheRoots empty = solve_bethe(5, 0);
    const TCEigenstate eig =
        build_eigenstate(5, 0, empty, dims, {1.0, 0.3, 0.0});
    CHECK(eig.n_lo == 0);
    REQUIRE(eig.coefficients.size() == 1);
    CHECK(std::abs(eig.coefficients[0] - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eig.state[dims.index_of(-5, 0)] - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eig.state.norm() - 1.0) < 1e-14);
    CHECK(eig.energy == doctest::Approx(-2.5).epsilon(1e-14));
}

TEST_CASE("single excitation at spin one half is the polariton pair") {
    const SectorDims dims(1, 2);
    const ModelParams p{1.9, 0.3, 0.0};
    const BetheRoots roots = solve_bethe(1, 1);
    const TCEigenstate eig = build_eigenstate(1, 1, roots, dims, p);
    // target (|up,0> - |down,1>)/sqrt(2), fixed up to a global phase
    Vector target = Vector::Zero(dims.dim());
    target[dims.index_of(1, 0)] = Complex(M_SQRT1_2, 0.0);
    target[dims.index_of(-1, 1)] = Complex(-M_SQRT1_2, 0.0);
    CHECK(std::abs(std::abs(target.dot(eig.state)) - 1.0) < 1e-10);
    CHECK(eig.energy == doctest::Approx(p.omega / 2.0 - p.lambda).epsilon(1e-10));
}

TEST_CASE("construction certifies the eigenpair") {
    for (int ts : {1, 3, 5, 10}) {
        for (int m_exc : {0, 1, 2, 4, 6}) {
            const SectorDims dims(ts, default_cutoff(ts, m_exc));
            const ModelParams p{1.7, 0.4, 0.0};
            const BetheRoots roots = solve_bethe(ts, m_exc);
            const TCEigenstate eig = build_eigenstate(ts, m_exc, roots, dims, p);
            CHECK(eig.residual < 1e-8);
            CHECK(std::abs(eig.state.norm() - 1.0) < 1e-12);
            CHECK(eig.n_lo == std::max(0, m_exc - ts));

            // energy from the roots
            double root_sum = 0.0;
            for (int k = 0; k < eig.roots.roots.size(); ++k)
                root_sum += eig.roots.roots[k].real();
            CHECK(eig.energy == doctest::Approx(p.omega * (m_exc - 0.5 * ts) -
                                                p.lambda * root_sum)
                                    .epsilon(1e-12));

            // eigen-residual against a freshly built matrix
            const Matrix h = build_tavis_cummings(dims, p);
            CHECK((h * eig.state - eig.energy * eig.state).norm() < 1e-8);

            // excitation number is sharp
            const Matrix m_op = build_excitation_number(dims);
            CHECK((m_op * eig.state - (m_exc - 0.5 * ts) * eig.state).norm() <
                  1e-10);
        }
    }
}

TEST_CASE("formula agrees with the sequential operator construction") {
    for (int ts : {1, 2, 5, 10}) {
        for (int m_exc : {1, 2, 3, 6}) {
            const SectorDims dims(ts, default_cutoff(ts, m_exc));
            const BetheRoots roots = solve_bethe(ts, m_exc);
            const TCEigenstate eig =
                build_eigenstate(ts, m_exc, roots, dims, {1.0, 0.25, 0.0});
            Vector oracle =
                build_eigenstate_oracle(ts, m_exc, roots.roots, dims);
            oracle /= oracle.norm();
            // same ray: overlap magnitude 1
            CHECK(std::abs(std::abs(oracle.dot(eig.state)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("cutoff must hold the full photon expansion") {
    const BetheRoots roots = solve_bethe(4, 3);
    CHECK_THROWS_AS(
        build_eigenstate(4, 3, roots, SectorDims(4, 2), {1.0, 0.3, 0.0}),
        ValidationError);
}

TEST_CASE("distinct branches give orthogonal eigenstates") {
    const auto branches = enumerate_branches(2, 2);
    REQUIRE(branches.size() == 3);
    const SectorDims dims(2, default_cutoff(2, 2));
    const ModelParams p{1.0, 0.3, 0.0};
    std::vector<TCEigenstate> eigs;
    for (const auto& b : branches)
        eigs.push_back(build_eigenstate(2, 2, b, dims, p));
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            CHECK(std::abs(eigs[i].state.dot(eigs[j].state)) < 1e-8);
}

} // TEST_SUITE
