#include "rwa/bethe.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace rwa {

namespace {

constexpr double kMinDamping = 9.5367431640625e-07; // 2^-20
constexpr double kForcedStep = 1.9073486328125e-06; // 2^-19: accept even uphill
constexpr double kTrialPoleGuard = 1e-12;

void sort_roots(Vector& roots) {
    std::vector<Complex> v(roots.data(), roots.data() + roots.size());
    std::sort(v.begin(), v.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    for (int i = 0; i < roots.size(); ++i)
        roots[i] = v[size_t(i)];
}

// Smallest |e_i| and pairwise |e_i - e_j| over the vector.
std::pair<double, double> pole_distances(const Vector& e) {
    double zmin = std::numeric_limits<double>::infinity();
    double pmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < e.size(); ++i) {
        zmin = std::min(zmin, std::abs(e[i]));
        for (int j = i + 1; j < e.size(); ++j)
            pmin = std::min(pmin, std::abs(e[i] - e[j]));
    }
    return {zmin, pmin};
}

// Residual without pole validation; caller guarantees distances.
Vector raw_residual(const Vector& e, double two_s) {
    const int m = int(e.size());
    Vector f(m);
    for (int n = 0; n < m; ++n) {
        Complex acc = two_s / e[n] - e[n];
        for (int j = 0; j < m; ++j)
            if (j != n)
                acc -= 2.0 / (e[n] - e[j]);
        f[n] = acc;
    }
    return f;
}

} // namespace

void BetheConfig::validate() const {
    if (!(tol_residual > 0.0) || !(collision_tol > 0.0))
        throw ValidationError("Bethe tolerances must be positive");
    if (max_iter < 1)
        throw ValidationError("max_iter must be at least 1");
    if (!(damping > 0.0) || damping > 1.0)
        throw ValidationError("initial damping must lie in (0, 1]");
}

Vector initial_guess(int twice_spin, int excitations) {
    if (twice_spin < 1)
        throw ValidationError("twice-spin must be positive");
    if (excitations < 0)
        throw ValidationError("excitation count must be non-negative");
    Vector g(excitations);
    if (excitations == 0)
        return g;
    const double root2s = std::sqrt(double(twice_spin));
    const double a = root2s / 2.0;
    const double b = root2s / excitations;
    for (int k = 0; k < excitations; ++k)
        g[k] = Complex(a, (k + 1) * b);
    return g;
}

Vector bethe_residual(const Vector& roots, int twice_spin, double collision_tol) {
    if (twice_spin < 1)
        throw ValidationError("twice-spin must be positive");
    const auto [zmin, pmin] = pole_distances(roots);
    if (roots.size() > 0 && zmin < collision_tol)
        throw ZeroRoot("root at the origin pole (|e| = " + std::to_string(zmin) + ")");
    if (pmin < collision_tol)
        throw RootCollision("colliding roots (min distance " + std::to_string(pmin) + ")");
    return raw_residual(roots, double(twice_spin));
}

Matrix bethe_jacobian(const Vector& roots, int twice_spin) {
    const int m = int(roots.size());
    const double two_s = double(twice_spin);
    Matrix jac = Matrix::Zero(m, m);
    for (int n = 0; n < m; ++n) {
        Complex diag = -two_s / (roots[n] * roots[n]) - 1.0;
        for (int j = 0; j < m; ++j) {
            if (j == n)
                continue;
            const Complex d = roots[n] - roots[j];
            const Complex inv2 = 2.0 / (d * d);
            diag += inv2;
            jac(n, j) = -inv2;
        }
        jac(n, n) = diag;
    }
    return jac;
}

BetheRoots solve_bethe(int twice_spin, int excitations, const Vector* guess,
                       const BetheConfig& config) {
    config.validate();
    if (excitations < 0)
        throw ValidationError("excitation count must be non-negative");
    BetheRoots out;
    out.twice_spin = twice_spin;
    out.excitations = excitations;
    if (excitations == 0) {
        out.roots = Vector(0);
        return out;
    }

    Vector e = guess ? *guess : initial_guess(twice_spin, excitations);
    if (int(e.size()) != excitations)
        throw ValidationError("guess length must equal the excitation count");

    const double two_s = double(twice_spin);
    double res_norm = bethe_residual(e, twice_spin, kTrialPoleGuard).norm();

    for (int iter = 0; iter < config.max_iter; ++iter) {
        if (res_norm < config.tol_residual) {
            sort_roots(e);
            out.roots = e;
            // Certify independently of the loop state; this also enforces the
            // zero/collision invariants on the final vector.
            out.residual_norm =
                bethe_residual(e, twice_spin, config.collision_tol).norm();
            out.iterations = iter;
            if (!(out.residual_norm < config.tol_residual))
                throw NonConvergence("re-certification failed");
            return out;
        }

        const Vector f = raw_residual(e, two_s);
        const Matrix jac = bethe_jacobian(e, twice_spin);
        Eigen::FullPivLU<Matrix> lu(jac);
        if (!lu.isInvertible())
            throw SingularJacobian("singular Jacobian at iteration " +
                                   std::to_string(iter));
        const Vector step = lu.solve(-f);
        if (!step.allFinite())
            throw SingularJacobian("non-finite Newton step");

        double damp = config.damping;
        bool moved = false;
        while (damp > kMinDamping) {
            const Vector trial = e + damp * step;
            const auto [zmin, pmin] = pole_distances(trial);
            if (zmin < kTrialPoleGuard || pmin < kTrialPoleGuard) {
                damp *= 0.5; // trial sits on a pole; shorten the step
                continue;
            }
            const double trial_norm = raw_residual(trial, two_s).norm();
            if (trial_norm < res_norm || damp <= kForcedStep) {
                e = trial;
                res_norm = trial_norm;
                moved = true;
                break;
            }
            damp *= 0.5;
        }
        if (!moved)
            throw NonConvergence("line search exhausted at iteration " +
                                 std::to_string(iter));
    }
    throw NonConvergence("no convergence for 2S=" + std::to_string(twice_spin) +
                         " M=" + std::to_string(excitations) +
                         " (residual " + std::to_string(res_norm) + ")");
}

std::vector<BetheRoots> enumerate_branches(int twice_spin, int excitations,
                                           int tries, unsigned seed,
                                           const BetheConfig& config) {
    if (excitations > 2)
        throw ValidationError("branch enumeration is supported only for M <= 2");
    if (excitations == 0)
        return {solve_bethe(twice_spin, 0, nullptr, config)};

    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<BetheRoots> found;
    const Vector base = initial_guess(twice_spin, excitations);

    for (int k = 0; k < tries; ++k) {
        Vector g = base;
        if (k > 0)
            for (int i = 0; i < g.size(); ++i)
                g[i] = g[i] * (1.0 + 0.7 * normal(rng)) +
                       0.7 * Complex(normal(rng), normal(rng));
        BetheRoots sol;
        try {
            sol = solve_bethe(twice_spin, excitations, &g, config);
        } catch (const NumericalError&) {
            continue; // best effort: bad basin, try another perturbation
        }
        // Compare as multisets: equal-real conjugate pairs can leave the
        // sorted order sensitive to last-ulp noise.
        const auto multiset_gap = [](const Vector& a, const Vector& b) {
            std::vector<bool> used(size_t(b.size()), false);
            double worst = 0.0;
            for (int i = 0; i < a.size(); ++i) {
                double best = std::numeric_limits<double>::infinity();
                int arg = -1;
                for (int j = 0; j < b.size(); ++j) {
                    if (used[size_t(j)])
                        continue;
                    const double d = std::abs(a[i] - b[j]);
                    if (d < best) {
                        best = d;
                        arg = j;
                    }
                }
                used[size_t(arg)] = true;
                worst = std::max(worst, best);
            }
            return worst;
        };
        bool duplicate = false;
        for (const auto& prev : found)
            if (multiset_gap(prev.roots, sol.roots) < 1e-6)
                duplicate = true;
        if (!duplicate)
            found.push_back(std::move(sol));
    }
    return found;
}

} // namespace rwa
