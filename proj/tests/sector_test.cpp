#include <doctest.h>

#include <cmath>

#include "rwa/sector.hpp"

using namespace rwa;

TEST_SUITE("sector") {

TEST_CASE("dimension counts every (m, n) pair") {
    CHECK(SectorDims(1, 0).dim() == 2);
    CHECK(SectorDims(4, 3).dim() == 20);
    CHECK(SectorDims(10, 30).dim() == 341);
    CHECK(SectorDims(3, 5).spin() == doctest::Approx(1.5));
}

TEST_CASE("constructor rejects bad shapes") {
    CHECK_THROWS_AS(SectorDims(0, 3), ValidationError);
    CHECK_THROWS_AS(SectorDims(-2, 3), ValidationError);
    CHECK_THROWS_AS(SectorDims(4, -1), ValidationError);
}

TEST_CASE("basis order is m descending, n ascending") {
    const SectorDims dims(4, 3);
    // block of the m = 0 row starts after two full photon blocks
    CHECK(dims.index_of(4, 0) == 0);
    CHECK(dims.index_of(4, 3) == 3);
    CHECK(dims.index_of(2, 0) == 4);
    CHECK(dims.index_of(0, 2) == 10);
    CHECK(dims.index_of(-4, 3) == 19);
}

TEST_CASE("index and labels round-trip over whole sectors") {
    for (const SectorDims dims : {SectorDims(1, 0), SectorDims(4, 3),
                                  SectorDims(5, 7), SectorDims(10, 12)}) {
        for (int i = 0; i < dims.dim(); ++i) {
            const auto [tm, n] = dims.labels_of(i);
            CHECK(dims.index_of(tm, n) == i);
            CHECK(((tm + dims.twice_spin) % 2) == 0);
            CHECK(std::abs(tm) <= dims.twice_spin);
            CHECK(n >= 0);
            CHECK(n <= dims.n_max);
        }
    }
}

TEST_CASE("index rejects labels outside the sector") {
    const SectorDims dims(4, 3);
    CHECK_THROWS_AS(dims.index_of(6, 0), ValidationError);
    CHECK_THROWS_AS(dims.index_of(3, 0), ValidationError); // wrong parity
    CHECK_THROWS_AS(dims.index_of(0, 4), ValidationError);
    CHECK_THROWS_AS(dims.index_of(0, -1), ValidationError);
}

TEST_CASE("ladder coefficients match the closed form") {
    // C(S, m, +/-) = sqrt((S -+ m)(S +- m + 1)) recomputed from halves
    for (int ts = 1; ts <= 10; ++ts) {
        const double s = 0.5 * ts;
        for (int tm = -ts; tm <= ts; tm += 2) {
            const double m = 0.5 * tm;
            const double up = ladder_coefficient(ts, tm, +1);
            const double dn = ladder_coefficient(ts, tm, -1);
            CHECK(up == doctest::Approx(std::sqrt((s - m) * (s + m + 1.0)))
                             .epsilon(1e-14));
            CHECK(dn == doctest::Approx(std::sqrt((s + m) * (s - m + 1.0)))
                             .epsilon(1e-14));
        }
        CHECK(ladder_coefficient(ts, ts, +1) == 0.0);
        CHECK(ladder_coefficient(ts, -ts, -1) == 0.0);
    }
    CHECK(ladder_coefficient(1, -1, +1) == doctest::Approx(1.0));
    CHECK(ladder_coefficient(5, 1, +1) == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("ladder coefficient rejects labels off the ladder") {
    CHECK_THROWS_AS(ladder_coefficient(4, 6, +1), ValidationError);
    CHECK_THROWS_AS(ladder_coefficient(4, 3, +1), ValidationError);
    CHECK_THROWS_AS(ladder_coefficient(4, 0, 2), ValidationError);
}

TEST_CASE("single spin raiser without photons") {
    const SectorDims dims(1, 0);
    const auto spin = build_spin_operators(dims);
    // basis: index 0 = up, index 1 = down
    CHECK(spin.splus(0, 1) == Complex(1.0, 0.0));
    CHECK(spin.splus(0, 0) == Complex(0.0, 0.0));
    CHECK(spin.splus(1, 0) == Complex(0.0, 0.0));
    CHECK(spin.splus(1, 1) == Complex(0.0, 0.0));
    CHECK(spin.sz(0, 0) == Complex(0.5, 0.0));
    CHECK(spin.sz(1, 1) == Complex(-0.5, 0.0));
}

TEST_CASE("photon ladder truncates at the cutoff") {
    const SectorDims dims(1, 1);
    const auto boson = build_boson_operators(dims);
    // phi_0 -> phi_1 with amplitude 1; phi_1 -> 0 above the cutoff
    const int up0 = dims.index_of(1, 0), up1 = dims.index_of(1, 1);
    CHECK(boson.adag(up1, up0) == Complex(1.0, 0.0));
    for (int i = 0; i < dims.dim(); ++i)
        CHECK(boson.adag(i, up1) == Complex(0.0, 0.0));
    CHECK(boson.a(up0, up1) == Complex(1.0, 0.0));
    CHECK(boson.nhat(up1, up1) == Complex(1.0, 0.0));
    CHECK(boson.nhat(up0, up0) == Complex(0.0, 0.0));
}

TEST_CASE("operators are mutual adjoints and real where expected") {
    const SectorDims dims(3, 4);
    const auto spin = build_spin_operators(dims);
    const auto boson = build_boson_operators(dims);
    CHECK((spin.splus - spin.sminus.adjoint()).norm() == 0.0);
    CHECK((boson.adag - boson.a.adjoint()).norm() == 0.0);
    CHECK((spin.sz - spin.sz.adjoint()).norm() == 0.0);
    CHECK((boson.nhat - boson.nhat.adjoint()).norm() == 0.0);
}

TEST_CASE("spin algebra holds on the sector") {
    const SectorDims dims(5, 2);
    const auto spin = build_spin_operators(dims);
    const Matrix comm_zp = spin.sz * spin.splus - spin.splus * spin.sz;
    CHECK((comm_zp - spin.splus).norm() < 1e-13);
    const Matrix comm_pm = spin.splus * spin.sminus - spin.sminus * spin.splus;
    CHECK((comm_pm - 2.0 * spin.sz).norm() < 1e-13);
    // Casimir from the ladder representation agrees with S(S+1) I
    const Matrix casimir = 0.5 * (spin.splus * spin.sminus +
                                  spin.sminus * spin.splus) +
                           spin.sz * spin.sz;
    CHECK((casimir - spin.ssq).norm() < 1e-12);
}

TEST_CASE("boson commutator is canonical below the cutoff") {
    const SectorDims dims(2, 5);
    const auto boson = build_boson_operators(dims);
    const Matrix comm = boson.a * boson.adag - boson.adag * boson.a;
    for (int i = 0; i < dims.dim(); ++i) {
        const auto [tm, n] = dims.labels_of(i);
        (void)tm;
        const double expected = (n < dims.n_max) ? 1.0 : -double(dims.n_max);
        CHECK(std::abs(comm(i, i) - expected) < 1e-13);
    }
    CHECK((boson.nhat - boson.adag * boson.a).norm() < 1e-13);
}

} // TEST_SUITE
