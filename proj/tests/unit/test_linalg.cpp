#include <doctest.h>

#include <cmath>

#include "sr1lab/errors.hpp"
#include "sr1lab/linalg.hpp"
#include "sr1lab/rng.hpp"

using namespace sr1lab;

namespace {

SymMatrix random_spd(SplitMix64& rng, int n, double lo, double hi) {
    Vector d(n);
    for (int i = 0; i < n; ++i) d[i] = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    SymMatrix a = SymMatrix::diagonal(d);
    for (int r = 0; r < n; ++r) {
        Vector v(n);
        double vv = 0.0;
        for (int j = 0; j < n; ++j) {
            v[j] = rng.gaussian();
            vv += v[j] * v[j];
        }
        const Vector av = a.matvec(v);
        const double vav = dot(v, av);
        const double c = 2.0 / vv;
        SymMatrix next = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                next.add(i, j, -c * (av[i] * v[j] + v[i] * av[j]) + c * c * vav * v[i] * v[j]);
        a = std::move(next);
    }
    return a;
}

Vector random_vector(SplitMix64& rng, int n) {
    Vector v(n);
    for (int j = 0; j < n; ++j) v[j] = rng.gaussian();
    return v;
}

}  // namespace

TEST_CASE("cholesky identity and diagonal") {
    const SymMatrix id = SymMatrix::identity(3);
    const LowerTriangular L = cholesky(id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) CHECK(L(i, j) == (i == j ? 1.0 : 0.0));

    const LowerTriangular Ld = cholesky(SymMatrix::diagonal({4.0, 9.0}));
    CHECK(Ld(0, 0) == 2.0);
    CHECK(Ld(1, 1) == 3.0);
}

TEST_CASE("cholesky reconstructs 1000 seeded SPD matrices") {
    SplitMix64 rng(42);
    for (int c = 0; c < 1000; ++c) {
        const int n = 1 + static_cast<int>(rng.next() % 20);
        const SymMatrix m = random_spd(rng, n, 0.5, 50.0);
        const SymMatrix back = cholesky(m).multiply_transposed();
        CHECK(sym_difference(back, m).frobenius_norm() <= 1e-12 * m.frobenius_norm());
    }
}

TEST_CASE("cholesky rejects indefinite input") {
    SymMatrix m = SymMatrix::identity(2);
    m.set(1, 1, -1.0);
    CHECK_THROWS_AS(cholesky(m), NotPositiveDefinite);
}

TEST_CASE("solve_spd") {
    const Vector v{2.0, 4.0};
    CHECK(solve_spd(SymMatrix::identity(2), v) == v);

    const Vector x = solve_spd(SymMatrix::diagonal({2.0, 4.0}), v);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));

    SplitMix64 rng(7);
    for (int c = 0; c < 50; ++c) {
        const int n = 2 + static_cast<int>(rng.next() % 19);
        const SymMatrix m = random_spd(rng, n, 1.0, 1000.0);
        const Vector b = random_vector(rng, n);
        const Vector sol = solve_spd(m, b);
        CHECK(norm(subtract(m.matvec(sol), b)) <= 1e-10 * norm(b));
    }
}

TEST_CASE("eigvals_sym basics") {
    const std::vector<double> e1 = eigvals_sym(SymMatrix::diagonal({3.0, 1.0, 2.0}));
    CHECK(e1 == std::vector<double>{1.0, 2.0, 3.0});

    const std::vector<double> e2 = eigvals_sym(SymMatrix::identity(4));
    for (double e : e2) CHECK(e == doctest::Approx(1.0).epsilon(1e-14));

    // [[2,1],[1,2]] has characteristic roots 1 and 3.
    SymMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(1, 1, 2.0);
    m.set(1, 0, 1.0);
    const std::vector<double> e3 = eigvals_sym(m);
    CHECK(e3[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e3[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eigenvalue sum matches trace") {
    SplitMix64 rng(11);
    for (int c = 0; c < 200; ++c) {
        const int n = 2 + static_cast<int>(rng.next() % 19);
        const SymMatrix m = random_spd(rng, n, 0.1, 100.0);
        double sum = 0.0;
        for (double e : eigvals_sym(m)) sum += e;
        CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-10));
    }
}

TEST_CASE("psd_dominates") {
    const SymMatrix id = SymMatrix::identity(3);
    SymMatrix two = SymMatrix::identity(3);
    two.scale(2.0);
    CHECK(psd_dominates(id, two, 1e-10));
    CHECK_FALSE(psd_dominates(two, id, 1e-10));
    CHECK(psd_dominates(id, id, 1e-10));  // reflexive
    CHECK_THROWS_AS(psd_dominates(id, SymMatrix::identity(2), 1e-10), DimensionMismatch);

    SplitMix64 rng(5);
    for (int c = 0; c < 100; ++c) {
        const int n = 2 + static_cast<int>(rng.next() % 9);
        const SymMatrix a = random_spd(rng, n, 0.5, 10.0);
        const SymMatrix p = random_spd(rng, n, 0.1, 2.0);
        const SymMatrix g = sym_add_scaled(a, p, 1.0);
        CHECK(psd_dominates(a, g, 1e-10));
        // antisymmetry up to tolerance: strict domination both ways is out
        CHECK_FALSE(psd_dominates(g, a, 1e-10));
    }
}

TEST_CASE("rank_one_update") {
    const Vector e1{1.0, 0.0};
    const SymMatrix r1 = rank_one_update(SymMatrix(2), 1.0, e1);
    CHECK(r1(0, 0) == 1.0);
    CHECK(r1(0, 1) == 0.0);
    CHECK(r1(1, 1) == 0.0);

    const SymMatrix r2 = rank_one_update(SymMatrix::identity(2), -1.0, e1);
    CHECK(r2(0, 0) == 0.0);
    CHECK(r2(1, 1) == 1.0);

    const SymMatrix r3 = rank_one_update(SymMatrix::diagonal({2.0, 3.0}), -4.0, {-0.5, 0.0});
    CHECK(r3(0, 0) == doctest::Approx(1.0));
    CHECK(r3(1, 1) == doctest::Approx(3.0));
    CHECK(r3(0, 1) == 0.0);
}

TEST_CASE("weighted_norm") {
    const Vector v{1.0, 1.0};
    CHECK(weighted_norm(v, SymMatrix::identity(2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(weighted_norm(v, SymMatrix::diagonal({4.0, 9.0})) == doctest::Approx(std::sqrt(13.0)));

    SymMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(1, 1, 2.0);
    m.set(1, 0, 1.0);
    CHECK(weighted_norm({1.0, 0.0}, m) == doctest::Approx(std::sqrt(2.0)));

    SymMatrix neg = SymMatrix::identity(2);
    neg.scale(-1.0);
    CHECK_THROWS_AS(weighted_norm(v, neg), IndefiniteWeight);
}

TEST_CASE("logdet_spd") {
    CHECK(logdet_spd(SymMatrix::identity(5)) == 0.0);
    CHECK(logdet_spd(SymMatrix::diagonal({std::exp(1.0), std::exp(2.0)})) ==
          doctest::Approx(3.0).epsilon(1e-14));

    SplitMix64 rng(13);
    for (int c = 0; c < 100; ++c) {
        const int n = 2 + static_cast<int>(rng.next() % 9);
        const SymMatrix m = random_spd(rng, n, 0.5, 20.0);
        double via_eigs = 0.0;
        for (double e : eigvals_sym(m)) via_eigs += std::log(e);
        CHECK(logdet_spd(m) == doctest::Approx(via_eigs).epsilon(1e-10));
    }
}

TEST_CASE("numerical_rank") {
    CHECK(numerical_rank(SymMatrix(4)) == 0);
    CHECK(numerical_rank(SymMatrix::diagonal({1.0, 0.0, 2.0})) == 2);
    CHECK(numerical_rank(SymMatrix::identity(6)) == 6);
}

TEST_CASE("relative_eigs recovers the sandwich interval") {
    SplitMix64 rng(17);
    const SymMatrix a = random_spd(rng, 6, 1.0, 10.0);
    SymMatrix g = a;
    g.scale(3.0);
    const std::vector<double> rel = relative_eigs(a, g);
    CHECK(rel.front() == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(rel.back() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("spd_inverse and product residual") {
    SplitMix64 rng(19);
    const SymMatrix m = random_spd(rng, 8, 0.5, 50.0);
    CHECK(product_residual(m, spd_inverse(m)) <= 1e-10 * 8);
}
