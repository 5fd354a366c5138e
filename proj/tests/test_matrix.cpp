#include <catch2/catch_amalgamated.hpp>

#include "octo/matrix.hpp"
#include "octo/random.hpp"

using namespace octo;
using namespace octo::units;

TEST_CASE("dagger is an antiautomorphism on real-entried matrices") {
    Rng rng(41);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int s = 0; s < 50; ++s) {
        OctMatrix a(2, 3), b(3, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 3; ++c) a(r, c) = Octonion(dist(rng));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 2; ++c) b(r, c) = Octonion(dist(rng));
        REQUIRE(frobenius_norm(dagger(matmul(a, b)) -
                               matmul(dagger(b), dagger(a))) <= 1e-12);
    }
}

TEST_CASE("dagger antiautomorphism holds entrywise for Hermitian 2x2 pairs") {
    Rng rng(43);
    for (int s = 0; s < 50; ++s) {
        const OctMatrix a = random_hermitian2(rng).to_matrix();
        const OctMatrix b = random_hermitian2(rng).to_matrix();
        const OctMatrix lhs = dagger(matmul(a, b));
        const OctMatrix rhs = matmul(dagger(b), dagger(a));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                REQUIRE(norm(lhs(r, c) - rhs(r, c)) <= 1e-12);
    }
}

TEST_CASE("matvec and matmul keep the matrix entry on the left") {
    // A = [[0, i]], v = (0, j): (A v)_0 = i * j = k, not j * i.
    OctMatrix a(1, 2, {Octonion(0.0), i});
    const OctVector v{Octonion(0.0), j};
    REQUIRE(norm(matvec(a, v)[0] - k) == 0.0);
}

TEST_CASE("shape mismatches throw") {
    const OctMatrix a(2, 2);
    const OctMatrix b(3, 3);
    const OctVector v(3);
    REQUIRE_THROWS_AS(matmul(a, b), ShapeMismatch);
    REQUIRE_THROWS_AS(matvec(a, v), ShapeMismatch);
    REQUIRE_THROWS_AS(inner(OctVector(2), v), ShapeMismatch);
    REQUIRE_THROWS_AS(outer(OctVector(2), v), ShapeMismatch);
    REQUIRE_THROWS_AS(trace(OctMatrix(2, 3)), ShapeMismatch);
    REQUIRE_THROWS_AS(tilde(OctMatrix(2, 3)), ShapeMismatch);
    REQUIRE_THROWS_AS(a + b, ShapeMismatch);
}

TEST_CASE("inner and outer product conventions") {
    const OctVector v{i, j};
    const OctVector w{k, l};
    // inner = conj(i) k + conj(j) l = -(ik) - (jl).
    REQUIRE(norm(inner(v, w) - (-(i * k) - j * l)) == 0.0);
    REQUIRE(norm(outer(v, w)(0, 1) - i * conj(l)) == 0.0);
    REQUIRE(norm(inner(v, v) - Octonion(2.0)) == 0.0);
}

TEST_CASE("Hermitian parameter forms round trip") {
    const Hermitian2Params h2{1.5, -2.0, i * 0.5 + kl};
    const Hermitian2Params r2 = Hermitian2Params::from_matrix(h2.to_matrix());
    REQUIRE(r2.p == h2.p);
    REQUIRE(r2.m == h2.m);
    REQUIRE(norm(r2.a - h2.a) == 0.0);
    REQUIRE(is_hermitian(h2.to_matrix()));

    const Hermitian3Params h3{1.0, 2.0, 3.0, i, j * 0.25, kl - l};
    const Hermitian3Params r3 = Hermitian3Params::from_matrix(h3.to_matrix());
    REQUIRE(norm(r3.a - h3.a) == 0.0);
    REQUIRE(norm(r3.b - h3.b) == 0.0);
    REQUIRE(norm(r3.c - h3.c) == 0.0);
    REQUIRE(is_hermitian(h3.to_matrix()));
}

TEST_CASE("non-Hermitian matrices are rejected by from_matrix") {
    OctMatrix m(2, 2, {Octonion(1.0), i, i, Octonion(1.0)});
    REQUIRE_FALSE(is_hermitian(m));
    REQUIRE_THROWS_AS(Hermitian2Params::from_matrix(m), std::invalid_argument);
}

TEST_CASE("det2 on the worked example is zero") {
    const Hermitian2Params h{1.0, 1.0, -i};
    REQUIRE(det2(h) == 0.0);
}

TEST_CASE("invariants3 are real and match the closed forms") {
    Rng rng(47);
    for (int s = 0; s < 50; ++s) {
        const Hermitian3Params h = random_hermitian3(rng);
        const Invariants3 inv = invariants3(h);
        REQUIRE(std::abs(inv.tr - re(trace(h.to_matrix()))) <= 1e-12);
        // sigma via the matrix: (tr^2 - tr(A^2)) / 2 stays real for Hermitian A.
        const OctMatrix a2 = matmul(h.to_matrix(), h.to_matrix());
        const Octonion tr2 = trace(a2);
        REQUIRE(norm(im(tr2)) <= 1e-12);
        REQUIRE(std::abs(inv.sigma - 0.5 * (inv.tr * inv.tr - re(tr2))) <= 1e-10);
        // det is real by construction; check the 2 Re(b(ac)) term ordering.
        const double det = h.p * h.m * h.n + 2.0 * re(h.b * (h.a * h.c)) -
                           h.n * norm_sq(h.a) - h.m * norm_sq(h.b) -
                           h.p * norm_sq(h.c);
        REQUIRE(std::abs(inv.det - det) <= 1e-12);
    }
}

TEST_CASE("tilde subtracts the trace from the diagonal") {
    const Hermitian2Params h{2.0, 3.0, i};
    const OctMatrix t = tilde(h.to_matrix());
    REQUIRE(norm(t(0, 0) - Octonion(-3.0)) == 0.0);
    REQUIRE(norm(t(1, 1) - Octonion(-2.0)) == 0.0);
    REQUIRE(norm(t(0, 1) - i) == 0.0);
}

TEST_CASE("random generators respect their advertised structure") {
    Rng rng(53);
    for (int s = 0; s < 50; ++s) {
        REQUIRE(std::abs(norm(random_unit(rng)) - 1.0) <= 1e-12);
        const Octonion u = random_unit_imaginary(rng);
        REQUIRE(std::abs(norm(u) - 1.0) <= 1e-12);
        REQUIRE(re(u) == 0.0);
        const Hermitian2Params h = random_in_A(rng);
        REQUIRE(h.p == h.m);
        REQUIRE(re(h.a) == 0.0);
        REQUIRE(is_hermitian(h.to_matrix()));
        REQUIRE(is_hermitian(random_hermitian3(rng).to_matrix()));
    }
}
