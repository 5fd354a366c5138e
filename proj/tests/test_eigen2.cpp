#include <catch2/catch_amalgamated.hpp>

#include "octo/eigen2.hpp"
#include "octo/random.hpp"

using namespace octo;
using namespace octo::units;

namespace {
const Hermitian2Params kExample{1.0, 1.0, -i};  // [[1, -i], [i, 1]]
}

TEST_CASE("membership classification") {
    const AMembership am = classify_in_A(kExample);
    REQUIRE(am.in_A);
    REQUIRE(am.p == 1.0);
    REQUIRE(am.q == 1.0);
    REQUIRE(norm(am.r_hat - i) == 0.0);
    REQUIRE(am.defect <= 1e-15);

    REQUIRE_FALSE(classify_in_A({1.0, 2.0, -i}).in_A);
    REQUIRE_FALSE(classify_in_A({1.0, 1.0, Octonion(0.5) - i}).in_A);
    REQUIRE_FALSE(classify_in_A({1.0, 1.0, Octonion()}).in_A);
    REQUIRE(classify_in_A({1.0, 2.0, -i}).defect > 0.5);
}

TEST_CASE("left eigenpair worked example") {
    const OctVector v{Octonion(1.0), k};
    const EigenPair2 pair = left_pair_from_V(kExample, v);
    REQUIRE(norm(pair.lambda - (Octonion(1.0) + j)) <= 1e-12);
    REQUIRE(pair.residual <= 1e-12);
    REQUIRE(pair.side == Side::left);
    // A v = (1+j) v entrywise.
    const OctVector av = matvec(kExample.to_matrix(), v);
    REQUIRE(vector_norm(av - vec_scale_left(pair.lambda, v)) <= 1e-12);
}

TEST_CASE("left eigenpairs exist for every member of V") {
    Rng rng(59);
    for (int s = 0; s < 200; ++s) {
        const OctVector v = sample_V(rng);
        REQUIRE(in_V(v));
        const EigenPair2 pair = left_pair_from_V(kExample, v);
        REQUIRE(pair.residual <= 1e-12);
        const AMembership am = classify_in_A(kExample);
        REQUIRE(std::abs(norm(pair.lambda - Octonion(am.p)) - am.q) <= 1e-12);
        REQUIRE(std::abs(dot(pair.lambda, am.r_hat)) <= 1e-12);
    }
}

TEST_CASE("left multiplication preserves V and eigenvector status") {
    Rng rng(61);
    for (int s = 0; s < 100; ++s) {
        const OctVector v = sample_V(rng);
        const Octonion o = random_unit(rng);
        const OctVector ov{o * v[0], o * v[1]};
        REQUIRE(in_V(ov, 1e-9));
        REQUIRE(left_pair_from_V(kExample, ov).residual <= 1e-10);
    }
}

TEST_CASE("left constructor rejects bad inputs") {
    REQUIRE_THROWS_AS(left_pair_from_V({1.0, 2.0, -i}, sample_V(1)), NotInA);
    REQUIRE_THROWS_AS(left_pair_from_V(kExample, OctVector{Octonion(1.0), Octonion(1.0)}),
                      NotInV);
    REQUIRE_THROWS_AS(left_pair_from_V(kExample, OctVector{Octonion(2.0), k}), NotInV);
}

TEST_CASE("right eigenpair worked example") {
    const Octonion lambda = Octonion(1.0) + kl;
    const EigenPair2 pair = right_pair_for_lambda(kExample, lambda);
    REQUIRE(pair.residual <= 1e-12);
    REQUIRE(pair.side == Side::right);
    // The deterministic frame reproduces the printed eigenvector (j, l)
    // up to normalization.
    REQUIRE(norm(pair.v[0] - j / std::sqrt(2.0)) <= 1e-12);
    REQUIRE(norm(pair.v[1] - l / std::sqrt(2.0)) <= 1e-12);
    const OctVector av = matvec(kExample.to_matrix(), pair.v);
    REQUIRE(vector_norm(av - vec_scale_right(pair.v, lambda)) <= 1e-12);
}

TEST_CASE("right eigenpair general family") {
    // v = (j, k conj(s)), lambda = p + q s with s = cos t + kl sin t.
    const double p = 2.0, q = 1.5, t = 0.8;
    const Hermitian2Params h{p, p, i * -q};
    const Octonion s = unit_complex(kl, t);
    const Octonion lambda = Octonion(p) + s * q;
    OctVector v{j, k * conj(s)};
    v = v / std::sqrt(2.0);
    REQUIRE(vector_norm(matvec(h.to_matrix(), v) - vec_scale_right(v, lambda)) <=
            1e-12);

    // The flipped vector carries the conjugate eigenvalue family p - q s.
    const OctVector w = flip(v);
    const Octonion lambda_w = Octonion(p) - s * q;
    REQUIRE(vector_norm(matvec(h.to_matrix(), w) - vec_scale_right(w, lambda_w)) <=
            1e-12);
}

TEST_CASE("right constructor rejects inadmissible eigenvalues") {
    REQUIRE_THROWS_AS(right_pair_for_lambda(kExample, Octonion(1.0) + kl * 2.0),
                      InadmissibleLambda);  // |lambda - p| != q
    REQUIRE_THROWS_AS(right_pair_for_lambda(kExample, Octonion(1.0) + i),
                      InadmissibleLambda);  // lambda . a != 0
    REQUIRE_THROWS_AS(right_pair_for_lambda(kExample, Octonion(2.0)),
                      InadmissibleLambda);  // real lambda
    REQUIRE_THROWS_AS(right_pair_for_lambda({1.0, 2.0, -i}, Octonion(1.0) + kl),
                      NotInA);
}

TEST_CASE("characteristic equation on constructed right pairs") {
    Rng rng(67);
    for (int s = 0; s < 100; ++s) {
        const Hermitian2Params h = random_in_A(rng);
        const AMembership am = classify_in_A(h);
        Octonion u = im(random_octonion(rng));
        u -= am.r_hat * dot(am.r_hat, u);
        if (norm(u) < 1e-3) continue;
        const Octonion lambda = Octonion(am.p) + (u / norm(u)) * am.q;
        const EigenPair2 pair = right_pair_for_lambda(h, lambda);

        const Char2Residual cr = char2_residual(h, pair.v, pair.lambda);
        REQUIRE(norm(cr.primary) <= 1e-10);
        REQUIRE(norm(cr.alternate) <= 1e-10);
        REQUIRE(cr.cross_check <= 1e-10);

        const Char2Constraints cc = char2_constraints(h, pair.v, pair.lambda);
        REQUIRE(cc.max_residual <= 1e-10);
        REQUIRE(cc.im_bound <= 1e-12);

        // Eigenvector components are pure imaginary and orthogonal to the
        // quaternionic subalgebra generated by lambda and a.
        REQUIRE(std::abs(re(pair.v[0])) <= 1e-12);
        REQUIRE(std::abs(re(pair.v[1])) <= 1e-12);
        REQUIRE(std::abs(dot(h.a * pair.lambda, pair.v[0])) <= 1e-10);
    }
}

TEST_CASE("characteristic equation fails off eigenpairs") {
    const OctVector v = sample_V(3);
    const Octonion lambda = Octonion(0.5) + jl;
    const Char2Residual cr = char2_residual(kExample, v, lambda);
    REQUIRE(norm(cr.primary) > 1e-3);
}

TEST_CASE("char2_residual rejects zero components") {
    REQUIRE_THROWS_AS(char2_residual(kExample, OctVector{i, Octonion()}, i),
                      ZeroComponent);
}

TEST_CASE("Dieudonne determinant of the Hermitian square") {
    const AMembership am = classify_in_A(kExample);
    // Admissible lambda: det(Q Q+) = 0.
    REQUIRE(dieudonne_residual(kExample, Octonion(1.0) + kl) <= 1e-12);
    // |lambda - p| != |a|: strictly positive.
    REQUIRE(dieudonne_residual(kExample, Octonion(1.0) + kl * 0.5) > 1e-3);
    REQUIRE(am.q == 1.0);
    REQUIRE_THROWS_AS(dieudonne_residual(kExample, Octonion(1.0) + i),
                      PreconditionViolated);
}

TEST_CASE("decomposition of the right worked example") {
    const EigenPair2 pair = right_pair_for_lambda(kExample, Octonion(1.0) + kl);
    const DecomposeReport r = decompose_right(kExample, pair);
    REQUIRE(norm(r.lambda_w - (Octonion(1.0) - kl)) <= 1e-12);
    REQUIRE(r.surprise <= 1e-12);
    REQUIRE(r.surprise_ii <= 1e-12);
    REQUIRE(r.new_ortho <= 1e-12);
    // Nonassociativity witness: (lambda_v (v v+)) w does not vanish.
    REQUIRE(r.witness_norm > 0.5);

    // The explicit coefficient form (1 + kl)/2 and (1 - kl)/2 on (j, l), (l, j).
    const OctVector v{j, l};
    const OctVector w{l, j};
    const OctMatrix rebuilt =
        detail::scalar_left_outer((Octonion(1.0) + kl) * 0.5, v) +
        detail::scalar_left_outer((Octonion(1.0) - kl) * 0.5, w);
    REQUIRE(frobenius_norm(kExample.to_matrix() - rebuilt) <= 1e-12);
}

TEST_CASE("decompose_right validates its inputs") {
    const EigenPair2 pair = right_pair_for_lambda(kExample, Octonion(1.0) + kl);
    EigenPair2 bad = pair;
    bad.side = Side::left;
    REQUIRE_THROWS_AS(decompose_right(kExample, bad), InvalidPair);
    bad = pair;
    bad.v = bad.v * 2.0;
    REQUIRE_THROWS_AS(decompose_right(kExample, bad), InvalidPair);
    bad = pair;
    bad.lambda = bad.lambda + j;
    REQUIRE_THROWS_AS(decompose_right(kExample, bad), InvalidPair);
}

TEST_CASE("left decomposition of the worked example") {
    OctVector v{Octonion(1.0), k};
    v = v / std::sqrt(2.0);
    const EigenPair2 pair = left_pair_from_V(kExample, v);
    const LeftDecomposeReport r = decompose_left_quaternionic(kExample, pair);
    REQUIRE(norm(r.lambda_w - (Octonion(1.0) - j)) <= 1e-12);
    REQUIRE(r.reconstruction <= 1e-12);

    // The explicit coefficient form (1 + j)/2 and (1 - j)/2 on (1, k), (k, 1).
    const OctVector u{Octonion(1.0), k};
    const OctVector w{k, Octonion(1.0)};
    const OctMatrix rebuilt =
        detail::scalar_left_outer((Octonion(1.0) + j) * 0.5, u) +
        detail::scalar_left_outer((Octonion(1.0) - j) * 0.5, w);
    REQUIRE(frobenius_norm(kExample.to_matrix() - rebuilt) <= 1e-12);
}

TEST_CASE("left decomposition fails off the quaternionic locus") {
    // x, y chosen so [r, x, y] != 0 with r = i.
    OctVector v{j, l};
    v = v / std::sqrt(2.0);
    const EigenPair2 pair = left_pair_from_V(kExample, v);
    REQUIRE_THROWS_AS(decompose_left_quaternionic(kExample, pair), NotQuaternionic);
}

TEST_CASE("real eigendecomposition") {
    Rng rng(71);
    for (int s = 0; s < 100; ++s) {
        const Hermitian2Params h = random_hermitian2(rng);
        const auto pairs = real_eigen2(h);
        REQUIRE(pairs.size() == 2);
        for (const EigenPair2& pr : pairs) {
            REQUIRE(pr.residual <= 1e-9);
            REQUIRE(norm(im(pr.lambda)) == 0.0);
        }
        const OctMatrix rebuilt =
            detail::scalar_left_outer(pairs[0].lambda, pairs[0].v) +
            detail::scalar_left_outer(pairs[1].lambda, pairs[1].v);
        REQUIRE(frobenius_norm(h.to_matrix() - rebuilt) <= 1e-9);
        REQUIRE(vector_norm(matvec(outer(pairs[0].v, pairs[0].v), pairs[1].v)) <=
                1e-9);
    }
}

TEST_CASE("real eigendecomposition with a = 0") {
    const auto pairs = real_eigen2({2.0, 5.0, Octonion()});
    REQUIRE(pairs[0].lambda[0] == 2.0);
    REQUIRE(pairs[1].lambda[0] == 5.0);
    REQUIRE(norm(pairs[0].v[0] - Octonion(1.0)) == 0.0);
}

TEST_CASE("matrix form of the eigenvalue problem") {
    // SpecEx family pair (v, w) and real pairs both satisfy the U-form.
    const EigenPair2 pv = right_pair_for_lambda(kExample, Octonion(1.0) + kl);
    const DecomposeReport dr = decompose_right(kExample, pv);
    const EigenPair2 pw{flip(pv.v), dr.lambda_w, Side::right, 0.0};
    const MatrixFormReport mf = matrix_form_check(kExample, pv, pw);
    REQUIRE(mf.unitary <= 1e-10);
    REQUIRE(mf.eigen_relation <= 1e-10);
    REQUIRE(mf.reconstruction <= 1e-10);
    REQUIRE(mf.associativity <= 1e-10);

    const auto real_pairs = real_eigen2({1.0, 3.0, i + jl});
    const MatrixFormReport mr =
        matrix_form_check({1.0, 3.0, i + jl}, real_pairs[0], real_pairs[1]);
    REQUIRE(mr.unitary <= 1e-10);
    REQUIRE(mr.eigen_relation <= 1e-10);
    REQUIRE(mr.reconstruction <= 1e-10);
    REQUIRE(mr.associativity <= 1e-10);
}

TEST_CASE("matrix form reports failures for non-orthogonal columns") {
    const EigenPair2 pv = right_pair_for_lambda(kExample, Octonion(1.0) + kl);
    const MatrixFormReport mf = matrix_form_check(kExample, pv, pv);
    REQUIRE(mf.unitary > 0.5);
}

TEST_CASE("sample_V is deterministic per seed") {
    const OctVector a = sample_V(std::uint64_t{9});
    const OctVector b = sample_V(std::uint64_t{9});
    REQUIRE(vector_norm(a - b) == 0.0);
    REQUIRE(in_V(a));
}
