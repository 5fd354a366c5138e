#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "octo/eigen2.hpp"
#include "octo/eigen3.hpp"
#include "octo/random.hpp"

using namespace octo;
using namespace octo::units;

namespace {
const Hermitian2Params kExample2{1.0, 1.0, -i};

EigenPair2 spec_pair() {
    return right_pair_for_lambda(kExample2, Octonion(1.0) + kl);
}
}  // namespace

TEST_CASE("cyclic relabeling preserves the matrix up to permutation") {
    const Hermitian3Params h{1.0, 2.0, 3.0, i, j, kl};
    const Hermitian3Params h2 = cycle(h);
    REQUIRE(h2.p == h.m);
    REQUIRE(h2.m == h.n);
    REQUIRE(h2.n == h.p);
    REQUIRE(norm(h2.a - h.c) == 0.0);
    REQUIRE(norm(h2.b - h.a) == 0.0);
    REQUIRE(norm(h2.c - h.b) == 0.0);
    // Three cycles are the identity.
    const Hermitian3Params h3 = cycle(cycle(h2));
    REQUIRE(norm(h3.a - h.a) == 0.0);
    REQUIRE(h3.p == h.p);

    // A v = v lambda is invariant under the simultaneous relabeling.
    Rng rng(83);
    const OctVector v = random_vector(rng, 3);
    const Octonion lambda = random_octonion(rng);
    const OctVector lhs = matvec(h.to_matrix(), v) - vec_scale_right(v, lambda);
    const OctVector rhs =
        matvec(cycle(h).to_matrix(), cycle(v)) - vec_scale_right(cycle(v), lambda);
    REQUIRE(vector_norm(cycle(lhs) - rhs) <= 1e-12);
}

TEST_CASE("APP identity holds for any vector and scalar") {
    Rng rng(89);
    for (int s = 0; s < 500; ++s) {
        const OctVector v = random_vector(rng, 3);
        const Octonion lambda = random_octonion(rng);
        // ((v lambda) v+) v = (v lambda) (v+ v), i.e. [v+, v, lambda] = 0.
        const OctVector lhs = matvec(outer(vec_scale_right(v, lambda), v), v);
        const OctVector rhs = vec_scale_right(vec_scale_right(v, lambda), inner(v, v));
        REQUIRE(vector_norm(lhs - rhs) <= 1e-12);
        REQUIRE(norm(inner(v, vec_scale_right(v, lambda)) - inner(v, v) * lambda) <=
                1e-12);
    }
}

TEST_CASE("characteristic equation on real symmetric fixtures") {
    const Hermitian3Params h{2.0, -1.0, 0.5, Octonion(0.3), Octonion(-0.7),
                             Octonion(0.2)};
    // Real symmetric matrices have real eigenpairs; find one by power
    // iteration and confirm the residual oracle accepts it.
    OctVector v{Octonion(1.0), Octonion(0.2), Octonion(-0.4)};
    const OctMatrix a = h.to_matrix();
    for (int it = 0; it < 2000; ++it) {
        v = matvec(a, v);
        v = v / vector_norm(v);
    }
    const Octonion lambda = inner(v, matvec(a, v));
    REQUIRE(norm(im(lambda)) <= 1e-8);
    REQUIRE(vector_norm(matvec(a, v) - vec_scale_right(v, lambda)) <= 1e-6);
    REQUIRE(norm(char3_residual_auto(h, v, lambda).residual) <= 1e-5);
    REQUIRE(norm(im_lambda(h, v)) <= 1e-12);
}

TEST_CASE("characteristic equation on embedded 2x2 pairs, all blocks") {
    const EigenPair2 p2 = spec_pair();
    for (Block block : {Block::b12, Block::b23, Block::b13}) {
        const Hermitian3Params h3 = embed2(kExample2, 5.0, block);
        REQUIRE(is_hermitian(h3.to_matrix()));
        const OctVector v3 = lift2(p2.v, block);
        // Still an eigenpair after embedding.
        REQUIRE(vector_norm(matvec(h3.to_matrix(), v3) -
                            vec_scale_right(v3, p2.lambda)) <= 1e-12);
        REQUIRE(norm(char3_residual_auto(h3, v3, p2.lambda).residual) <= 1e-10);
        REQUIRE(norm(rayleigh3(h3, v3) - p2.lambda) <= 1e-9);
        const ReLambda rl = re_lambda(h3, v3);
        REQUIRE(std::abs(rl.value - re(p2.lambda)) <= 1e-9);
        REQUIRE(rl.max_deviation <= 1e-9);
        REQUIRE(norm(im_lambda(h3, v3) - im(p2.lambda)) <= 1e-9);
    }
}

TEST_CASE("characteristic equation residual is nonzero off eigenpairs") {
    const Hermitian3Params h3 = embed2(kExample2, 5.0, Block::b12);
    OctVector v{i, j, l};
    v = v / std::sqrt(3.0);
    REQUIRE(norm(char3_residual_auto(h3, v, Octonion(1.0) + kl).residual) > 1e-3);
}

TEST_CASE("pivot and zero-component handling") {
    const Hermitian3Params h{1.0, 1.0, 1.0, i, j, k};
    REQUIRE_THROWS_AS(char3_residual(h, OctVector{i, j, Octonion()}, i, 1e-9),
                      ZeroComponent);
    REQUIRE_THROWS_AS(
        char3_residual_auto(h, OctVector{Octonion(), Octonion(), Octonion()}, i),
        ZeroComponent);
    // The auto variant survives a zero z by cycling.
    REQUIRE_NOTHROW(char3_residual_auto(h, OctVector{i, j, Octonion()}, i));
    REQUIRE_THROWS_AS(rayleigh3(h, OctVector{i, j, k}), NotNormalized);
    REQUIRE_THROWS_AS(re_lambda(h, OctVector{Octonion(), Octonion(), Octonion()}),
                      ZeroComponent);
}

TEST_CASE("search recovers the spectrum of a real diagonal matrix") {
    const Hermitian3Params diag{1.0, 2.0, 3.0, Octonion(), Octonion(), Octonion()};
    SearchConfig cfg;
    cfg.restarts = 60;
    cfg.seed = 5;
    const SearchResult res = eigensearch(diag, cfg);
    REQUIRE(res.converged_restarts > 0);
    for (double want : {1.0, 2.0, 3.0}) {
        double best = 1.0;
        for (const EigenPair3& pr : res.pairs)
            best = std::min(best, norm(pr.lambda - Octonion(want)));
        REQUIRE(best <= 1e-9);
    }
}

TEST_CASE("search finds certified non-real pairs on the embedded example") {
    const Hermitian3Params h3 = embed2(kExample2, 5.0, Block::b12);
    SearchConfig cfg;
    cfg.restarts = 24;
    cfg.seed = 6;
    cfg.constrain_imaginary = true;
    const SearchResult res = eigensearch(h3, cfg);
    REQUIRE_FALSE(res.pairs.empty());
    for (const EigenPair3& pr : res.pairs) {
        REQUIRE(pr.residual <= 1e-9);
        REQUIRE(norm(im(pr.lambda)) >= 0.3 - 1e-9);
        REQUIRE(norm(char3_residual_auto(h3, pr.v, pr.lambda).residual) <= 1e-8);
        REQUIRE(norm(rayleigh3(h3, pr.v, 1e-6) - pr.lambda) <= 1e-8);
        // The family structure: |lambda - p| = q and lambda orthogonal to a.
        REQUIRE(std::abs(norm(pr.lambda - Octonion(1.0)) - 1.0) <= 1e-7);
        REQUIRE(std::abs(dot(im(pr.lambda), i)) <= 1e-7);
        // The block structure forces the third component to vanish.
        REQUIRE(norm(pr.v[2]) <= 1e-7);
    }
}

TEST_CASE("unconstrained search on a generic Hermitian matrix finds real pairs") {
    Rng rng(97);
    const Hermitian3Params h = random_hermitian3(rng);
    SearchConfig cfg;
    cfg.restarts = 24;
    cfg.seed = 8;
    const SearchResult res = eigensearch(h, cfg);
    REQUIRE_FALSE(res.pairs.empty());
    std::vector<double> real_values;
    for (const EigenPair3& pr : res.pairs) {
        REQUIRE(pr.residual <= 1e-9);
        REQUIRE(norm(char3_residual_auto(h, pr.v, pr.lambda).residual) <= 1e-8);
        if (norm(im(pr.lambda)) > 1e-8) continue;
        bool known = false;
        for (double rv : real_values)
            if (std::abs(rv - re(pr.lambda)) <= 1e-6) known = true;
        if (!known) real_values.push_back(re(pr.lambda));
    }
    // At most 6 distinct real eigenvalues; the found-count is only reported.
    REQUIRE(real_values.size() <= 6);
    INFO("distinct real eigenvalues found: " << real_values.size()
                                             << " of pairs: " << res.pairs.size());
}

TEST_CASE("search is deterministic per seed") {
    const Hermitian3Params diag{1.0, 2.0, 3.0, Octonion(), Octonion(), Octonion()};
    SearchConfig cfg;
    cfg.restarts = 8;
    cfg.seed = 11;
    const SearchResult a = eigensearch(diag, cfg);
    const SearchResult b = eigensearch(diag, cfg);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t t = 0; t < a.pairs.size(); ++t)
        REQUIRE(norm(a.pairs[t].lambda - b.pairs[t].lambda) == 0.0);
}

TEST_CASE("search config validation") {
    const Hermitian3Params diag{1.0, 2.0, 3.0, Octonion(), Octonion(), Octonion()};
    SearchConfig cfg;
    cfg.restarts = 0;
    REQUIRE_THROWS_AS(eigensearch(diag, cfg), std::invalid_argument);
    cfg.restarts = 1;
    cfg.tol = 0.0;
    REQUIRE_THROWS_AS(eigensearch(diag, cfg), std::invalid_argument);
}

TEST_CASE("analytic gradient matches central finite differences") {
    Rng rng(101);
    const double step = 1e-6;
    for (int point = 0; point < 20; ++point) {
        const Hermitian3Params h = random_hermitian3(rng);
        const OctVector v = random_vector(rng, 3);
        const Octonion lambda = random_octonion(rng);
        const auto grad = eigensearch_gradient(h, v, lambda);
        REQUIRE(grad.size() == 32);
        double gnorm = 0.0;
        for (double g : grad) gnorm += g * g;
        gnorm = std::sqrt(gnorm);
        for (int idx = 0; idx < 32; ++idx) {
            auto eval = [&](double delta) {
                OctVector vv = v;
                Octonion ll = lambda;
                if (idx < 24)
                    vv[idx / 8][idx % 8] += delta;
                else
                    ll[idx - 24] += delta;
                return eigensearch_objective(h, vv, ll);
            };
            const double fd = (eval(step) - eval(-step)) / (2.0 * step);
            REQUIRE(std::abs(fd - grad[idx]) <= 1e-4 * gnorm);
        }
    }
}

TEST_CASE("necessity falsification on matrices away from the admissible family") {
    Rng rng(103);
    std::uniform_real_distribution<double> offset(0.5, 1.5);
    for (int s = 0; s < 4; ++s) {
        Hermitian2Params h = random_hermitian2(rng);
        if (s % 2 == 0)
            h.m = h.p + offset(rng);
        else
            h.a[0] = offset(rng);
        SearchConfig cfg;
        cfg.restarts = 20;
        cfg.tol = 1e-7;
        cfg.seed = 200 + static_cast<std::uint64_t>(s);
        cfg.constrain_imaginary = true;
        const Hermitian3Params h3 = embed2(h, h.p + 10.0, Block::b12);
        const SearchResult res = eigensearch(h3, cfg);
        REQUIRE(res.pairs.empty());
        REQUIRE(res.best_residual >= 1e-6);
    }
}
