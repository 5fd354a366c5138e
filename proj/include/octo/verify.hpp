#pragma once
/**
 * @file verify.hpp
 * @brief Seeded randomized verification suites and their reports.
 *
 * Each suite quantifies a family of identities over reproducible random
 * samples and records the max residual per check.  The CLI `verify`
 * subcommand and the test suites share these runners.
 */

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "octo/eigen2.hpp"
#include "octo/eigen3.hpp"
#include "octo/identities.hpp"
#include "octo/matrix.hpp"
#include "octo/octonion.hpp"
#include "octo/random.hpp"
#include "octo/spin.hpp"

namespace octo {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    std::string suite;
    long samples = 0;
    std::uint64_t seed = 0;
    double max_residual = 0.0;
    std::vector<CheckResult> per_check;
    bool pass = true;

    void add(const std::string& name, double residual, double tolerance) {
        const bool ok = residual <= tolerance;
        per_check.push_back({name, residual, tolerance, ok});
        max_residual = std::max(max_residual, residual);
        pass = pass && ok;
    }
};

namespace verify_detail {

/// All parenthesizations of a word, for the Artin associativity desk-check.
inline std::vector<Octonion> all_parenthesizations(const std::vector<Octonion>& word) {
    if (word.size() == 1) return {word[0]};
    std::vector<Octonion> out;
    for (std::size_t split = 1; split < word.size(); ++split) {
        const std::vector<Octonion> left(word.begin(), word.begin() + split);
        const std::vector<Octonion> right(word.begin() + split, word.end());
        for (const Octonion& lv : all_parenthesizations(left))
            for (const Octonion& rv : all_parenthesizations(right))
                out.push_back(lv * rv);
    }
    return out;
}

inline Octonion admissible_lambda(Rng& rng, const AMembership& am) {
    // Random non-real eigenvalue satisfying |lambda - p| = q, lambda . a = 0.
    for (;;) {
        Octonion u = im(random_octonion(rng));
        u -= am.r_hat * dot(am.r_hat, u);
        const double n = norm(u);
        if (n > 1e-3) return Octonion(am.p) + (u / n) * am.q;
    }
}

/// (x, y) in V restricted to the quaternionic subalgebra containing r_hat.
inline OctVector quaternionic_V(Rng& rng, const Octonion& r_hat) {
    for (;;) {
        Octonion u = im(random_octonion(rng));
        u -= r_hat * dot(r_hat, u);
        const double n = norm(u);
        if (n < 1e-3) continue;
        u = u / n;
        const std::array<Octonion, 4> frame = {Octonion(1.0), r_hat, u, r_hat * u};
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Octonion x, y;
        for (const Octonion& f : frame) {
            x += f * dist(rng);
            y += f * dist(rng);
        }
        const double nx = norm(x);
        if (nx < 1e-3) continue;
        x = x / nx;
        y -= x * dot(x, y);
        const double ny = norm(y);
        if (ny < 1e-3) continue;
        y = y / ny;
        return OctVector{x, y};
    }
}

}  // namespace verify_detail

/// Identities of the scalar algebra: conjugation, norm composition,
/// alternativity, the inner-product identities, and the associator laws.
inline VerificationReport run_core_suite(long samples, std::uint64_t seed,
                                         const Tolerance& tol = {}) {
    VerificationReport rep;
    rep.suite = "core";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    double antiauto = 0, normcomp = 0, alt1 = 0, alt2 = 0, dotid = 0, dotid2 = 0;
    double assoc_id = 0, antisym = 0, realpart = 0, conjflip = 0, inv_res = 0;
    for (long s = 0; s < samples; ++s) {
        const Octonion a = random_octonion(rng);
        const Octonion b = random_octonion(rng);
        const Octonion c = random_octonion(rng);
        const Octonion d = random_octonion(rng);
        const Octonion x = random_octonion(rng);

        antiauto = std::max(antiauto, norm(conj(a * b) - conj(b) * conj(a)));
        const double na = norm(a), nb = norm(b);
        normcomp = std::max(normcomp,
                            std::abs(norm(a * b) - na * nb) / (na * nb + 1e-300));
        alt1 = std::max(alt1, norm(associator(b, a, a)));
        alt2 = std::max(alt2, norm(associator(b, a, conj(a))));
        dotid = std::max(dotid, std::abs(dot(a, x * b) - dot(b, conj(x) * a)));
        dotid2 = std::max(dotid2, std::abs(dot(a * x, b * x) - norm_sq(x) * dot(a, b)));
        assoc_id = std::max(
            assoc_id, norm(associator(a, b, c) * d + a * associator(b, c, d) -
                           associator(a * b, c, d) + associator(a, b * c, d) -
                           associator(a, b, c * d)));
        antisym = std::max(antisym, norm(associator(a, b, c) + associator(b, a, c)));
        realpart = std::max(realpart, std::abs(re(associator(a, b, c))));
        conjflip = std::max(conjflip,
                            norm(associator(conj(a), b, c) + associator(a, b, c)));
        if (norm(a) > 1e-3)
            inv_res = std::max(inv_res, norm(a * inverse(a) - Octonion(1.0)));
    }
    rep.add("conj_antiautomorphism", antiauto, tol.eps_identity);
    rep.add("norm_composition_rel", normcomp, tol.eps_identity);
    rep.add("alternativity", alt1, tol.eps_identity);
    rep.add("alternativity_conj", alt2, tol.eps_identity);
    rep.add("dot_identity", dotid, tol.eps_identity);
    rep.add("dot_identity_ii", dotid2, tol.eps_identity);
    rep.add("associator_identity", assoc_id, tol.eps_identity);
    rep.add("associator_antisymmetry", antisym, tol.eps_identity);
    rep.add("associator_real_part", realpart, tol.eps_identity);
    rep.add("associator_conj_flip", conjflip, tol.eps_identity);
    rep.add("inverse_identity", inv_res, tol.eps_identity);

    // Artin desk-check: every parenthesization of words of length <= 4 in
    // {a, b} agrees.
    double artin = 0;
    const long artin_samples = std::max<long>(1, samples / 100);
    for (long s = 0; s < artin_samples; ++s) {
        const Octonion a = random_octonion(rng);
        const Octonion b = random_octonion(rng);
        for (int len = 2; len <= 4; ++len) {
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<Octonion> word;
                for (int pos = 0; pos < len; ++pos)
                    word.push_back((mask >> pos) & 1 ? b : a);
                const auto values = verify_detail::all_parenthesizations(word);
                for (std::size_t t = 1; t < values.size(); ++t)
                    artin = std::max(artin, norm(values[t] - values[0]));
            }
        }
    }
    rep.add("artin_parenthesizations", artin, 1e-10);
    return rep;
}

/// Constructor soundness and the constraint families of the 2x2 theory.
inline VerificationReport run_eigen2_suite(long samples, std::uint64_t seed,
                                           const Tolerance& tol = {}) {
    VerificationReport rep;
    rep.suite = "eigen2";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    double left_res = 0, left_pq = 0, left_ortho = 0, closure = 0;
    double right_res = 0, right_constraints = 0, charii = 0, charii_cross = 0;
    double purity = 0, surprise = 0, surprise_ii = 0, new_ortho = 0;
    double left_decomp = 0, decomp_real = 0, ortho_real = 0, app = 0;
    double matrix_form = 0, flip_inner = 0, dieudonne = 0;

    for (long s = 0; s < samples; ++s) {
        const Hermitian2Params h = random_in_A(rng);
        const AMembership am = classify_in_A(h, tol.eps_solve);

        // Left eigenpairs from random members of V.
        const OctVector v = sample_V(rng);
        const EigenPair2 lp = left_pair_from_V(h, v, tol);
        left_res = std::max(left_res, verify_pair(h, lp));
        left_pq = std::max(left_pq,
                           std::abs(norm(lp.lambda - Octonion(am.p)) - am.q));
        left_ortho = std::max(left_ortho, std::abs(dot(lp.lambda, am.r_hat)));
        flip_inner = std::max(flip_inner, norm(inner(v, flip(v))));

        // Left multiplication preserves V.
        const Octonion o = random_unit(rng);
        const OctVector ov{o * v[0], o * v[1]};
        const EigenPair2 lp2 = left_pair_from_V(h, ov, tol);
        closure = std::max(closure, verify_pair(h, lp2));

        // Right eigenpairs for random admissible eigenvalues.
        const Octonion lambda = verify_detail::admissible_lambda(rng, am);
        const EigenPair2 rp = right_pair_for_lambda(h, lambda, tol);
        right_res = std::max(right_res, verify_pair(h, rp));
        const Char2Constraints cc = char2_constraints(h, rp.v, rp.lambda);
        right_constraints = std::max(right_constraints, cc.max_residual);
        const Char2Residual cr = char2_residual(h, rp.v, rp.lambda);
        charii = std::max(charii, norm(cr.primary));
        charii_cross = std::max(charii_cross, cr.cross_check);
        purity = std::max({purity, std::abs(re(rp.v[0])), std::abs(re(rp.v[1])),
                           std::abs(dot(h.a * rp.lambda, rp.v[0]))});
        dieudonne = std::max(dieudonne, dieudonne_residual(h, rp.lambda, tol));

        const DecomposeReport dr = decompose_right(h, rp, tol);
        surprise = std::max(surprise, dr.surprise);
        surprise_ii = std::max(surprise_ii, dr.surprise_ii);
        new_ortho = std::max(new_ortho, dr.new_ortho);

        // Quaternionic left decomposition on obstruction-free eigenvectors.
        const OctVector qv = verify_detail::quaternionic_V(rng, am.r_hat);
        const EigenPair2 qlp = left_pair_from_V(h, qv, tol);
        const LeftDecomposeReport lr = decompose_left_quaternionic(h, qlp, tol);
        left_decomp = std::max(left_decomp, lr.reconstruction);

        // Real eigentheory on a generic Hermitian matrix.
        const Hermitian2Params hr = random_hermitian2(rng);
        const auto pairs = real_eigen2(hr, tol);
        const OctMatrix hm = hr.to_matrix();
        decomp_real = std::max(
            decomp_real,
            frobenius_norm(hm -
                           detail::scalar_left_outer(pairs[0].lambda, pairs[0].v) -
                           detail::scalar_left_outer(pairs[1].lambda, pairs[1].v)));
        ortho_real = std::max(
            ortho_real, vector_norm(matvec(outer(pairs[0].v, pairs[0].v), pairs[1].v)));
        const MatrixFormReport mf = matrix_form_check(hr, pairs[0], pairs[1]);
        matrix_form = std::max({matrix_form, mf.unitary, mf.eigen_relation,
                                mf.reconstruction, mf.associativity});

        // App identity ((v lambda) v+) v = (v lambda) (v+ v) for any v, lambda.
        const OctVector rv = random_vector(rng, 2);
        const Octonion rl = random_octonion(rng);
        const OctVector lhs = matvec(detail::right_scaled_outer(rv, rl), rv);
        const OctVector rhs = vec_scale_right(vec_scale_right(rv, rl), inner(rv, rv));
        app = std::max(app, vector_norm(lhs - rhs));
    }

    rep.add("left_pair_residual", left_res, tol.eps_solve);
    rep.add("left_lambda_p_q", left_pq, 1e-10);
    rep.add("left_lambda_dot_r", left_ortho, 1e-10);
    rep.add("left_mult_closure", closure, tol.eps_solve);
    rep.add("flip_orthogonality", flip_inner, tol.eps_identity);
    rep.add("right_pair_residual", right_res, tol.eps_solve);
    rep.add("right_constraints", right_constraints, 1e-10);
    rep.add("char2_residual", charii, 1e-10);
    rep.add("char2_cross_check", charii_cross, 1e-10);
    rep.add("right_pair_purity", purity, 1e-10);
    rep.add("dieudonne_on_admissible", dieudonne, tol.eps_solve);
    rep.add("decompose_surprise", surprise, tol.eps_solve);
    rep.add("decompose_surprise_ii", surprise_ii, tol.eps_solve);
    rep.add("new_ortho", new_ortho, tol.eps_solve);
    rep.add("decompose_left_quaternionic", left_decomp, tol.eps_solve);
    rep.add("real_decomposition", decomp_real, tol.eps_solve);
    rep.add("real_orthogonality", ortho_real, tol.eps_solve);
    rep.add("matrix_form_check", matrix_form, 1e-10);
    rep.add("app_identity", app, tol.eps_identity);
    return rep;
}

/**
 * Falsification of the necessity direction: matrices far from the
 * admissible family must admit no non-real eigenpairs.  The search is
 * constrained to |Im lambda| >= 0.3; any residual below 1e-6 is a
 * counterexample.
 */
inline VerificationReport run_necessity_suite(long matrices, std::uint64_t seed,
                                              int restarts = 20) {
    VerificationReport rep;
    rep.suite = "necessity";
    rep.samples = matrices;
    rep.seed = seed;
    Rng rng(seed);
    std::uniform_real_distribution<double> offset(0.5, 1.5);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    double min_residual = std::numeric_limits<double>::infinity();
    for (long s = 0; s < matrices; ++s) {
        Hermitian2Params h = random_hermitian2(rng);
        if (coin(rng) < 0.5) {
            h.m = h.p + offset(rng) * (coin(rng) < 0.5 ? 1.0 : -1.0);
        } else {
            h.a[0] = offset(rng) * (coin(rng) < 0.5 ? 1.0 : -1.0);
        }

        SearchConfig cfg;
        cfg.restarts = restarts;
        cfg.tol = 1e-7;
        cfg.seed = seed + 17 * static_cast<std::uint64_t>(s) + 1;
        cfg.constrain_imaginary = true;
        const Hermitian3Params h3 = embed2(h, h.p + 10.0, Block::b12);
        const SearchResult res = eigensearch(h3, cfg);
        min_residual = std::min(min_residual, res.best_residual);
    }
    // Report inverted so the check reads "residual stayed above the bar".
    const double margin = min_residual >= 1e-6 ? 0.0 : 1e-6 - min_residual;
    rep.add("no_nonreal_pair_off_A", margin, 0.0);
    return rep;
}

/// Spin operator identities: simultaneous eigenstates, the commutator
/// relation on Psi+, the phase family, and statistical self-adjointness.
inline VerificationReport run_spin_suite(long samples, std::uint64_t seed,
                                         const Tolerance& tol = {}) {
    using namespace spin;
    using namespace units;
    VerificationReport rep;
    rep.suite = "spin";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    const OctVector plus = psi_plus();
    const OctVector minus = psi_minus();

    double eigenstate = 0;
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        for (const OctVector& psi : {plus, minus}) {
            const Octonion lambda = eigenvalue_on(axis, psi, tol.eps_identity);
            eigenstate = std::max(
                eigenstate, vector_norm(apply_L(axis, psi) - vec_scale_right(psi, lambda)));
        }
    }
    rep.add("simultaneous_eigenstates", eigenstate, tol.eps_identity);

    // Known eigenvalues of Psi+.
    double named = 0;
    named = std::max(named, vector_norm(apply_L(Axis::x, plus) -
                                        vec_scale_right(plus, k * -0.5)));
    named = std::max(named, vector_norm(apply_L(Axis::y, plus) -
                                        vec_scale_right(plus, kl * -0.5)));
    named = std::max(named, vector_norm(apply_L(Axis::z, plus) - plus * 0.5));
    rep.add("psi_plus_eigenvalues", named, tol.eps_identity);

    // Commutator relation, operator chain evaluated innermost-first.
    const OctVector lylx = apply_L(Axis::y, apply_L(Axis::x, plus));
    const OctVector lxly = apply_L(Axis::x, apply_L(Axis::y, plus));
    double comm = 0;
    comm = std::max(comm, vector_norm(lxly * 4.0 - vec_scale_right(plus, l)));
    comm = std::max(comm, vector_norm(lylx * 4.0 + vec_scale_right(plus, l)));
    comm = std::max(comm,
                    vector_norm(lxly * 4.0 - lylx * 4.0 - vec_scale_right(plus, l) * 2.0));
    rep.add("commutator_relation", comm, tol.eps_identity);

    // Phase family over a 64-point grid.
    double phase = 0;
    for (int g = 0; g < 64; ++g) {
        const double theta = 2.0 * M_PI * g / 64.0;
        const OctVector psi = phase_state(theta);
        const Octonion e2 = unit_complex(l, 2.0 * theta);
        phase = std::max(phase, vector_norm(apply_L(Axis::z, psi) - psi * 0.5));
        phase = std::max(phase, vector_norm(apply_L(Axis::x, psi) -
                                            vec_scale_right(psi, (k * e2) * -0.5)));
        phase = std::max(phase, vector_norm(apply_L(Axis::y, psi) -
                                            vec_scale_right(psi, ((k * l) * e2) * -0.5)));
    }
    rep.add("phase_family", phase, tol.eps_identity);

    rep.add("psi_orthogonality", norm(spin_inner(plus, minus)), tol.eps_identity);
    rep.add("psi_plus_norm", norm(spin_inner(plus, plus) - Octonion(2.0)),
            tol.eps_identity);

    double proj = 0, adj = 0;
    for (long s = 0; s < samples; ++s) {
        const Octonion q = random_octonion(rng);
        const Octonion pq = pi_project(q);
        proj = std::max(proj, norm(pi_project(pq) - pq));
        // Image lies in span{1, l} and is closed under multiplication.
        for (int idx = 1; idx < 7; ++idx) proj = std::max(proj, std::abs(pq[idx]));
        const Octonion q2 = pi_project(random_octonion(rng));
        const Octonion prod = pq * q2;
        for (int idx = 1; idx < 7; ++idx) proj = std::max(proj, std::abs(prod[idx]));

        const OctVector psi = random_vector(rng, 2);
        const OctVector chi = random_vector(rng, 2);
        for (Axis axis : {Axis::x, Axis::y, Axis::z})
            adj = std::max(adj, norm(spin_inner(apply_L(axis, psi), chi) -
                                     spin_inner(psi, apply_L(axis, chi))));
    }
    rep.add("projection_idempotent_closed", proj, tol.eps_identity);
    rep.add("self_adjointness", adj, 1e-10);
    return rep;
}

/// 3x3 apparatus: the APP identity, the characteristic-equation oracle on
/// real and embedded fixtures, the Rayleigh cross-checks, the searches, and
/// the analytic-gradient check.
inline VerificationReport run_eigen3_suite(long samples, std::uint64_t seed,
                                           const Tolerance& tol = {}) {
    VerificationReport rep;
    rep.suite = "eigen3";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    double app = 0;
    for (long s = 0; s < samples; ++s) {
        const OctVector v = random_vector(rng, 3);
        const Octonion lambda = random_octonion(rng);
        app = std::max(app, norm((inner(v, v) * lambda) - inner(v, vec_scale_right(v, lambda))));
    }
    rep.add("app_identity", app, tol.eps_identity);

    // Real symmetric fixtures: all associator terms vanish on real pairs.
    double char3_real = 0, assoc_terms = 0;
    const long real_samples = std::max<long>(1, samples / 1000);
    for (long s = 0; s < real_samples; ++s) {
        Eigen::Matrix3d m;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = u(rng);
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
        const Hermitian3Params h{m(0, 0), m(1, 1), m(2, 2), Octonion(m(0, 1)),
                                 Octonion(m(2, 0)), Octonion(m(1, 2))};
        for (int e = 0; e < 3; ++e) {
            OctVector v(3);
            for (int i = 0; i < 3; ++i) v[i] = Octonion(es.eigenvectors()(i, e));
            const Octonion lambda(es.eigenvalues()(e));
            const Char3Result c3 = char3_residual_auto(h, v, lambda);
            char3_real = std::max(char3_real, norm(c3.residual));
            assoc_terms = std::max(
                {assoc_terms, norm(associator(h.a, v[1], lambda)),
                 norm(associator(h.b, v[0], lambda)),
                 norm(associator(conj(h.c), v[1], lambda)),
                 norm(associator(h.b, h.a * v[1], lambda)),
                 norm(associator(conj(h.c), conj(h.a) * v[0], lambda)),
                 norm(im_lambda(h, v))});
        }
    }
    rep.add("char3_real_pairs", char3_real, 1e-10);
    rep.add("char3_real_associators_vanish", assoc_terms, 1e-10);

    // Embedded 2x2 fixture in all three block placements.
    const Hermitian2Params spec_ex{1.0, 1.0, -units::i};
    double embed_char3 = 0, embed_ray = 0, embed_re_im = 0;
    for (Block block : {Block::b12, Block::b23, Block::b13}) {
        const Hermitian3Params h3 = embed2(spec_ex, 5.0, block);
        const EigenPair2 rp =
            right_pair_for_lambda(spec_ex, Octonion(1.0) + units::kl, tol);
        const OctVector v3 = lift2(rp.v, block);
        const Octonion lambda = rp.lambda;
        embed_char3 = std::max(embed_char3,
                               norm(char3_residual_auto(h3, v3, lambda).residual));
        const Octonion ray = rayleigh3(h3, v3, tol.eps_solve);
        embed_ray = std::max(embed_ray, norm(ray - lambda));
        const ReLambda rl = re_lambda(h3, v3);
        embed_re_im = std::max({embed_re_im, std::abs(rl.value - re(lambda)),
                                rl.max_deviation,
                                norm(im_lambda(h3, v3) - im(lambda))});
    }
    rep.add("embedded_char3", embed_char3, 1e-10);
    rep.add("embedded_rayleigh", embed_ray, 1e-9);
    rep.add("embedded_re_im_formulas", embed_re_im, 1e-9);

    // Search on a real diagonal recovers the diagonal entries.
    {
        SearchConfig cfg;
        cfg.restarts = 60;
        cfg.seed = seed + 101;
        const Hermitian3Params diag{1.0, 2.0, 3.0, Octonion(), Octonion(), Octonion()};
        const SearchResult res = eigensearch(diag, cfg);
        double err = 0.0;
        for (double want : {1.0, 2.0, 3.0}) {
            double best = 1.0;
            for (const EigenPair3& pr : res.pairs)
                best = std::min(best, norm(pr.lambda - Octonion(want)));
            err = std::max(err, best);
        }
        rep.add("search_diag123", err, 1e-9);
    }

    // Search on the embedded fixture; certify every returned pair.
    {
        SearchConfig cfg;
        cfg.restarts = 24;
        cfg.seed = seed + 202;
        cfg.tol = 1e-12;
        cfg.constrain_imaginary = true;
        const Hermitian3Params h3 = embed2(spec_ex, 5.0, Block::b12);
        const SearchResult res = eigensearch(h3, cfg);
        double found = res.pairs.empty() ? 1.0 : 0.0;
        double cert = 0.0, family = 0.0;
        for (const EigenPair3& pr : res.pairs) {
            cert = std::max({cert, pr.residual,
                             norm(char3_residual_auto(h3, pr.v, pr.lambda).residual),
                             norm(rayleigh3(h3, pr.v, 1e-6) - pr.lambda)});
            family = std::max({family,
                               std::abs(norm(pr.lambda - Octonion(1.0)) - 1.0),
                               std::abs(dot(im(pr.lambda), units::i)),
                               norm(pr.v[2])});
        }
        rep.add("search_embedded_found", found, 0.0);
        rep.add("search_embedded_certified", cert, 1e-8);
        rep.add("search_embedded_family", family, 1e-7);
    }

    // Analytic gradient vs central finite differences.
    {
        double grad_err = 0;
        const double step = 1e-6;
        for (int point = 0; point < 100; ++point) {
            const Hermitian3Params h = random_hermitian3(rng);
            OctVector v = random_vector(rng, 3);
            Octonion lambda = random_octonion(rng);
            const auto grad = eigensearch_gradient(h, v, lambda);
            double gnorm = 0;
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
                grad_err = std::max(grad_err, std::abs(fd - grad[idx]) / gnorm);
            }
        }
        rep.add("gradient_check", grad_err, 1e-4);
    }
    return rep;
}

/// Appendix identity family at vector lengths 2 and 3.
inline VerificationReport run_appendix_suite(long samples, std::uint64_t seed,
                                             const Tolerance& tol = {}) {
    VerificationReport rep;
    rep.suite = "appendix";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);

    double master = 0, cube = 0, lemma3 = 0, special = 0, six = 0, six_agree = 0;
    double scalar_wvv = 0, scalar_herm = 0, trace_id = 0;
    double psis = 0, psis_polarized = 0, psis_equiv = 0;

    for (long s = 0; s < samples; ++s) {
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            const OctVector u = random_vector(rng, n);
            const OctVector v = random_vector(rng, n);
            const OctVector w = random_vector(rng, n);
            master = std::max(master, vector_norm(vector_associator(w, v, v)));
            cube = std::max(cube, vector_norm(vector_associator(v, v, v)));
            lemma3 = std::max(lemma3, vector_norm(vector_associator(u, v, w) +
                                                  vector_associator(u, w, v)));
            special = std::max(special, vector_norm(vector_associator(v, v, w) +
                                                    vector_associator(v, w, v)));
            six = std::max(six, vector_norm(six_term_sum(u, v, w)));

            const Octonion lambda = random_octonion(rng);
            scalar_wvv = std::max(scalar_wvv, norm(scalar_vector_associator(lambda, v, v)));
            scalar_herm = std::max(
                scalar_herm, norm(inner(v, vec_scale_right(v, conj(lambda))) -
                                  inner(v, v) * conj(lambda)));
            const Octonion tr = trace(outer(v, v));
            trace_id = std::max({trace_id, norm(tr - inner(v, v)), norm(im(tr))});
        }

        const OctVector u2 = random_vector(rng, 2);
        const OctVector v2 = random_vector(rng, 2);
        const OctVector w2 = random_vector(rng, 2);
        psis = std::max(psis, vector_norm(three_psis_residual(v2)));
        const OctVector pol = three_psis_polarized_residual(u2, v2, w2);
        psis_polarized = std::max(psis_polarized, vector_norm(pol));
        six_agree = std::max(six_agree, vector_norm(pol - six_term_sum(u2, v2, w2)));
        psis_equiv = std::max(psis_equiv,
                              vector_norm(three_psis_residual(v2) -
                                          vector_associator(v2, v2, v2)));
    }
    rep.add("master", master, tol.eps_identity);
    rep.add("cube", cube, tol.eps_identity);
    rep.add("lemma_polarized", lemma3, tol.eps_identity);
    rep.add("lemma_special_case", special, tol.eps_identity);
    rep.add("six_term_sum", six, tol.eps_identity);
    rep.add("six_vs_polarized_route", six_agree, tol.eps_identity);
    rep.add("scalar_associator_wvv", scalar_wvv, tol.eps_identity);
    rep.add("scalar_hermitian_conjugate", scalar_herm, tol.eps_identity);
    rep.add("trace_identity", trace_id, tol.eps_identity);
    rep.add("three_psis", psis, tol.eps_identity);
    rep.add("three_psis_polarized", psis_polarized, tol.eps_identity);
    rep.add("three_psis_equivalence", psis_equiv, tol.eps_identity);
    return rep;
}

inline std::vector<VerificationReport> run_all_suites(long samples, std::uint64_t seed,
                                                      const Tolerance& tol = {}) {
    std::vector<VerificationReport> out;
    out.push_back(run_core_suite(samples, seed, tol));
    out.push_back(run_eigen2_suite(std::max<long>(1, samples / 10), seed, tol));
    out.push_back(run_necessity_suite(std::max<long>(2, samples / 200), seed, 8));
    out.push_back(run_spin_suite(samples, seed, tol));
    out.push_back(run_eigen3_suite(samples, seed, tol));
    out.push_back(run_appendix_suite(std::max<long>(1, samples / 10), seed, tol));
    return out;
}

}  // namespace octo
