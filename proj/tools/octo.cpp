// Command-line front end: scalar arithmetic, eigenpair construction,
// decompositions, the spin table, the 3x3 search, and the verification
// suites.  Reports are line-delimited key=value records with a stable
// field order so runs with identical arguments diff clean.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octo/eigen2.hpp"
#include "octo/eigen3.hpp"
#include "octo/identities.hpp"
#include "octo/matrix.hpp"
#include "octo/octonion.hpp"
#include "octo/serialize.hpp"
#include "octo/spin.hpp"
#include "octo/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct ToleranceEnv {
    octo::Tolerance tol;
    bool from_env = false;
};

ToleranceEnv resolve_tolerance() {
    ToleranceEnv te;
    if (const char* raw = std::getenv("OCTO_TOL")) {
        char* end = nullptr;
        const double value = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !(value > 0.0))
            throw CLI::ValidationError("OCTO_TOL", "must be a positive number");
        te.tol.eps_solve = value;
        te.from_env = true;
    }
    return te;
}

void emit_tolerance(std::ostream& out, const ToleranceEnv& te) {
    out << "tolerance=" << te.tol.eps_solve << "\n";
    out << "tolerance_source=" << (te.from_env ? "env" : "default") << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw octo::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

octo::Hermitian2Params load_hermitian2(const std::string& path) {
    const octo::InputDocument doc = octo::parse_input(read_input(path));
    if (doc.kind != octo::DocumentKind::hermitian2)
        throw octo::ParseError("expected a hermitian2 document");
    return doc.hermitian2;
}

octo::Hermitian3Params load_hermitian3(const std::string& path) {
    const octo::InputDocument doc = octo::parse_input(read_input(path));
    if (doc.kind != octo::DocumentKind::hermitian3)
        throw octo::ParseError("expected a hermitian3 document");
    return doc.hermitian3;
}

void emit_vector(std::ostream& out, const char* name, const octo::OctVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        out << name << "[" << i << "]=" << octo::format_octonion(v[i]) << "\n";
}

/// Prints the membership diagnostic for a matrix outside the admissible
/// family: non-real eigenvalues require equal diagonal entries and a purely
/// imaginary off-diagonal entry.
void emit_not_in_A(std::ostream& out, const octo::Hermitian2Params& h,
                   const octo::AMembership& am) {
    out << "in_A=false\n";
    out << "defect=" << am.defect << "\n";
    out << "condition_p_eq_m=" << (h.p == h.m ? "met" : "violated")
        << " p=" << h.p << " m=" << h.m << "\n";
    out << "condition_re_a_zero=" << (octo::re(h.a) == 0.0 ? "met" : "violated")
        << " re_a=" << octo::re(h.a) << "\n";
    out << "diagnostic=non-real eigenvalues require p = m and Re(a) = 0\n";
}

void emit_report(std::ostream& out, const octo::VerificationReport& rep) {
    out << "suite=" << rep.suite << "\n";
    out << "samples=" << rep.samples << "\n";
    out << "seed=" << rep.seed << "\n";
    for (const octo::CheckResult& c : rep.per_check)
        out << "check=" << c.name << " residual=" << c.residual
            << " tolerance=" << c.tolerance << " pass=" << (c.pass ? "true" : "false")
            << "\n";
    out << "max_residual=" << rep.max_residual << "\n";
    out << "pass=" << (rep.pass ? "true" : "false") << "\n";
}

int cmd_mul(const std::vector<std::string>& terms) {
    octo::Octonion acc = octo::parse_octonion_expr(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i)
        acc = acc * octo::parse_octonion_expr(terms[i]);
    std::cout << "result=" << octo::format_octonion(acc) << "\n";
    return kExitPass;
}

int cmd_associator(const std::string& a, const std::string& b, const std::string& c) {
    const octo::Octonion r = octo::associator(octo::parse_octonion_expr(a),
                                              octo::parse_octonion_expr(b),
                                              octo::parse_octonion_expr(c));
    std::cout << "result=" << octo::format_octonion(r) << "\n";
    return kExitPass;
}

int cmd_eigen2(const std::string& input, const std::string& side,
               const std::string& lambda_expr, std::uint64_t seed, bool nonreal,
               const ToleranceEnv& te) {
    const octo::Hermitian2Params h = load_hermitian2(input);
    std::cout << "command=eigen2\n";
    emit_tolerance(std::cout, te);
    const octo::AMembership am = octo::classify_in_A(h, te.tol.eps_solve);
    if (!am.in_A) {
        emit_not_in_A(std::cout, h, am);
        if (nonreal || side == "left" || !lambda_expr.empty()) return kExitCheckFailure;
        return kExitPass;
    }
    std::cout << "in_A=true\n";
    std::cout << "p=" << am.p << " q=" << am.q
              << " r_hat=" << octo::format_octonion(am.r_hat) << "\n";

    octo::EigenPair2 pair;
    if (side == "left") {
        pair = octo::left_pair_from_V(h, octo::sample_V(seed), te.tol);
    } else {
        if (lambda_expr.empty())
            throw CLI::ValidationError("--lambda", "required for --side right");
        pair = octo::right_pair_for_lambda(
            h, octo::parse_octonion_expr(lambda_expr), te.tol);
    }
    std::cout << "side=" << side << "\n";
    emit_vector(std::cout, "v", pair.v);
    std::cout << "lambda=" << octo::format_octonion(pair.lambda) << "\n";
    std::cout << "residual=" << pair.residual << "\n";
    if (side == "right") {
        const octo::Char2Constraints cc =
            octo::char2_constraints(h, pair.v, pair.lambda);
        std::cout << "constraints_max_residual=" << cc.max_residual << "\n";
        const octo::Char2Residual cr = octo::char2_residual(h, pair.v, pair.lambda);
        std::cout << "char2_residual=" << octo::norm(cr.primary) << "\n";
        std::cout << "char2_cross_check=" << cr.cross_check << "\n";
    }
    const bool ok = pair.residual <= te.tol.eps_solve;
    std::cout << "pass=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_decompose(const std::string& input, const std::string& side,
                  const std::string& lambda_expr, std::uint64_t seed,
                  const ToleranceEnv& te) {
    const octo::Hermitian2Params h = load_hermitian2(input);
    std::cout << "command=decompose\n";
    emit_tolerance(std::cout, te);
    const octo::AMembership am = octo::classify_in_A(h, te.tol.eps_solve);
    if (!am.in_A) {
        emit_not_in_A(std::cout, h, am);
        return kExitCheckFailure;
    }

    double worst = 0.0;
    if (side == "left") {
        const octo::EigenPair2 pair =
            octo::left_pair_from_V(h, octo::sample_V(seed), te.tol);
        std::cout << "side=left\n";
        emit_vector(std::cout, "v", pair.v);
        std::cout << "lambda_v=" << octo::format_octonion(pair.lambda) << "\n";
        const octo::LeftDecomposeReport r =
            octo::decompose_left_quaternionic(h, pair, te.tol);
        std::cout << "lambda_w=" << octo::format_octonion(r.lambda_w) << "\n";
        std::cout << "reconstruction=" << r.reconstruction << "\n";
        worst = r.reconstruction;
    } else {
        if (lambda_expr.empty())
            throw CLI::ValidationError("--lambda", "required for --side right");
        const octo::EigenPair2 pair = octo::right_pair_for_lambda(
            h, octo::parse_octonion_expr(lambda_expr), te.tol);
        std::cout << "side=right\n";
        emit_vector(std::cout, "v", pair.v);
        std::cout << "lambda_v=" << octo::format_octonion(pair.lambda) << "\n";
        const octo::DecomposeReport r = octo::decompose_right(h, pair, te.tol);
        std::cout << "lambda_w=" << octo::format_octonion(r.lambda_w) << "\n";
        std::cout << "surprise=" << r.surprise << "\n";
        std::cout << "surprise_ii=" << r.surprise_ii << "\n";
        std::cout << "new_ortho=" << r.new_ortho << "\n";
        std::cout << "witness_norm=" << r.witness_norm << "\n";
        worst = std::max({r.surprise, r.surprise_ii, r.new_ortho});
    }
    const bool ok = worst <= te.tol.eps_solve;
    std::cout << "pass=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_real_eigen2(const std::string& input, const ToleranceEnv& te) {
    const octo::Hermitian2Params h = load_hermitian2(input);
    std::cout << "command=real-eigen2\n";
    emit_tolerance(std::cout, te);
    const auto pairs = octo::real_eigen2(h, te.tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::cout << "lambda[" << i << "]=" << octo::format_octonion(pairs[i].lambda)
                  << "\n";
        emit_vector(std::cout, ("v" + std::to_string(i)).c_str(), pairs[i].v);
        std::cout << "residual[" << i << "]=" << pairs[i].residual << "\n";
        worst = std::max(worst, pairs[i].residual);
    }
    const octo::MatrixFormReport mf = octo::matrix_form_check(h, pairs[0], pairs[1]);
    std::cout << "matrix_form_unitary=" << mf.unitary << "\n";
    std::cout << "matrix_form_eigen_relation=" << mf.eigen_relation << "\n";
    std::cout << "matrix_form_reconstruction=" << mf.reconstruction << "\n";
    std::cout << "matrix_form_associativity=" << mf.associativity << "\n";
    worst = std::max({worst, mf.unitary, mf.eigen_relation, mf.reconstruction,
                      mf.associativity});
    const bool ok = worst <= 1e-10;
    std::cout << "pass=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_spin(int grid, const ToleranceEnv& te) {
    using octo::spin::Axis;
    std::cout << "command=spin\n";
    emit_tolerance(std::cout, te);
    const char* axis_name[] = {"x", "y", "z"};
    double worst = 0.0;
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        for (int s = 0; s < 2; ++s) {
            const octo::OctVector psi =
                s == 0 ? octo::spin::psi_plus() : octo::spin::psi_minus();
            const octo::Octonion lambda = octo::spin::eigenvalue_on(axis, psi);
            const double res = octo::vector_norm(
                octo::spin::apply_L(axis, psi) - octo::vec_scale_right(psi, lambda));
            worst = std::max(worst, res);
            std::cout << "state=psi_" << (s == 0 ? "plus" : "minus")
                      << " axis=" << axis_name[static_cast<int>(axis)]
                      << " lambda=" << octo::format_octonion(lambda)
                      << " residual=" << res << "\n";
        }
    }
    for (int g = 0; g < grid; ++g) {
        const double theta = 2.0 * M_PI * g / grid;
        const octo::OctVector psi = octo::spin::phase_state(theta);
        for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
            const octo::Octonion lambda = octo::spin::eigenvalue_on(axis, psi);
            const double res = octo::vector_norm(
                octo::spin::apply_L(axis, psi) - octo::vec_scale_right(psi, lambda));
            worst = std::max(worst, res);
        }
    }
    std::cout << "phase_grid=" << grid << "\n";
    std::cout << "max_residual=" << worst << "\n";
    const bool ok = worst <= te.tol.eps_identity * 100.0;
    std::cout << "pass=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_eigen3(const std::string& input, const octo::SearchConfig& cfg,
               const ToleranceEnv& te) {
    const octo::Hermitian3Params h = load_hermitian3(input);
    std::cout << "command=eigen3\n";
    emit_tolerance(std::cout, te);
    std::cout << "restarts=" << cfg.restarts << " seed=" << cfg.seed
              << " search_tol=" << cfg.tol
              << " nonreal=" << (cfg.constrain_imaginary ? "true" : "false") << "\n";
    const octo::SearchResult res = octo::eigensearch(h, cfg);
    std::cout << "found=" << res.pairs.size() << "\n";
    std::cout << "converged_restarts=" << res.converged_restarts << "\n";
    std::cout << "note=non-real fixtures are embeddings or search products\n";
    for (std::size_t i = 0; i < res.pairs.size(); ++i) {
        const octo::EigenPair3& p = res.pairs[i];
        const octo::Char3Result c3 = octo::char3_residual_auto(h, p.v, p.lambda);
        const octo::Octonion ray = octo::rayleigh3(h, p.v, 1e-6);
        std::cout << "pair=" << i << " lambda=" << octo::format_octonion(p.lambda)
                  << " residual=" << p.residual
                  << " char3=" << octo::norm(c3.residual)
                  << " rayleigh_gap=" << octo::norm(ray - p.lambda) << "\n";
    }
    std::cout << "best_residual=" << res.best_residual << "\n";
    const bool ok = !res.pairs.empty();
    std::cout << "pass=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, long samples, std::uint64_t seed,
               const ToleranceEnv& te) {
    std::vector<octo::VerificationReport> reports;
    if (suite == "core") {
        reports.push_back(octo::run_core_suite(samples, seed, te.tol));
    } else if (suite == "eigen2") {
        reports.push_back(octo::run_eigen2_suite(samples, seed, te.tol));
        reports.push_back(
            octo::run_necessity_suite(std::max<long>(2, samples / 200), seed, 8));
    } else if (suite == "spin") {
        reports.push_back(octo::run_spin_suite(samples, seed, te.tol));
    } else if (suite == "eigen3") {
        reports.push_back(octo::run_eigen3_suite(samples, seed, te.tol));
    } else if (suite == "appendix") {
        reports.push_back(octo::run_appendix_suite(samples, seed, te.tol));
    } else {
        reports = octo::run_all_suites(samples, seed, te.tol);
    }

    std::cout << "command=verify\n";
    emit_tolerance(std::cout, te);
    bool all_pass = true;
    for (const octo::VerificationReport& rep : reports) {
        emit_report(std::cout, rep);
        all_pass = all_pass && rep.pass;
        if (!rep.pass)
            for (const octo::CheckResult& c : rep.per_check)
                if (!c.pass)
                    std::cout << "failure=" << rep.suite << "/" << c.name
                              << " residual=" << c.residual << "\n";
    }
    std::cout << "overall_pass=" << (all_pass ? "true" : "false") << "\n";
    return all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"octonion eigenvalue toolkit"};
    app.require_subcommand(1);
    std::cout.precision(17);

    std::vector<std::string> mul_terms;
    auto* mul = app.add_subcommand("mul", "multiply octonion expressions left to right");
    mul->add_option("terms", mul_terms, "expressions over {1,i,j,k,kl,jl,il,l}")
        ->required()
        ->expected(2, -1);

    std::string assoc_a, assoc_b, assoc_c;
    auto* assoc = app.add_subcommand("associator", "associator [a,b,c] = (ab)c - a(bc)");
    assoc->add_option("a", assoc_a)->required();
    assoc->add_option("b", assoc_b)->required();
    assoc->add_option("c", assoc_c)->required();

    std::string e2_input, e2_side = "left", e2_lambda;
    std::uint64_t e2_seed = 42;
    bool e2_nonreal = false;
    auto* e2 = app.add_subcommand("eigen2", "non-real eigenpair of a 2x2 Hermitian matrix");
    e2->add_option("--input", e2_input, "hermitian2 document ('-' for stdin)")->required();
    e2->add_option("--side", e2_side)->check(CLI::IsMember({"left", "right"}));
    e2->add_option("--lambda", e2_lambda, "eigenvalue expression (right side)");
    e2->add_option("--seed", e2_seed, "seed for the left eigenvector sample");
    e2->add_flag("--nonreal", e2_nonreal, "fail with a diagnostic if no non-real eigenvalues exist");

    std::string de_input, de_side = "right", de_lambda;
    std::uint64_t de_seed = 42;
    auto* de = app.add_subcommand("decompose", "rank-one eigen decomposition");
    de->add_option("--input", de_input)->required();
    de->add_option("--side", de_side)->check(CLI::IsMember({"left", "right"}));
    de->add_option("--lambda", de_lambda);
    de->add_option("--seed", de_seed);

    std::string re_input;
    auto* re2 = app.add_subcommand("real-eigen2", "real eigendecomposition and matrix form");
    re2->add_option("--input", re_input)->required();

    int spin_grid = 64;
    auto* sp = app.add_subcommand("spin", "spin operator eigenvalue table");
    sp->add_option("--grid", spin_grid, "phase grid size")->check(CLI::PositiveNumber);

    std::string e3_input;
    octo::SearchConfig e3_cfg;
    auto* e3 = app.add_subcommand("eigen3", "right eigenpair search for 3x3 matrices");
    e3->add_option("--input", e3_input)->required();
    e3->add_option("--restarts", e3_cfg.restarts)->check(CLI::PositiveNumber);
    e3->add_option("--tol", e3_cfg.tol)->check(CLI::PositiveNumber);
    e3->add_option("--seed", e3_cfg.seed);
    e3->add_flag("--nonreal", e3_cfg.constrain_imaginary,
                 "restrict the search to non-real eigenvalues");

    std::string vf_suite = "all";
    long vf_samples = 1000;
    std::uint64_t vf_seed = 42;
    auto* vf = app.add_subcommand("verify", "seeded randomized verification suites");
    vf->add_option("--suite", vf_suite)
        ->check(CLI::IsMember({"core", "eigen2", "spin", "eigen3", "appendix", "all"}));
    vf->add_option("--samples", vf_samples)->check(CLI::PositiveNumber);
    vf->add_option("--seed", vf_seed);

    try {
        app.parse(argc, argv);
        const ToleranceEnv te = resolve_tolerance();
        if (*mul) return cmd_mul(mul_terms);
        if (*assoc) return cmd_associator(assoc_a, assoc_b, assoc_c);
        if (*e2) return cmd_eigen2(e2_input, e2_side, e2_lambda, e2_seed, e2_nonreal, te);
        if (*de) return cmd_decompose(de_input, de_side, de_lambda, de_seed, te);
        if (*re2) return cmd_real_eigen2(re_input, te);
        if (*sp) return cmd_spin(spin_grid, te);
        if (*e3) return cmd_eigen3(e3_input, e3_cfg, te);
        if (*vf) return cmd_verify(vf_suite, vf_samples, vf_seed, te);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const octo::ParseError& e) {
        std::cerr << "error=parse " << e.what() << "\n";
        return kExitUsage;
    } catch (const octo::VersionUnsupported& e) {
        std::cerr << "error=version " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error=check " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
