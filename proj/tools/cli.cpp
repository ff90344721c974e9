#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hblock/decomposition.hpp"
#include "hblock/errors.hpp"
#include "hblock/generators.hpp"
#include "hblock/inequalities.hpp"
#include "hblock/json_io.hpp"

namespace hblock::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    Tolerance tol;
    std::uint64_t seed = 0;
    int trials = 1;
    int beta = 0;
    Eigen::Index alpha = 2;
    Eigen::Index n = 2;
    Eigen::Index rank = 1;
    double scale = 1.0;
    std::string mode;  // gen: random | equality | counterexample; decompose: two-block | quaternion | corner
};

Json config_to_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["input"] = c.input;
    j["output"] = c.output;
    j["tolerance"] = tolerance_to_json(c.tol);
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["beta"] = c.beta;
    j["alpha"] = c.alpha;
    j["n"] = c.n;
    j["rank"] = c.rank;
    j["scale"] = c.scale;
    j["mode"] = c.mode;
    return j;
}

Json metadata() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream ts;
    ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return {{"tool", "hblock"}, {"generated_at", ts.str()}};
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
    if (cfg.output.empty())
        out << j.dump(2) << '\n';
    else
        write_json_file(cfg.output, j);
}

std::string fmt6(double x) {
    std::ostringstream s;
    s << std::setprecision(6) << (x == 0.0 ? 0.0 : x);
    return s.str();
}

std::string fmt6(const RealVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt6(v[i]);
    return s + ")";
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    GeneratorSpec spec{cfg.seed, cfg.alpha, cfg.n, cfg.rank, cfg.scale};
    BlockMatrix h = [&] {
        if (cfg.mode == "counterexample") return nonhermitian_counterexample();
        if (cfg.mode == "equality") return equality_case_instance(cfg.n, cfg.seed);
        return random_block_psd(spec);
    }();
    Json j = block_matrix_to_json(h);
    j["config"] = config_to_json(cfg);
    emit(cfg, j, out);
    return exit_ok;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    const BlockMatrix h = block_matrix_from_json(read_json_file(cfg.input));
    DecompositionCertificate cert;
    if (cfg.mode == "quaternion") {
        const int beta = cfg.beta != 0 ? cfg.beta : static_cast<int>(h.block_count());
        cert = quaternion_pipeline(h, beta, cfg.tol).certificate;
    } else if (cfg.mode == "corner") {
        cert = corner_decomposition_general(h, cfg.tol);
    } else {
        cert = two_block_isometries(h, cfg.tol).certificate;
    }
    Json j = certificate_to_json(cert);
    j["config"] = config_to_json(cfg);
    emit(cfg, j, out);
    return verify_certificate(cert, cfg.tol).passed() ? exit_ok : exit_check_failed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const DecompositionCertificate cert = certificate_from_json(read_json_file(cfg.input));
    const CheckReport report = verify_certificate(cert, cfg.tol);
    Json j;
    j["config"] = config_to_json(cfg);
    j["kind"] = to_string(cert.kind);
    j["report"] = check_report_to_json(report);
    j["passed"] = report.passed();
    j["metadata"] = metadata();
    emit(cfg, j, out);
    return report.passed() ? exit_ok : exit_check_failed;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    Json trials = Json::array();
    bool all_passed = true;
    auto run_one = [&](const BlockMatrix& h, int index, std::optional<std::uint64_t> seed) {
        const CheckReport report = full_inequality_suite(h, cfg.tol);
        all_passed = all_passed && report.passed();
        Json t;
        t["trial"] = index;
        if (seed) t["seed"] = *seed;
        t["report"] = check_report_to_json(report);
        trials.push_back(std::move(t));
    };
    if (!cfg.input.empty()) {
        run_one(block_matrix_from_json(read_json_file(cfg.input)), 0, std::nullopt);
    } else {
        for (int i = 0; i < cfg.trials; ++i) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
            run_one(random_block_psd({seed, cfg.alpha, cfg.n, cfg.rank, cfg.scale}), i, seed);
        }
    }
    Json j;
    j["config"] = config_to_json(cfg);
    j["trials"] = std::move(trials);
    j["passed"] = all_passed;
    j["metadata"] = metadata();
    emit(cfg, j, out);
    return all_passed ? exit_ok : exit_check_failed;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
    bool expected = true;
    auto expect = [&](bool ok, const std::string& what) {
        out << "  [" << (ok ? "ok" : "UNEXPECTED") << "] " << what << '\n';
        expected = expected && ok;
    };

    out << "Geometric-mean instance A = diag(4,1), B = diag(1,9), X = A^1/2 B^1/2\n";
    {
        ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
        a.diagonal() << 4.0, 1.0;
        b.diagonal() << 1.0, 9.0;
        const BlockMatrix h = equality_case_from(a, b, cfg.tol);
        out << "  eig(H) = " << fmt6(eigenvalues(h.data())) << ", eig(Delta) = " << fmt6(eigenvalues(partial_trace(h)))
            << '\n';
        const CheckReport det = det_sandwich(h, cfg.tol);
        const Check& left = det.at("det_fisher");
        const Check& right = det.at("det_partial_trace");
        out << "  det(I+A)det(I+B) = " << fmt6(left.rhs[0]) << " >= det(I+H) = " << fmt6(left.lhs[0])
            << " >= det(I+A+B) = " << fmt6(right.lhs[0]) << '\n';
        expect(det.passed(), "determinant sandwich holds, right side with equality");
        expect(full_inequality_suite(h, cfg.tol).passed(), "full inequality suite passes");
    }

    out << "Non-Hermitian counterexample H = vv*, v = (1,0,0,1)\n";
    {
        const BlockMatrix h = nonhermitian_counterexample();
        const HermitianBlockReport blocks = validate_hermitian_blocks(h, cfg.tol);
        expect(!blocks.ok && blocks.offending.front().s == 1 && blocks.offending.front().t == 2,
               "block (1,2) flagged as non-Hermitian");
        const CheckReport hir = hiroshima_check(h, cfg.tol);
        const Check& maj = hir.at("hiroshima_majorization");
        out << "  k=1: lambda_1(H) = " << fmt6(maj.lhs[0]) << " vs lambda_1(Delta) = " << fmt6(maj.rhs[0]) << '\n';
        expect(!maj.passed && maj.first_failure == 0u, "norm dominance fails at k = 1");
        const DecompositionCertificate corner = two_corner_decomposition(h.data(), 2, 2, cfg.tol);
        out << "  two-corner decomposition residual " << fmt6(corner.defects.reconstruction) << '\n';
        expect(verify_certificate(corner, cfg.tol).passed(), "two-corner decomposition still reconstructs H");
    }

    out << "Two-block isometries on a seeded 2x2-block instance (n = 3)\n";
    {
        const BlockMatrix h = random_block_psd({cfg.seed, 2, 3, 2, 1.0});
        const TwoBlockResult res = two_block_isometries(h, cfg.tol);
        out << "  residual " << fmt6(res.certificate.defects.reconstruction) << ", isometry defects "
            << fmt6(res.certificate.defects.isometry) << '\n';
        expect(verify_certificate(res.certificate, cfg.tol).passed(), "H = 1/2 {U(A+B)U* + V(A+B)V*}");
    }

    for (int beta : {4, 3}) {
        out << "Quaternion pipeline, beta = " << beta << ", n = 2\n";
        const BlockMatrix h = random_block_psd({cfg.seed, beta, 2, 2, 1.0});
        const QuaternionResult res = quaternion_pipeline(h, beta, cfg.tol);
        out << "  Omega off-diagonal skew defect " << fmt6(omega_skew_defect(res.trace)) << '\n';
        out << "  R2 Omega R2* diagonal blocks vs D defect " << fmt6(phi_diagonal_defect(res.trace)) << '\n';
        out << "  residual " << fmt6(res.certificate.defects.reconstruction) << ", isometry defects "
            << fmt6(res.certificate.defects.isometry) << '\n';
        expect(verify_certificate(res.certificate, cfg.tol).passed(), "H (+) H = 1/4 sum V_k (Delta (+) Delta) V_k*");
    }

    out << (expected ? "demo: all outcomes as expected\n" : "demo: some outcomes were unexpected\n");
    return expected ? exit_ok : exit_check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Decompositions and eigenvalue inequalities for PSD matrices with Hermitian blocks", "hblock"};
    app.require_subcommand(1);

    auto add_tolerance = [&](CLI::App* sub) {
        sub->add_option("--tol-abs", cfg.tol.atol, "absolute tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--tol-rel", cfg.tol.rtol, "relative tolerance")->check(CLI::NonNegativeNumber);
    };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--out", cfg.output, "output file (default stdout)"); };
    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "block count")->check(CLI::PositiveNumber);
        sub->add_option("--n", cfg.n, "block dimension")->check(CLI::PositiveNumber);
        sub->add_option("--rank", cfg.rank, "number of Gram summands")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--scale", cfg.scale, "magnitude")->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "write a BlockMatrix JSON instance");
    add_shape(gen);
    add_tolerance(gen);
    add_output(gen);
    bool counterexample = false;
    bool equality = false;
    gen->add_flag("--counterexample", counterexample, "the rank-one non-Hermitian-block counterexample");
    gen->add_flag("--equality-case", equality, "commuting A, B with X = A^1/2 B^1/2 (uses --n, --seed)");

    CLI::App* decompose = app.add_subcommand("decompose", "decompose a BlockMatrix and write a certificate");
    decompose->add_option("input", cfg.input, "BlockMatrix JSON")->required();
    add_tolerance(decompose);
    add_output(decompose);
    bool quaternion = false;
    bool two_block = false;
    bool corner = false;
    auto* q_flag = decompose->add_flag("--quaternion", quaternion, "H (+) H = 1/4 sum V_k (Delta (+) Delta) V_k*");
    auto* t_flag = decompose->add_flag("--two-block", two_block, "H = 1/2 {U(A+B)U* + V(A+B)V*} (default)");
    auto* c_flag = decompose->add_flag("--corner", corner, "H = sum_s U_s A_ss U_s*");
    q_flag->excludes(t_flag)->excludes(c_flag);
    t_flag->excludes(c_flag);
    decompose->add_option("--beta", cfg.beta, "3 or 4 (quaternion mode; default block count)");

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("input", cfg.input, "certificate JSON")->required();
    add_tolerance(verify);
    add_output(verify);

    CLI::App* check = app.add_subcommand("check", "run the inequality suite");
    check->add_option("input", cfg.input, "BlockMatrix JSON (omit to generate --trials instances)");
    add_shape(check);
    add_tolerance(check);
    add_output(check);
    check->add_option("--trials", cfg.trials, "generated instances when no input is given")->check(CLI::PositiveNumber);

    CLI::App* demo = app.add_subcommand("demo", "walk through the named examples");
    demo->add_option("--seed", cfg.seed, "random seed");
    add_tolerance(demo);

    std::vector<std::string> argv_storage{"hblock"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "hblock: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            cfg.command = "gen";
            cfg.mode = counterexample ? "counterexample" : equality ? "equality" : "random";
            return cmd_gen(cfg, out);
        }
        if (decompose->parsed()) {
            cfg.command = "decompose";
            cfg.mode = quaternion ? "quaternion" : corner ? "corner" : "two-block";
            return cmd_decompose(cfg, out);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, out);
        }
        if (check->parsed()) {
            cfg.command = "check";
            return cmd_check(cfg, out);
        }
        cfg.command = "demo";
        return cmd_demo(cfg, out);
    } catch (const InputError& e) {
        err << "hblock: input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const HypothesisError& e) {
        err << "hblock: hypothesis not satisfied: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const DomainError& e) {
        err << "hblock: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const NumericalError& e) {
        err << "hblock: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
}

}  // namespace hblock::cli
