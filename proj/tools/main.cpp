// Command-line surface for the exact quantum-geometry engine: per-claim
// verification runner plus direct emitters for the connection, curvature and
// Dirac spectrum data.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "qsl2/curvature.hpp"
#include "qsl2/dirac.hpp"
#include "qsl2/json_io.hpp"
#include "qsl2/reference.hpp"
#include "qsl2/verify.hpp"

using namespace qsl2;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    int r = 0;
    std::string q;
    std::string format = "text";
    bool deep = false;
    bool unnormalized = false;
    int jobs = 0;
};

std::shared_ptr<const FieldContext> make_context(const Options& opt) {
    if ((opt.r != 0) == (!opt.q.empty()))
        throw CLI::ValidationError("mode", "exactly one of --r and --q is required");
    if (opt.r != 0) return FieldContext::root_of_unity(opt.r);
    return FieldContext::rational_q(rational_from_string(opt.q));
}

int effective_jobs(const Options& opt) {
    if (opt.jobs > 0) return opt.jobs;
    if (const char* env = std::getenv("QSL2_JOBS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const Options& opt, const Json& doc, const std::string& text) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run_connection(const Options& opt) {
    auto ctx = make_context(opt);
    Calculus calc(ctx);
    const Connection A = solve_constant(calc);
    const auto tor = torsion_residual(calc, A);
    const auto cot = cotorsion_residual(calc, A);
    bool tor_zero = true, cot_zero = true;
    for (int i = 0; i < 4; ++i) {
        tor_zero = tor_zero && tor[static_cast<size_t>(i)].is_zero();
        cot_zero = cot_zero && cot[static_cast<size_t>(i)].is_zero();
    }

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["mode"] = ctx->describe();
    doc["connection"] = connection_to_json(A);
    doc["torsion_residual_zero"] = tor_zero;
    doc["cotorsion_residual_zero"] = cot_zero;

    std::ostringstream text;
    text << "spin connection (" << ctx->describe() << ")\n";
    for (int i = 0; i < 4; ++i) {
        text << "  A_" << "abcd"[i] << " = ";
        const Form1 Ai = A.form(i);
        text << Ai.str() << "\n";
    }
    text << "  torsion residual zero:   " << (tor_zero ? "yes" : "NO") << "\n";
    text << "  cotorsion residual zero: " << (cot_zero ? "yes" : "NO") << "\n";
    emit(opt, doc, text.str());
    return (tor_zero && cot_zero) ? 0 : 1;
}

int run_riemann(const Options& opt) {
    auto ctx = make_context(opt);
    Calculus calc(ctx);
    const Connection A = Connection::canonical(calc);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["mode"] = ctx->describe();
    std::ostringstream text;
    text << "Riemann curvature of the canonical connection (" << ctx->describe() << ")\n";
    Json table = Json::object();
    for (int i = 0; i < 4; ++i) {
        const Tensor21 R = riemann(calc, A, calc.basis_form(i));
        table[kBasis1Names[i]] = tensor21_to_json(R);
        text << "  Riemann(" << kBasis1Names[i] << ") = " << R.str() << "\n";
    }
    doc["riemann"] = std::move(table);
    emit(opt, doc, text.str());
    return 0;
}

int run_ricci(const Options& opt) {
    auto ctx = make_context(opt);
    Calculus calc(ctx);
    const Metric g = metric(calc);
    const Tensor11 ric = ricci(calc, Connection::canonical(calc), g);
    const bool matches = (ric == reference_ricci(calc));

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["mode"] = ctx->describe();
    doc["metric"] = tensor11_to_json(g.tensor);
    doc["ricci"] = tensor11_to_json(ric);
    doc["einstein_form"] = matches;

    std::ostringstream text;
    text << "Ricci tensor (" << ctx->describe() << ")\n";
    text << "  eta   = " << g.tensor.str() << "\n";
    text << "  Ricci = " << ric.str() << "\n";
    text << "  proportional to shifted metric: " << (matches ? "yes" : "NO") << "\n";
    emit(opt, doc, text.str());
    return matches ? 0 : 1;
}

int run_spectrum(const Options& opt) {
    auto ctx = make_context(opt);
    if (!ctx->is_root_of_unity()) throw CLI::ValidationError("mode", "dirac spectrum requires --r");
    Calculus calc(ctx);
    const auto spec = dirac_spectrum(calc, !opt.unnormalized, effective_jobs(opt));
    const OffsetReport off = offset_report(*ctx);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["r"] = ctx->order();
    doc["normalized"] = !opt.unnormalized;
    doc["offset"] = scalar_to_json(off.exact);
    Json recs = Json::array();
    for (const auto& rec : spec) recs.push_back(eigen_record_to_json(rec));
    doc["eigenvalues"] = std::move(recs);

    std::ostringstream text;
    text << "spectrum of the slashed derivative, r = " << ctx->order()
         << (opt.unnormalized ? " (unnormalized)" : "") << "\n";
    text << "  curvature offset [3]/[4] = " << off.exact.str() << "\n";
    for (const auto& rec : spec)
        text << "  m=" << rec.m << "  lambda = " << rec.eigenvalue.str() << "  dim = " << rec.dim
             << "  generalized = " << rec.generalized_dim << "  embedding = (" << rec.embedding.real()
             << ", " << rec.embedding.imag() << ")\n";
    emit(opt, doc, text.str());
    return 0;
}

int run_modes(const Options& opt) {
    auto ctx = make_context(opt);
    if (!ctx->is_root_of_unity() || ctx->order() != 3)
        throw CLI::ValidationError("mode", "dirac modes requires --r 3");
    Calculus calc(ctx);
    const auto modes = listed_modes_r3(calc);
    const ModeVerification rep = verify_modes_r3(calc);
    const char* names[3] = {"0", "-1", "q^2"};

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["r"] = 3;
    Json groups = Json::array();
    std::ostringstream text;
    text << "Dirac eigenmodes at r = 3\n";
    for (int g = 0; g < 3; ++g) {
        Json group;
        group["eigenvalue"] = names[g];
        Json list = Json::array();
        text << "eigenvalue " << names[g] << " (" << modes[static_cast<size_t>(g)].size() << " modes):\n";
        for (const auto& v : modes[static_cast<size_t>(g)]) {
            Json mode;
            mode["psi1"] = element_to_json(v.c1);
            mode["psi2"] = element_to_json(v.c2);
            list.push_back(std::move(mode));
            text << "  (" << v.c1.str() << " ; " << v.c2.str() << ")\n";
        }
        group["modes"] = std::move(list);
        groups.push_back(std::move(group));
    }
    doc["groups"] = std::move(groups);
    doc["all_verified"] = rep.spans_match;
    doc["conjugation_preserves_spans"] = rep.conjugation_preserves_spans;
    text << "verified: " << (rep.spans_match ? "yes" : "NO")
         << ", conjugation preserves spans: " << (rep.conjugation_preserves_spans ? "yes" : "NO") << "\n";
    emit(opt, doc, text.str());
    return rep.spans_match ? 0 : 1;
}

int run_verify(const Options& opt) {
    auto ctx = make_context(opt);
    VerifyOptions vopts;
    vopts.ctx = ctx;
    vopts.deep = opt.deep;
    vopts.jobs = effective_jobs(opt);
    const auto results = run_all_checks(vopts);

    int failed = 0;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["mode"] = ctx->describe();
    Json list = Json::array();
    std::ostringstream text;
    text << "verification (" << ctx->describe() << ")\n";
    double total = 0.0;
    for (const auto& res : results) {
        list.push_back(check_result_to_json(res));
        const char* tag = res.status == CheckResult::Status::Pass   ? "PASS"
                          : res.status == CheckResult::Status::Fail ? "FAIL"
                                                                    : "SKIP";
        if (res.status == CheckResult::Status::Fail) ++failed;
        text << "  [" << tag << "] " << res.id << " - " << res.claim;
        if (!res.detail.empty()) text << " (" << res.detail << ")";
        text << "\n";
        total += res.seconds;
    }
    doc["checks"] = std::move(list);
    doc["failed"] = failed;
    emit(opt, doc, text.str());
    std::cerr << "total check time: " << total << " s\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact noncommutative Riemannian geometry of reduced quantum SL(2) at odd roots of unity"};
    app.fallthrough();

    Options opt;
    app.add_option("--r", opt.r, "odd root-of-unity order (>= 3)");
    app.add_option("--q", opt.q, "exact rational deformation parameter p/q (q^2 != 1)");
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--deep", opt.deep, "include the long-running checks (r = 5 uniqueness, r = 7 spectrum)");
    app.add_option("--jobs", opt.jobs, "parallelism degree (default: QSL2_JOBS or hardware)");

    auto* conn = app.add_subcommand("connection", "solve for the invariant spin connection and print it");
    auto* riem = app.add_subcommand("riemann", "Riemann curvature of the canonical connection");
    auto* ricc = app.add_subcommand("ricci", "Ricci tensor via the lifting map and quantum trace");
    auto* dirac_cmd = app.add_subcommand("dirac", "Dirac operator computations");
    auto* spectrum_cmd = dirac_cmd->add_subcommand("spectrum", "exact eigenvalues with multiplicities");
    spectrum_cmd->add_flag("--unnormalized", opt.unnormalized,
                           "use the bare graded bracket without the 1/mu normalization");
    auto* modes_cmd = dirac_cmd->add_subcommand("modes", "the verified eigenmode table at r = 3");
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite for the given mode");
    std::string verify_target = "all";
    verify_cmd->add_option("target", verify_target, "check selection (only 'all' is defined)");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (*conn) return run_connection(opt);
        if (*riem) return run_riemann(opt);
        if (*ricc) return run_ricci(opt);
        if (*spectrum_cmd) return run_spectrum(opt);
        if (*modes_cmd) return run_modes(opt);
        if (*dirac_cmd) {
            std::cerr << "dirac requires a subcommand: spectrum | modes\n";
            return 2;
        }
        if (*verify_cmd) {
            if (verify_target != "all") {
                std::cerr << "unknown verify target: " << verify_target << "\n";
                return 2;
            }
            return run_verify(opt);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
