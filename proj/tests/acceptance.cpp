// Acceptance suite: runs every top-level claim the engine must reproduce and
// prints one pass/fail line per criterion.  Exit status is the number of
// failed criteria.
//
// Usage: acceptance [--deep] [path-to-cli]
//   --deep     also run the long checks (r = 5 general uniqueness, r = 7 spectrum)
//   the CLI path is needed for the determinism criterion; it can also be set
//   through the QSL2GEOM environment variable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsl2/curvature.hpp"
#include "qsl2/dirac.hpp"
#include "qsl2/reference.hpp"
#include "qsl2/verify.hpp"

using namespace qsl2;

namespace {

struct Criterion {
    std::string id;
    double limit_seconds;
    std::function<std::string()> run;  // empty result = pass
};

std::string join_nonempty(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

std::string capture_command(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    exit_code = pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool deep = false;
    std::string cli_path;
    if (const char* env = std::getenv("QSL2GEOM")) cli_path = env;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--deep")
            deep = true;
        else
            cli_path = arg;
    }

    std::vector<Criterion> criteria;

    criteria.push_back({"01-algebra-soundness", 10.0, [] {
        std::string err;
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            err = check_algebra_relations(*ctx, 500, 20240601u + static_cast<unsigned>(r));
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        return std::string();
    }});

    criteria.push_back({"02-calculus-soundness", 30.0, [] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_differential(calc, r == 3, 200, 200, 20240700u + static_cast<unsigned>(r));
            if (err.empty()) err = check_tilde_pi(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        return std::string();
    }});

    criteria.push_back({"03-spin-connection", deep ? 1800.0 : 120.0, [deep] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_connection_constant(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        for (const Rational& qv : {Rational(2), Rational(3, 2)}) {
            auto ctx = FieldContext::rational_q(qv);
            Calculus calc(ctx);
            std::string err = check_connection_constant(calc);
            if (!err.empty()) return "q=" + rational_to_string(qv) + ": " + err;
        }
        {
            auto ctx = FieldContext::root_of_unity(3);
            Calculus calc(ctx);
            std::string err = check_connection_unique(calc);
            if (!err.empty()) return "r=3 general solve: " + err;
        }
        if (deep) {
            auto ctx = FieldContext::root_of_unity(5);
            Calculus calc(ctx);
            std::string err = check_connection_unique(calc);
            if (!err.empty()) return "r=5 general solve: " + err;
        }
        return std::string();
    }});

    criteria.push_back({"04-non-regularity", 60.0, [] {
        auto ctx = FieldContext::root_of_unity(3);
        Calculus calc(ctx);
        return check_nonregularity(calc);
    }});

    criteria.push_back({"05-covariant-derivative", 30.0, [] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_nabla(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        {
            auto ctx = FieldContext::rational_q(Rational(2));
            Calculus calc(ctx);
            std::string err = check_nabla(calc);
            if (!err.empty()) return "q=2: " + err;
        }
        return check_metric_deviation();
    }});

    criteria.push_back({"06-riemann-curvature", 30.0, [] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_riemann(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        auto ctx = FieldContext::rational_q(Rational(2));
        Calculus calc(ctx);
        std::string err = check_riemann(calc);
        return err.empty() ? std::string() : "q=2: " + err;
    }});

    criteria.push_back({"07-lifting-map", 5.0, [] {
        auto ctx = FieldContext::root_of_unity(3);
        Calculus calc(ctx);
        std::string err = check_lift(calc);
        if (!err.empty()) return err;
        auto q2 = FieldContext::rational_q(Rational(2));
        Calculus calcq(q2);
        return check_lift(calcq);
    }});

    criteria.push_back({"08-ricci-tensor", 10.0, [] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_ricci(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        for (const Rational& qv : {Rational(2), Rational(3, 2)}) {
            auto ctx = FieldContext::rational_q(qv);
            Calculus calc(ctx);
            std::string err = check_ricci(calc);
            if (!err.empty()) return "q=" + rational_to_string(qv) + ": " + err;
        }
        return std::string();
    }});

    criteria.push_back({"09-dirac-connection-term", 10.0, [] {
        for (int r : {3, 5, 7}) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            std::string err = check_aslash(calc);
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        return std::string();
    }});

    criteria.push_back({"10-dirac-spectrum", deep ? 1800.0 : 330.0, [deep] {
        std::vector<int> orders = {3, 5};
        if (deep) orders.push_back(7);
        for (int r : orders) {
            auto ctx = FieldContext::root_of_unity(r);
            Calculus calc(ctx);
            const auto spec = dirac_spectrum(calc, true, 2);
            std::string err =
                join_nonempty({check_spectrum_records(calc, spec), check_circle_records(*ctx, spec)});
            if (!err.empty()) return "r=" + std::to_string(r) + ": " + err;
        }
        return check_offset_table();
    }});

    criteria.push_back({"11-dirac-modes-r3", 120.0, [] {
        auto ctx = FieldContext::root_of_unity(3);
        Calculus calc(ctx);
        return join_nonempty({check_modes_r3(calc), check_char_poly_r3(calc)});
    }});

    criteria.push_back({"12-determinism", 120.0, [&cli_path] {
        if (cli_path.empty()) return std::string("CLI path not provided (pass it as an argument or set QSL2GEOM)");
        const std::string cmd = cli_path + " verify all --r 3 --format json 2>/dev/null";
        int code1 = 0, code2 = 0;
        const std::string out1 = capture_command(cmd, code1);
        const std::string out2 = capture_command(cmd, code2);
        if (code1 != 0 || code2 != 0) return std::string("verify all --r 3 exited nonzero");
        if (out1.empty()) return std::string("verify produced no output");
        if (out1 != out2) return std::string("two runs produced different JSON");
        return std::string();
    }});

    int failed = 0;
    for (const auto& crit : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = crit.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (err.empty() && elapsed > crit.limit_seconds) {
            std::ostringstream os;
            os << "exceeded the " << crit.limit_seconds << " s budget";
            err = os.str();
        }
        const bool pass = err.empty();
        if (!pass) ++failed;
        std::printf("%s %-28s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", crit.id.c_str(), elapsed,
                    pass ? "" : " - ", pass ? "" : err.c_str());
        std::fflush(stdout);
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failed;
}
