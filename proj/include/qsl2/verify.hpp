#pragma once

// Verification checks for every closed-form claim the engine reproduces, and
// a registry mapping them onto a per-mode run for the CLI.  Each helper
// returns an empty string on success and a failure description otherwise, so
// callers can aggregate and report.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsl2/calculus.hpp"
#include "qsl2/dirac.hpp"

namespace qsl2 {

// --- granular checks (empty string = pass) --------------------------------------

std::string check_algebra_relations(const FieldContext& ctx, int assoc_trials, unsigned seed);
std::string check_differential(const Calculus& calc, bool exhaustive, int samples, int leibniz_pairs,
                               unsigned seed);
std::string check_tilde_pi(const Calculus& calc);
std::string check_connection_constant(const Calculus& calc);
std::string check_torsion_family(const Calculus& calc, unsigned seed);
std::string check_connection_unique(const Calculus& calc);
std::string check_nonregularity(const Calculus& calc);
std::string check_nabla(const Calculus& calc);
std::string check_metric_deviation();  // nabla eta != 0 but O(mu); rational points internally
std::string check_riemann(const Calculus& calc);
std::string check_lift(const Calculus& calc);
std::string check_ricci(const Calculus& calc);
std::string check_aslash(const Calculus& calc);
std::string check_spectrum(const Calculus& calc, int jobs);
std::string check_spectrum_circle(const Calculus& calc, int jobs);
std::string check_offset(const FieldContext& ctx);
// record-level variants, for callers that already computed the spectrum
std::string check_spectrum_records(const Calculus& calc, const std::vector<EigenRecord>& spec);
std::string check_circle_records(const FieldContext& ctx, const std::vector<EigenRecord>& spec);
std::string check_offset_table();  // fixed values at r = 3, 5, 7, 9
std::string check_modes_r3(const Calculus& calc);
std::string check_char_poly_r3(const Calculus& calc);

// --- registry --------------------------------------------------------------------

struct CheckResult {
    std::string id;
    std::string claim;       // one-line statement of what was verified
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string detail;      // failure description or skip reason
    double seconds = 0.0;    // reported outside the JSON encoding
    std::map<std::string, std::string> artifacts;  // emitted values, deterministic
};

struct VerifyOptions {
    std::shared_ptr<const FieldContext> ctx;
    bool deep = false;
    int jobs = 1;
};

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

}  // namespace qsl2
