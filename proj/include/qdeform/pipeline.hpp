#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdeform/params.hpp"
#include "qdeform/parallel.hpp"

namespace qdeform {

enum class CheckStatus { Pass, Fail, Skip, Error };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string claim;       // the mathematical statement being verified
    CheckStatus status;
    std::string detail;      // witness or counterexample
    std::int64_t elapsed_us;
};

struct VerificationReport {
    std::string tool;
    std::string version;
    unsigned precision;
    std::string params_text;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    // 0: all pass; 1: at least one check failed, errored or was skipped.
    int exit_code() const { return all_pass() ? 0 : 1; }

    // Deterministic for fixed inputs apart from the elapsed_us fields.
    std::string to_json(bool include_timing = true) const;
    std::string to_text() const;
    static VerificationReport from_json(const std::string& text);
};

struct VerifyOptions {
    // Empty: run everything. Otherwise run exactly these check ids
    // (prerequisites are still computed, silently).
    std::vector<std::string> only;
    ExecPolicy policy = ExecPolicy::Parallel;
    unsigned psi_order = 8;
};

// The ordered list of check ids cmd-line filters may name.
std::vector<std::string> verification_check_ids();

// Runs the whole chain in dependency order; when a prerequisite fails the
// dependent checks are reported as skipped, never as failed.
// Throws std::invalid_argument for unknown ids in options.only.
VerificationReport run_verification(const DeformationParams& params,
                                    const VerifyOptions& options = {});

}  // namespace qdeform
