#include <doctest.h>

#include <algorithm>
#include <regex>

#include "qdeform/pipeline.hpp"

using namespace qdeform;

namespace {

std::string strip_timing(std::string json) {
    return std::regex_replace(json, std::regex("\\s*\"elapsed_us\": \\d+,?"), "");
}

}  // namespace

TEST_CASE("the full pipeline passes on the worked example") {
    VerificationReport rep = run_verification(example_params());
    CHECK(rep.all_pass());
    CHECK(rep.exit_code() == 0);
    CHECK(rep.checks.size() == verification_check_ids().size());

    SUBCASE("every declared check appears exactly once, in order") {
        std::vector<std::string> ids;
        for (const CheckResult& c : rep.checks) ids.push_back(c.id);
        CHECK(ids == verification_check_ids());
        std::vector<std::string> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("failures skip their dependents instead of cascading") {
    DeformationParams bad = example_params();
    bad.d = bad.c;
    VerificationReport rep = run_verification(bad);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.exit_code() == 1);

    std::size_t fails = 0, skips = 0, passes = 0;
    for (const CheckResult& c : rep.checks) {
        if (c.status == CheckStatus::Fail) {
            ++fails;
            CHECK(c.id == "params-valid");
        }
        if (c.status == CheckStatus::Skip) ++skips;
        if (c.status == CheckStatus::Pass) {
            ++passes;
            // the negative control does not depend on the parameters
            CHECK(c.id == "separability-negative-control");
        }
    }
    CHECK(fails == 1);
    CHECK(passes == 1);
    CHECK(skips == rep.checks.size() - 2);
}

TEST_CASE("check filters") {
    VerifyOptions opts;
    opts.only = {"psi-cocycle"};
    VerificationReport rep = run_verification(example_params(), opts);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].id == "psi-cocycle");
    CHECK(rep.checks[0].status == CheckStatus::Pass);
    CHECK(rep.all_pass());

    VerifyOptions unknown;
    unknown.only = {"no-such-check"};
    CHECK_THROWS_AS(run_verification(example_params(), unknown), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from timing") {
    VerificationReport a = run_verification(example_params());
    VerificationReport b = run_verification(example_params());
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(strip_timing(a.to_json(true)) == strip_timing(b.to_json(true)));
}

TEST_CASE("JSON round-trips") {
    VerifyOptions opts;
    opts.only = {"params-valid", "idempotents"};
    VerificationReport rep = run_verification(example_params(), opts);
    VerificationReport back = VerificationReport::from_json(rep.to_json());
    REQUIRE(back.checks.size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(back.checks[i].id == rep.checks[i].id);
        CHECK(back.checks[i].claim == rep.checks[i].claim);
        CHECK(back.checks[i].status == rep.checks[i].status);
        CHECK(back.checks[i].detail == rep.checks[i].detail);
    }
    CHECK(back.to_json() == rep.to_json());
    CHECK_FALSE(back.to_text().empty());
    CHECK_THROWS(VerificationReport::from_json("not json"));
}
