#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdeform/analysis.hpp"
#include "qdeform/pipeline.hpp"
#include "qdeform/version.hpp"

namespace {

using namespace qdeform;

struct ParamsSource {
    std::string preset = "example";
    std::string file;
    unsigned precision = 0;  // 0: keep the source's value

    DeformationParams resolve() const {
        DeformationParams p;
        if (!file.empty()) {
            p = load_params_file(file);
        } else if (preset == "example") {
            p = example_params();
        } else {
            throw std::invalid_argument("unknown preset '" + preset + "'");
        }
        if (precision != 0) p.series_precision = precision;
        return p;
    }
};

void add_params_options(CLI::App* cmd, ParamsSource& src) {
    auto* preset = cmd->add_option("--preset", src.preset, "named parameter preset (example)");
    cmd->add_option("--params-file", src.file, "key-value parameter file")
        ->excludes(preset);
    cmd->add_option("--precision", src.precision, "series precision override");
}

int run_verify(const ParamsSource& src, const std::vector<std::string>& only,
               const std::string& format, const std::string& output, bool serial,
               unsigned psi_order) {
    DeformationParams params = src.resolve();
    VerifyOptions opts;
    opts.only = only;
    opts.policy = serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    opts.psi_order = psi_order;
    VerificationReport rep = run_verification(params, opts);

    std::string rendered = format == "json" ? rep.to_json() : rep.to_text();
    std::cout << rendered;
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::invalid_argument("cannot write to '" + output + "'");
        out << rep.to_json();
    }
    return rep.exit_code();
}

int run_params_validate(const ParamsSource& src) {
    DeformationParams params = src.resolve();
    ValidationReport rep = validate(params);
    std::cout << "parameters:\n";
    std::istringstream ps(params.str());
    std::string line;
    while (std::getline(ps, line)) std::cout << "  " << line << "\n";
    std::cout << "\nchecks:\n" << rep.str();
    std::cout << "\nverdict: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return rep.ok() ? 0 : 1;
}

int run_params_search(unsigned degree_bound, std::size_t limit) {
    SearchResult res = search_params(degree_bound, limit);
    std::cout << "tested " << res.candidates_tested << " polynomial tuples, found "
              << res.found.size() << "\n";
    std::cout << "example tuple re-accepted: " << (res.example_reaccepted ? "yes" : "no")
              << "\n";
    for (std::size_t i = 0; i < res.found.size(); ++i) {
        std::cout << "\n# tuple " << i + 1 << "\n" << res.found[i].str();
    }
    return 0;
}

int run_report(const std::string& input, const std::string& format) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    VerificationReport rep = VerificationReport::from_json(buf.str());
    std::cout << (format == "json" ? rep.to_json() : rep.to_text());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for a separable deformation of the quaternion group "
                 "algebra in characteristic 2"};
    app.set_version_flag("--version", std::string(qdeform::kToolVersion));
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification pipeline");
    ParamsSource verify_src;
    add_params_options(verify, verify_src);
    std::vector<std::string> only;
    verify->add_option("--check", only, "run only the named checks (repeatable)");
    std::string format = "text";
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string output;
    verify->add_option("--output", output, "also save the JSON report to a file");
    bool serial = false;
    verify->add_flag("--serial", serial, "use the serial reference kernels");
    unsigned psi_order = 8;
    verify->add_option("--psi-order", psi_order, "highest deformation-cochain order")
        ->check(CLI::Range(1u, 64u));

    // params
    auto* params_cmd = app.add_subcommand("params", "inspect or search parameter tuples");
    params_cmd->require_subcommand(1);
    auto* pv = params_cmd->add_subcommand("validate", "validate a parameter tuple");
    ParamsSource pv_src;
    add_params_options(pv, pv_src);
    auto* ps = params_cmd->add_subcommand("search", "enumerate polynomial tuples");
    unsigned degree_bound = 3;
    ps->add_option("--degree-bound", degree_bound, "max degree of w, c, d")
        ->check(CLI::Range(0u, 8u));
    std::size_t limit = 10;
    ps->add_option("--limit", limit, "max number of tuples to emit");

    // report
    auto* report = app.add_subcommand("report", "re-render a saved verification report");
    std::string input;
    report->add_option("--input", input, "saved JSON report")->required();
    std::string report_format = "text";
    report->add_option("--format", report_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_src, only, format, output, serial, psi_order);
        if (pv->parsed()) return run_params_validate(pv_src);
        if (ps->parsed()) return run_params_search(degree_bound, limit);
        if (report->parsed()) return run_report(input, report_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
