// Copyright 2026 The ftverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ftv/scenarios.hpp"
#include "ftv/symplectic.hpp"
#include "ftv/verifier.hpp"

using nlohmann::json;

namespace {

ftv::FaultModel parse_model(const std::string &spec) {
    ftv::FaultModel m;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--model entries look like idle=off");
        }
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        bool on = val == "on" || val == "1" || val == "true";
        if (key == "idle") {
            m.idle_faults = on;
        } else if (key == "meas") {
            m.meas_flips = on;
        } else if (key == "prep") {
            m.prep_faults = on;
        } else {
            throw CLI::ValidationError("unknown fault model toggle: " + key);
        }
    }
    return m;
}

int run_one(const std::string &what, const ftv::VerifyOptions &opt, const std::string &report_path,
            const std::string &format) {
    const ftv::ScenarioEntry *entry = ftv::find_scenario(what);
    ftv::ScenarioResult result;
    std::string name = what;
    try {
        if (entry) {
            result = entry->run(opt);
        } else {
            // Treat as a scenario file path: run its declared mode.
            ftv::Protocol p = ftv::load_protocol_file(what);
            auto locs = ftv::fault_locations(p, opt.model);
            ftv::VerificationReport rep = p.mode == ftv::ProtocolMode::kCorrection
                                              ? ftv::check_correction(p, opt)
                                              : ftv::check_detection(p, opt);
            rep.scenario = what;
            result.as_expected = rep.pass;
            result.report = rep.text(p, locs);
            ftv::ScenarioResult claims = ftv::run_protocol_claims(p);
            result.report += claims.report;
            result.as_expected = result.as_expected && claims.as_expected;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (format == "json") {
        json j;
        j["scenario"] = name;
        j["as_expected"] = result.as_expected;
        j["report"] = result.report;
        j["artifacts"] = result.artifacts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "=== " << name << " ===\n" << result.report;
        std::cout << "scenario outcome: " << (result.as_expected ? "AS EXPECTED" : "UNEXPECTED") << "\n";
    }
    if (!report_path.empty()) {
        json j;
        j["scenario"] = name;
        j["as_expected"] = result.as_expected;
        j["report"] = result.report;
        j["artifacts"] = result.artifacts;
        std::ofstream out(report_path);
        out << j.dump(2) << "\n";
    }
    return result.as_expected ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ftverify: exhaustive single-fault verification of flag-gadget circuits"};
    app.require_subcommand(1);

    std::string model_spec, report_path, format = "text", section_filter;
    int jobs = 1;
    size_t max_cex = 100;

    auto *list = app.add_subcommand("list", "list built-in scenarios");
    list->add_option("--section", section_filter, "only scenarios from this section");

    std::string run_target;
    auto *run = app.add_subcommand("run", "run a built-in scenario or a scenario file");
    run->add_option("scenario", run_target, "scenario name or file path")->required();
    run->add_option("--model", model_spec, "fault model toggles, e.g. idle=off,meas=on,prep=on");
    run->add_option("--report", report_path, "write a machine-readable report to this path");
    run->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--jobs", jobs, "parallel fault propagation threads");
    run->add_option("--max-counterexamples", max_cex, "cap on reported counterexamples");

    auto *all = app.add_subcommand("run-all", "run every built-in scenario");
    all->add_option("--section", section_filter, "only scenarios from this section");
    all->add_option("--jobs", jobs, "parallel fault propagation threads");
    bool include_slow = false;
    all->add_flag("--slow", include_slow, "include the long group-order computation");

    auto *orders = app.add_subcommand("orders", "print closed-form group orders");
    size_t orders_k = 4;
    orders->add_option("-k", orders_k, "number of qubits");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const auto &e : ftv::scenario_registry()) {
            if (!section_filter.empty() && e.section != section_filter) {
                continue;
            }
            std::cout << e.name << "  [" << e.section << "]\n    " << e.description << "\n    expects: "
                      << e.expectation << "\n";
        }
        return 0;
    }
    ftv::VerifyOptions opt;
    opt.jobs = jobs;
    opt.max_counterexamples = max_cex;
    if (!model_spec.empty()) {
        opt.model = parse_model(model_spec);
    }
    if (run->parsed()) {
        return run_one(run_target, opt, report_path, format);
    }
    if (all->parsed()) {
        int worst = 0;
        for (const auto &e : ftv::scenario_registry()) {
            if (!section_filter.empty() && e.section != section_filter) {
                continue;
            }
            if (!include_slow && e.name == "vd-groups") {
                continue;
            }
            int rc = run_one(e.name, opt, "", "text");
            worst = std::max(worst, rc);
            std::cout << "\n";
        }
        return worst;
    }
    if (orders->parsed()) {
        for (size_t k = 1; k <= orders_k; k++) {
            auto o = ftv::clifford_mod_pauli_order(k);
            std::cout << "k=" << k << ": |S_k|=" << ftv::factorial(k).to_string()
                      << " |GL(k,2)|=" << ftv::gl2_order(k).to_string()
                      << " |Clifford/Pauli|=" << o.to_string() << " (~" << o.to_sci_string() << ")\n";
        }
        return 0;
    }
    return 2;
}
