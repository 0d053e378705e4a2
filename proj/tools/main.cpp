#include <CLI11.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fermibasis/report.hpp"

namespace {

using fermibasis::harness::SuiteConfig;
using fermibasis::harness::VerdictRecord;

std::string default_output_path(const std::string& suite) {
    const char* dir = std::getenv("FERMIBASIS_OUTPUT_DIR");
    std::string base = dir && *dir ? std::string(dir) : ".";
    return base + "/fermibasis-" + suite + ".json";
}

fermibasis::lr::SubsetIndex parse_subset(const std::string& csv) {
    std::vector<int> xs;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) xs.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    std::sort(xs.begin(), xs.end(), std::greater<>());
    return fermibasis::lr::SubsetIndex(xs);
}

int run_verify(const SuiteConfig& cfg) {
    auto records = fermibasis::harness::run_suite(cfg);
    for (const auto& r : records)
        std::cout << (r.status == "pass" ? "[PASS] " : r.status == "skip" ? "[SKIP] " : "[FAIL] ")
                  << r.id << ": " << r.details << "\n";
    std::string path = cfg.output_path.empty() ? default_output_path(cfg.suite) : cfg.output_path;
    fermibasis::harness::write_report_atomic(path, fermibasis::harness::report_json(cfg, records));
    std::cout << "report: " << path << "\n";
    return fermibasis::harness::all_passed(records) ? 0 : 1;
}

int run_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    nlohmann::json j = nlohmann::json::parse(in);
    std::cout << "suite: " << j.at("suite").get<std::string>() << "\n";
    for (const auto& c : j.at("cases"))
        std::cout << "  " << c.at("status").get<std::string>() << "  " << c.at("id").get<std::string>()
                  << "\n";
    auto s = j.at("summary");
    std::cout << "pass " << s.at("pass") << ", fail " << s.at("fail") << ", skip " << s.at("skip")
              << "\n";
    return s.at("fail").get<int>() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for a fermionic basis of quasi-local spin-chain operators"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
    verify->add_option("suite", cfg.suite, "fock | lr | basis | lattice | all")->required();
    verify->add_option("--n", cfg.n_cap, "chain length cap (1..4)");
    verify->add_option("--order", cfg.series_order, "series truncation order (1..4)");
    verify->add_option("--weight", cfg.weight_cap, "h*-monomial weight cap (1..5)");
    verify->add_option("--window", cfg.window_cap, "CAR window cap (1..8)");
    verify->add_option("--y", cfg.y_value, "rational y specialization, e.g. 3/7");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_flag("--heavy", cfg.heavy, "enable the n=4 rank and weight-5 rank runs");
    verify->add_option("--out", cfg.output_path, "report path (default $FERMIBASIS_OUTPUT_DIR)");

    auto* expand = app.add_subcommand("expand", "print an object in the canonical grammar");
    int en = 2;
    std::string ej, eformat = "text", epowers = "1";
    auto* ebj = expand->add_subcommand("bj", "PBW expansion of B_J");
    ebj->add_option("--n", en, "chain length")->required();
    ebj->add_option("--j", ej, "J as a comma list, e.g. 2,4 (empty set: omit)");
    ebj->add_option("--format", eformat, "text | json");
    auto* efam = expand->add_subcommand("family", "all 4^n basis family elements");
    efam->add_option("--n", en, "chain length")->required();
    efam->add_option("--format", eformat, "text | json");
    auto* ehm = expand->add_subcommand("hstar-monomial", "matrix dump of (h*_{p1} h*_{p2} ...)(vacuum)");
    ehm->add_option("--powers", epowers, "comma list of h* indices, e.g. 1,2");
    ehm->add_option("--format", eformat, "text | json");
    expand->require_subcommand(1);

    std::string report_path;
    auto* report = app.add_subcommand("report", "summarize an existing JSON report");
    report->add_option("--in", report_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(cfg);
        if (report->parsed()) return run_report(report_path);
        if (expand->parsed()) {
            bool as_json = eformat == "json";
            if (ebj->parsed())
                std::cout << fermibasis::harness::expand_bj(en, parse_subset(ej), as_json) << "\n";
            else if (efam->parsed())
                std::cout << fermibasis::harness::expand_family(en, as_json) << "\n";
            else if (ehm->parsed()) {
                std::vector<int> powers;
                for (const auto& part : parse_subset(epowers).elements()) powers.push_back(part);
                std::cout << fermibasis::harness::expand_hstar_monomial(powers, as_json) << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
