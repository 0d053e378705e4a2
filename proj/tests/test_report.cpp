#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fermibasis/fock_text.hpp"
#include "fermibasis/report.hpp"

using namespace fermibasis;
using harness::SuiteConfig;

namespace {

SuiteConfig tiny(const std::string& suite) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n_cap = 1;
    cfg.series_order = 1;
    cfg.weight_cap = 1;
    cfg.window_cap = 2;
    cfg.seed = 5;
    return cfg;
}

}  // namespace

TEST_CASE("rational argument parsing") {
    CHECK(harness::parse_rational("3/7") == exactmath::GaussianRational(3, 7ul));
    CHECK(harness::parse_rational("-2") == exactmath::GaussianRational(-2));
    CHECK_THROWS_AS(harness::parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(harness::parse_rational(""), std::invalid_argument);
}

TEST_CASE("run_suite validates its configuration") {
    SuiteConfig bad = tiny("nope");
    CHECK_THROWS_AS(harness::run_suite(bad), std::invalid_argument);
    SuiteConfig caps = tiny("fock");
    caps.n_cap = 9;
    CHECK_THROWS_AS(harness::run_suite(caps), std::invalid_argument);
    SuiteConfig y = tiny("fock");
    y.y_value = "pi";
    CHECK_THROWS_AS(harness::run_suite(y), std::invalid_argument);
}

TEST_CASE("smallest-caps run of every suite passes") {
    for (const std::string suite : {"fock", "lr", "basis", "lattice"}) {
        auto records = harness::run_suite(tiny(suite));
        CHECK(!records.empty());
        CHECK(harness::all_passed(records));
    }
}

TEST_CASE("verify all emits every paper-anchored case id") {
    auto records = harness::run_suite(tiny("all"));
    CHECK(harness::all_passed(records));
    for (const auto& want : harness::required_case_ids()) {
        bool found = false;
        for (const auto& r : records)
            if (r.id == want) found = true;
        CHECK_MESSAGE(found, "missing required case ", want);
    }
}

TEST_CASE("reports are reproducible, atomic, and well-formed") {
    SuiteConfig cfg = tiny("lr");
    auto a = harness::run_suite(cfg);
    auto b = harness::run_suite(cfg);
    std::string ja = harness::report_json(cfg, a);
    std::string jb = harness::report_json(cfg, b);
    CHECK(ja == jb);  // bit-for-bit given (config, seed)
    CHECK(ja.find("\"schema_version\": 1") != std::string::npos);
    CHECK(ja.find("\"repro\"") != std::string::npos);

    auto dir = std::filesystem::temp_directory_path() / "fermibasis_test_reports";
    std::filesystem::remove_all(dir);
    std::string path = (dir / "r.json").string();
    harness::write_report_atomic(path, ja);
    CHECK(std::filesystem::exists(path));
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == ja);
    std::filesystem::remove_all(dir);
}

TEST_CASE("expand output round-trips through the grammar") {
    std::string text = harness::expand_bj(4, lr::SubsetIndex{4, 3}, false);
    CHECK(fock::parse(text) == basis::build_BJ(4, lr::SubsetIndex{4, 3}));

    std::string jfam = harness::expand_family(1, true);
    CHECK(jfam.find("\"elements\"") != std::string::npos);
    // 4 records for n=1
    std::size_t count = 0, pos = 0;
    while ((pos = jfam.find("\"pbw\"", pos)) != std::string::npos) {
        ++count;
        pos += 5;
    }
    CHECK(count == 4);

    std::string dump = harness::expand_hstar_monomial({1}, true);
    CHECK(dump.find("matrix_row_major") != std::string::npos);
    std::string dump_empty = harness::expand_hstar_monomial({}, false);
    CHECK(dump_empty.find("window") != std::string::npos);
}
