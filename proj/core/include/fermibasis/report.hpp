#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermibasis/basis.hpp"
#include "fermibasis/lattice.hpp"

namespace fermibasis::harness {

struct SuiteConfig {
    std::string suite = "all";  // fock | lr | basis | lattice | all
    int n_cap = 3;              // chain length cap (<= 4)
    int series_order = 3;       // z/u truncation order (<= 4)
    int weight_cap = 4;         // h*-monomial weight cap (<= 5)
    int window_cap = 6;         // CAR window cap
    std::string y_value = "3/7";
    std::uint64_t seed = 1;
    bool heavy = false;  // enables n=4 rank and weight-5 rank
    std::string output_path;
};

struct VerdictRecord {
    std::string id;
    std::string status;  // pass | fail | skip
    std::string details;
    std::string repro;
};

/// Runs every registered check of the configured suite. Deterministic
/// given (config, seed); cases appear in registration order.
std::vector<VerdictRecord> run_suite(const SuiteConfig& cfg);

bool all_passed(const std::vector<VerdictRecord>& records);

/// Paper-anchored case ids that `verify all` must emit (coverage manifest).
const std::vector<std::string>& required_case_ids();

/// Versioned JSON form of a finished run.
std::string report_json(const SuiteConfig& cfg, const std::vector<VerdictRecord>& records);

/// Writes via a temp file + rename so readers never observe a partial report.
void write_report_atomic(const std::string& path, const std::string& payload);

/// Renderings for the expand subcommands; parse of the text form round-trips.
std::string expand_bj(int n, const lr::SubsetIndex& J, bool as_json);
std::string expand_family(int n, bool as_json);
std::string expand_hstar_monomial(const std::vector<int>& powers, bool as_json);

/// Parses "p/q" or "p" into an exact rational; throws std::invalid_argument.
exactmath::GaussianRational parse_rational(const std::string& text);

}  // namespace fermibasis::harness
