#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vacrad {

struct CheckResult {
    std::string id;           // "C1" ... "C9"; informational lines carry an "i" suffix
    std::string title;
    bool passed = false;
    bool informational = false;  // never affects the suite outcome
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::filesystem::path artifact_dir;  // CSV curves land here; empty: a fixed temp subdirectory
};

CheckResult check_halfspace_oracle();
CheckResult check_free_space_limit();
CheckResult check_cavity_prescription();
CheckResult check_cavity_closed_forms();
CheckResult check_plate_removal();
std::vector<CheckResult> check_decay_oracle();
CheckResult check_static_contact();
CheckResult check_special_functions();
std::vector<CheckResult> check_figure_shapes(const std::filesystem::path& dir);

// All acceptance checks in order; the last C9 line also enforces the total runtime bound.
std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);
std::string format_result(const CheckResult& r);

}  // namespace vacrad
