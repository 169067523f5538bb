#pragma once

// Verification reports: one record per requested check, serialised as JSON
// with a plain-text summary alongside.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cvq/group.hpp"
#include "cvq/hilbert.hpp"
#include "cvq/tolerances.hpp"

namespace cvq {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, NotApplicable, Error, Informational };
std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    std::string kind;
    CheckStatus status = CheckStatus::Error;
    std::string message;
    Json details = Json::object();
    double seconds = 0.0;
};

struct ReportSettings {
    double tolerance_scale = 1.0;
    bool exhaustive_relatedness = false;
    std::optional<std::size_t> max_n;
};

struct Report {
    std::string scenario;
    std::string description;
    ReportSettings settings;
    Tolerances tolerances;
    std::vector<CheckRecord> checks;
};

/// 0 when no check failed or errored, otherwise 1.
int exit_code(const Report& report);

/// Wall-clock timings are included only when `timing` is set, so the default
/// output is byte-stable across runs.
Json to_json(const Report& report, bool timing = false);
std::string summary_text(const Report& report);

Json tolerances_json(const Tolerances& tol);
Json complex_json(Complex z);
Json vector_json(const StateVector& v);
Json matrix_json(const ComplexMatrix& m);
Json permutation_json(const Permutation& p);

}  // namespace cvq
