#pragma once

// Scenario files: a point space, named variables, groups and representations,
// and the ordered list of checks to run against them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cvq/action.hpp"
#include "cvq/error.hpp"
#include "cvq/group.hpp"
#include "cvq/report.hpp"
#include "cvq/representation.hpp"
#include "cvq/spaces.hpp"
#include "cvq/tolerances.hpp"

namespace cvq {

/// A malformed or inconsistent scenario. `location` is a JSON pointer into the
/// document, or "line L, column C" for syntax errors.
class ScenarioError : public Error {
public:
    ScenarioError(std::string location, const std::string& message);
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

struct NamedGroup {
    std::string name;
    GroupRef group;
};

struct NamedRep {
    std::string name;
    std::string kind;
    std::string group;
    UnitaryRep rep;
};

struct CheckSpec {
    std::string name;
    std::string kind;
    Json params;           // the check's JSON object, references already resolved
    std::string location;  // JSON pointer of the check
};

struct Scenario {
    std::string name;
    std::string description;
    SpaceRef space;
    std::optional<ProductStructure> product;
    std::vector<ConceptualVariable> variables;
    std::vector<NamedGroup> groups;
    std::vector<NamedRep> representations;
    std::vector<std::string> family;  // accessible generators; all variables when absent
    bool inaccessible_total = true;
    Tolerances tolerances;
    std::vector<CheckSpec> checks;

    const ConceptualVariable& variable(const std::string& name) const;
    const GroupRef& group(const std::string& name) const;
    const NamedRep& representation(const std::string& name) const;
    VariableFamily accessible_family() const;
};

/// The check kinds understood by the runner, in documentation order.
const std::vector<std::string>& check_kinds();

/// Parse and validate. Throws ScenarioError.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

}  // namespace cvq
