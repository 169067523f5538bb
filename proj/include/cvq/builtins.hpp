#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cvq {

/// Names listed by `cvq list`. Any "cyclic-<N>" with N >= 2 is also accepted.
const std::vector<std::string>& builtin_names();

/// Scenario text for a built-in, or nullopt for an unknown name.
std::optional<std::string> builtin_scenario(const std::string& name);

}  // namespace cvq
