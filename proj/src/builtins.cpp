#include "cvq/builtins.hpp"

#include <charconv>

#include "cvq/report.hpp"

namespace cvq {

namespace {

constexpr const char* kQubit = R"({
  "name": "qubit",
  "description": "Two-valued spin component with the swap group and the coherent states U(g)|t> = exp(-i t)|g t>.",
  "space": {"id": "spin-values", "labels": ["+1", "-1"]},
  "variables": [
    {"name": "theta", "identity": true}
  ],
  "family": {"generators": ["theta"], "inaccessible_total": false},
  "groups": [
    {"name": "K", "generators": [[1, 0]]}
  ],
  "representations": [
    {"name": "U", "group": "K", "kind": "qubit"}
  ],
  "checks": [
    {"name": "theta-permissible", "kind": "permissibility", "variable": "theta", "group": "K"},
    {"name": "theta-induced-group", "kind": "induced-group", "variable": "theta", "group": "K"},
    {"name": "theorem1", "kind": "theorem1-hypotheses", "variable": "theta", "representation": "U", "base": [1, 0]},
    {"name": "theorem2", "kind": "theorem2", "variable": "theta", "representation": "U", "base": [1, 0]},
    {"name": "x-plus-in-z", "kind": "eq1-expansion",
     "target": {"name": "x", "spin": [1, 0, 0]},
     "basis": {"variable": "theta", "representation": "U", "base": [1, 0]},
     "target_eigenvalue": 1,
     "expect": [0.7071067811865476, 0.7071067811865476]},
    {"name": "x-minus-in-z", "kind": "eq1-expansion",
     "target": {"name": "x", "spin": [1, 0, 0]},
     "basis": {"variable": "theta", "representation": "U", "base": [1, 0]},
     "target_eigenvalue": -1,
     "expect": [-0.7071067811865476, 0.7071067811865476]},
    {"name": "z-in-z", "kind": "eq1-expansion",
     "target": {"name": "z", "spin": [0, 0, 1]},
     "basis": {"variable": "theta", "representation": "U", "base": [1, 0]},
     "target_eigenvalue": 1,
     "expect": [0, 1]}
  ]
})";

constexpr const char* kSinglet = R"({
  "name": "singlet",
  "description": "Two spin-1/2 particles in the singlet state and the operator for delta = sum of component products.",
  "space": {"id": "spin-pairs", "labels": ["++", "+-", "-+", "--"]},
  "product": {"first": [0, 0, 1, 1], "second": [0, 1, 0, 1]},
  "variables": [
    {"name": "theta_z", "assignment": [0, 0, 1, 1], "values": ["+1", "-1"]},
    {"name": "eta_z", "assignment": [0, 1, 0, 1], "values": ["+1", "-1"]}
  ],
  "family": {"generators": ["theta_z", "eta_z"]},
  "groups": [
    {"name": "exchange", "generators": [[0, 2, 1, 3]]}
  ],
  "checks": [
    {"name": "singlet-delta", "kind": "singlet-delta", "directions": 100, "seed": 1, "literature_triplet_value": -1},
    {"name": "theta-permissible-under-exchange", "kind": "permissibility", "variable": "theta_z", "group": "exchange",
     "expect": false}
  ]
})";

constexpr const char* kParityZ4 = R"({
  "name": "parity-z4",
  "description": "Permissibility on four points: parity under rotations, and under a single transposition.",
  "space": {"id": "Z4", "size": 4},
  "variables": [
    {"name": "parity", "assignment": [0, 1, 0, 1], "values": ["even", "odd"]},
    {"name": "parity_shifted", "assignment": [1, 0, 1, 0], "values": ["even", "odd"]},
    {"name": "halves", "blocks": [[0, 1], [2, 3]]},
    {"name": "cross", "blocks": [[0, 3], [1, 2]]}
  ],
  "family": {"generators": ["parity", "halves", "cross"]},
  "groups": [
    {"name": "rotations", "kind": "cyclic"},
    {"name": "swap01", "generators": [[1, 0, 2, 3]]},
    {"name": "trivial", "kind": "trivial"}
  ],
  "checks": [
    {"name": "parity-under-rotations", "kind": "permissibility", "variable": "parity", "group": "rotations"},
    {"name": "parity-under-swap01", "kind": "permissibility", "variable": "parity", "group": "swap01", "expect": false},
    {"name": "halves-under-trivial", "kind": "permissibility", "variable": "halves", "group": "trivial"},
    {"name": "parity-induced", "kind": "induced-group", "variable": "parity", "group": "rotations"},
    {"name": "halves-induced-trivial", "kind": "induced-group", "variable": "halves", "group": "trivial"},
    {"name": "a1-parity", "kind": "a1-search", "theta": "parity", "eta": "parity_shifted", "group": "rotations",
     "all_shapes": true, "expect": "pass"},
    {"name": "a1-trivial-group", "kind": "a1-search", "theta": "parity", "eta": "parity", "group": "trivial",
     "expect": "not-applicable"},
    {"name": "a1-not-permissible", "kind": "a1-search", "theta": "halves", "eta": "cross", "group": "rotations",
     "expect": "not-applicable"},
    {"name": "proof-group-parity", "kind": "proof-group-construction", "theta": "parity", "lambda": "parity_shifted",
     "xi": "halves", "group": "rotations"}
  ]
})";

constexpr const char* kA2Smoke = R"({
  "name": "a2-smoke",
  "description": "Classification of small families of thoughts on six points and a brute-force sweep over small spaces.",
  "space": {"id": "Z6", "size": 6},
  "variables": [
    {"name": "h0", "blocks": [[0, 1, 2], [3, 4, 5]]},
    {"name": "h1", "blocks": [[1, 2, 3], [4, 5, 0]]},
    {"name": "h2", "blocks": [[2, 3, 4], [5, 0, 1]]},
    {"name": "parity", "assignment": [0, 1, 0, 1, 0, 1], "values": ["even", "odd"]},
    {"name": "parity_swapped", "assignment": [1, 0, 1, 0, 1, 0], "values": ["even", "odd"]},
    {"name": "h0_swapped23", "blocks": [[0, 1, 3], [2, 4, 5]]}
  ],
  "family": {"generators": ["h0", "h1", "h2", "parity", "h0_swapped23"]},
  "groups": [
    {"name": "rotations", "kind": "cyclic"},
    {"name": "trivial", "kind": "trivial"},
    {"name": "swap23", "generators": [[0, 1, 3, 2, 4, 5]]}
  ],
  "checks": [
    {"name": "halves-under-rotations", "kind": "a2-classify", "thoughts": ["h0", "h1", "h2"], "group": "rotations",
     "expect": "all-related"},
    {"name": "incompatible-under-trivial", "kind": "a2-classify", "thoughts": ["h0", "h1", "parity"],
     "group": "trivial", "expect": "all-essentially-different"},
    {"name": "mixed-without-permissibility", "kind": "a2-classify", "thoughts": ["h0", "h0_swapped23", "parity"],
     "group": "swap23", "expect": "mixed"},
    {"name": "a1-parity", "kind": "a1-search", "theta": "parity", "eta": "parity_swapped", "group": "rotations",
     "all_shapes": true, "expect": "pass"},
    {"name": "a1-halves-not-permissible", "kind": "a1-search", "theta": "h0", "eta": "h1", "group": "rotations",
     "expect": "not-applicable"},
    {"name": "proof-group-parity", "kind": "proof-group-construction", "theta": "parity", "lambda": "parity_swapped",
     "xi": "h0"},
    {"name": "proof-group-essentially-different", "kind": "proof-group-construction", "theta": "parity",
     "lambda": "h0", "xi": "h1", "expect": false, "informational": true},
    {"name": "falsifier", "kind": "a2-falsify", "max_n": 4}
  ]
})";

constexpr const char* kRotationSignProbe = R"({
  "name": "rotation-sign-probe",
  "description": "Sign of the cosine on eight equally spaced angles, tested against rotation and reflection groups.",
  "space": {"id": "angles", "labels": ["22.5", "67.5", "112.5", "157.5", "202.5", "247.5", "292.5", "337.5"]},
  "variables": [
    {"name": "sign_cos", "assignment": [0, 0, 1, 1, 1, 1, 0, 0], "values": ["+1", "-1"]}
  ],
  "groups": [
    {"name": "rotations", "kind": "cyclic"},
    {"name": "half_turn", "generators": [[4, 5, 6, 7, 0, 1, 2, 3]]},
    {"name": "reflection_x", "generators": [[7, 6, 5, 4, 3, 2, 1, 0]]}
  ],
  "checks": [
    {"name": "full-rotations", "kind": "permissibility", "variable": "sign_cos", "group": "rotations",
     "informational": true},
    {"name": "half-turn", "kind": "permissibility", "variable": "sign_cos", "group": "half_turn",
     "informational": true},
    {"name": "reflection", "kind": "permissibility", "variable": "sign_cos", "group": "reflection_x",
     "informational": true},
    {"name": "half-turn-induced", "kind": "induced-group", "variable": "sign_cos", "group": "half_turn",
     "informational": true}
  ]
})";

std::string cyclic(std::size_t n) {
    Json doc;
    doc["name"] = "cyclic-" + std::to_string(n);
    doc["description"] = "Position on Z_" + std::to_string(n) +
                         " with the shift group represented through the discrete Fourier transform.";
    doc["space"] = Json{{"id", "Z" + std::to_string(n)}, {"size", n}};
    std::vector<std::size_t> parity(n);
    for (std::size_t j = 0; j < n; ++j) parity[j] = j % 2;
    Json variables = Json::array({Json{{"name", "position"}, {"identity", true}}});
    const bool has_parity = n % 2 == 0;
    if (has_parity) {
        variables.push_back(Json{{"name", "parity"}, {"assignment", parity}, {"values", {"0", "1"}}});
    }
    doc["variables"] = variables;
    Json gens = Json::array({"position"});
    if (has_parity) gens.push_back("parity");
    doc["family"] = Json{{"generators", gens}, {"inaccessible_total", false}};
    doc["groups"] = Json::array({Json{{"name", "K"}, {"kind", "cyclic"}}});
    doc["representations"] =
        Json::array({Json{{"name", "T"}, {"group", "K"}, {"kind", "cyclic-dft"}, {"n", n}}});
    std::vector<double> base(n, 0.0);
    base[0] = 1.0;
    Json checks = Json::array();
    checks.push_back(Json{{"name", "position-permissible"}, {"kind", "permissibility"}, {"variable", "position"},
                          {"group", "K"}});
    checks.push_back(Json{{"name", "position-induced-group"}, {"kind", "induced-group"}, {"variable", "position"},
                          {"group", "K"}});
    checks.push_back(Json{{"name", "theorem1-position"}, {"kind", "theorem1-hypotheses"}, {"variable", "position"},
                          {"representation", "T"}, {"base", base}});
    if (has_parity) {
        checks.push_back(Json{{"name", "theorem1-parity"}, {"kind", "theorem1-hypotheses"}, {"variable", "parity"},
                              {"representation", "T"}, {"base", base}, {"refinement", "position"}});
    }
    checks.push_back(Json{{"name", "theorem2-position"}, {"kind", "theorem2"}, {"variable", "position"},
                          {"representation", "T"}, {"base", base}});
    if (has_parity) {
        checks.push_back(Json{{"name", "theorem2-parity"}, {"kind", "theorem2"}, {"variable", "parity"},
                              {"representation", "T"}, {"base", base}});
    }
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"qubit",   "cyclic-4", "singlet", "parity-z4",
                                                "a2-smoke", "rotation-sign-probe"};
    return names;
}

std::optional<std::string> builtin_scenario(const std::string& name) {
    auto canonical = [](const char* text) { return Json::parse(text).dump(2) + "\n"; };
    if (name == "qubit") return canonical(kQubit);
    if (name == "singlet") return canonical(kSinglet);
    if (name == "parity-z4") return canonical(kParityZ4);
    if (name == "a2-smoke") return canonical(kA2Smoke);
    if (name == "rotation-sign-probe") return canonical(kRotationSignProbe);
    const std::string prefix = "cyclic-";
    if (name.rfind(prefix, 0) == 0) {
        const char* first = name.data() + prefix.size();
        const char* last = name.data() + name.size();
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec == std::errc() && ptr == last && first != last && n >= 2 && n <= 64) return cyclic(n);
    }
    return std::nullopt;
}

}  // namespace cvq
