// Command-line front end: run scenarios, list and emit built-ins, self-test.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cvq/builtins.hpp"
#include "cvq/runner.hpp"
#include "cvq/scenario.hpp"

namespace {

constexpr int kUsageError = 2;

cvq::Scenario resolve(const std::string& what) {
    if (std::filesystem::is_regular_file(what)) return cvq::load_scenario_file(what);
    if (auto text = cvq::builtin_scenario(what)) return cvq::parse_scenario(*text);
    throw cvq::ScenarioError("", "no scenario file or built-in named '" + what + "'");
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

std::string report_text(const cvq::Report& r, bool timing) { return cvq::to_json(r, timing).dump(2) + "\n"; }

int selftest(const cvq::RunOptions& options) {
    int failures = 0;
    for (const auto& name : cvq::builtin_names()) {
        auto text = *cvq::builtin_scenario(name);
        auto scenario = cvq::parse_scenario(text);
        auto first = cvq::run_scenario(scenario, options);
        auto second = cvq::run_scenario(cvq::parse_scenario(text), options);
        const bool deterministic = report_text(first, false) == report_text(second, false);
        const bool passed = cvq::exit_code(first) == 0;
        const bool ok = deterministic && passed;
        failures += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << first.checks.size() << " checks"
                  << (passed ? "" : ", failing checks") << (deterministic ? "" : ", non-deterministic report")
                  << ")\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cvq: finite conceptual-variable engine"};
    app.require_subcommand(1);

    cvq::RunOptions options;
    std::string scenario_arg, report_path, summary_path, emit_name, emit_output;
    bool timing = false, json_stdout = false;
    std::optional<std::size_t> max_n;

    auto* run = app.add_subcommand("run", "Run a scenario file or built-in and report");
    run->add_option("scenario", scenario_arg, "Scenario file path or built-in name")->required();
    run->add_option("--report", report_path, "Write the JSON report here");
    run->add_option("--summary", summary_path, "Write the text summary here");
    run->add_option("--tolerance-scale", options.tolerance_scale, "Multiply every tolerance")
        ->check(CLI::PositiveNumber);
    run->add_flag("--exhaustive-relatedness", options.exhaustive_relatedness,
                  "Search relating elements over the full symmetric group (at most 8 points)");
    run->add_option("--max-n", max_n, "Largest space size for a2-falsify")->check(CLI::Range(1, 6));
    run->add_flag("--timing", timing, "Include wall-clock timings in the JSON report");
    run->add_flag("--json", json_stdout, "Print the JSON report instead of the summary");

    auto* list = app.add_subcommand("list", "List built-in scenarios");
    auto* emit = app.add_subcommand("emit", "Print a built-in scenario");
    emit->add_option("name", emit_name, "Built-in name")->required();
    emit->add_option("-o,--output", emit_output, "Write to a file instead of stdout");

    auto* self = app.add_subcommand("selftest", "Run every built-in twice and compare reports");
    self->add_option("--tolerance-scale", options.tolerance_scale, "Multiply every tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (list->parsed()) {
        for (const auto& name : cvq::builtin_names()) std::cout << name << "\n";
        return 0;
    }
    if (emit->parsed()) {
        auto text = cvq::builtin_scenario(emit_name);
        if (!text) {
            std::cerr << "error: unknown built-in '" << emit_name << "'\n";
            return kUsageError;
        }
        if (emit_output.empty()) {
            std::cout << *text;
        } else if (!write_file(emit_output, *text)) {
            std::cerr << "error: cannot write " << emit_output << "\n";
            return kUsageError;
        }
        return 0;
    }
    if (self->parsed()) return selftest(options);

    options.max_n = max_n;
    cvq::Scenario scenario;
    try {
        scenario = resolve(scenario_arg);
    } catch (const cvq::ScenarioError& e) {
        std::cerr << "error: " << scenario_arg << ": " << e.what() << "\n";
        return kUsageError;
    }
    auto report = cvq::run_scenario(scenario, options);
    const std::string json = report_text(report, timing);
    const std::string summary = cvq::summary_text(report);
    std::cout << (json_stdout ? json : summary);
    if (!report_path.empty() && !write_file(report_path, json)) {
        std::cerr << "error: cannot write " << report_path << "\n";
        return kUsageError;
    }
    if (!summary_path.empty() && !write_file(summary_path, summary)) {
        std::cerr << "error: cannot write " << summary_path << "\n";
        return kUsageError;
    }
    return cvq::exit_code(report);
}
