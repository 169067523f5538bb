#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(CVQ_BINARY) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST(Cli, ListAndEmit) {
    auto list = run("list");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("qubit"), std::string::npos);
    EXPECT_NE(list.out.find("a2-smoke"), std::string::npos);
    auto emit = run("emit qubit");
    EXPECT_EQ(emit.code, 0);
    EXPECT_NE(emit.out.find("\"name\": \"qubit\""), std::string::npos);
    EXPECT_EQ(run("emit nope").code, 2);
}

TEST(Cli, RunPassingBuiltinExitsZero) {
    auto r = run("run qubit --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"exit_code\": 0"), std::string::npos);
    EXPECT_EQ(r.out.find("seconds"), std::string::npos);
    EXPECT_NE(run("run qubit --json --timing").out.find("seconds"), std::string::npos);
}

TEST(Cli, FailingCheckExitsOne) {
    auto path = temp_file("cvq_failing.json", R"({
      "name": "failing",
      "space": {"id": "Z4", "size": 4},
      "variables": [{"name": "parity", "assignment": [0, 1, 0, 1], "values": ["even", "odd"]}],
      "groups": [{"name": "swap", "generators": [[1, 0, 2, 3]]}],
      "checks": [{"kind": "permissibility", "variable": "parity", "group": "swap", "expect": true}]
    })");
    EXPECT_EQ(run("run " + path.string()).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("run /nonexistent/scenario.json").code, 2);
    EXPECT_EQ(run("run qubit --max-n 9").code, 2);
    EXPECT_EQ(run("run qubit --no-such-flag").code, 2);
    auto bad = temp_file("cvq_bad.json", "{ not json");
    EXPECT_EQ(run("run " + bad.string()).code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
    for (const char* name : {"qubit", "singlet", "a2-smoke"}) {
        auto a = run(std::string("run ") + name + " --json");
        auto b = run(std::string("run ") + name + " --json");
        EXPECT_EQ(a.out, b.out) << name;
    }
    EXPECT_EQ(run("selftest").code, 0);
}
