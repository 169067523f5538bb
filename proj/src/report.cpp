#include "cvq/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cvq {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
        case CheckStatus::Error: return "error";
        case CheckStatus::Informational: return "informational";
    }
    return "?";
}

int exit_code(const Report& report) {
    bool bad = std::any_of(report.checks.begin(), report.checks.end(), [](const CheckRecord& c) {
        return c.status == CheckStatus::Fail || c.status == CheckStatus::Error;
    });
    return bad ? 1 : 0;
}

Json tolerances_json(const Tolerances& tol) {
    return Json{{"hermitian", tol.hermitian},
                {"unitary", tol.unitary},
                {"reconstruction", tol.reconstruction},
                {"degeneracy_gap", tol.degeneracy_gap},
                {"projective", tol.projective},
                {"distinct_states", tol.distinct_states},
                {"overlap", tol.overlap},
                {"orthogonality", tol.orthogonality},
                {"eigenvalue", tol.eigenvalue},
                {"conjugation", tol.conjugation},
                {"expansion", tol.expansion},
                {"commutant", tol.commutant},
                {"singlet", tol.singlet}};
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const StateVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

Json matrix_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json permutation_json(const Permutation& p) { return Json(p.images()); }

namespace {

constexpr std::array kAllStatuses{CheckStatus::Pass, CheckStatus::Fail, CheckStatus::NotApplicable,
                                  CheckStatus::Error, CheckStatus::Informational};

std::size_t count(const Report& r, CheckStatus s) {
    return static_cast<std::size_t>(
        std::count_if(r.checks.begin(), r.checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

}  // namespace

Json to_json(const Report& report, bool timing) {
    Json out;
    out["scenario"] = report.scenario;
    out["description"] = report.description;
    Json settings{{"tolerance_scale", report.settings.tolerance_scale},
                  {"exhaustive_relatedness", report.settings.exhaustive_relatedness}};
    settings["max_n"] = report.settings.max_n ? Json(*report.settings.max_n) : Json(nullptr);
    out["settings"] = std::move(settings);
    out["tolerances"] = tolerances_json(report.tolerances);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json rec{{"name", c.name}, {"kind", c.kind}, {"status", to_string(c.status)}, {"message", c.message}};
        rec["details"] = c.details;
        if (timing) rec["seconds"] = c.seconds;
        checks.push_back(std::move(rec));
    }
    out["checks"] = std::move(checks);
    Json summary;
    for (auto s : kAllStatuses) summary[to_string(s)] = count(report, s);
    summary["total"] = report.checks.size();
    out["summary"] = std::move(summary);
    out["exit_code"] = exit_code(report);
    return out;
}

std::string summary_text(const Report& report) {
    std::ostringstream os;
    os << "scenario " << report.scenario << "\n";
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks) {
        std::string status = to_string(c.status);
        os << "  " << status << std::string(15 - status.size(), ' ') << c.name
           << std::string(width - c.name.size() + 2, ' ') << c.message << "\n";
    }
    os << "summary:";
    for (auto s : kAllStatuses) os << " " << to_string(s) << "=" << count(report, s);
    os << "\nexit " << exit_code(report) << "\n";
    return os.str();
}

}  // namespace cvq
