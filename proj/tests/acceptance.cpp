// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cvq/action.hpp"
#include "cvq/builtins.hpp"
#include "cvq/harness.hpp"
#include "cvq/operator.hpp"
#include "cvq/runner.hpp"
#include "cvq/scenario.hpp"
#include "cvq/spin.hpp"
#include "oracles.hpp"

using namespace cvq;
using Clock = std::chrono::steady_clock;

namespace {

// Frozen from the first full sweep at max_n = 6.
constexpr std::size_t kFalsifierInstances = 32211;

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << what;
        ok = ok && cond;
    }
};

Report run_builtin(const std::string& name) { return run_scenario(parse_scenario(*builtin_scenario(name))); }

void qubit_pipeline(Outcome& o) {
    auto rep = qubit_rep();
    for (const auto& u : rep.matrices) {
        o.require(unitarity_residual(u) <= 1e-10, "U(g) not unitary");
        o.require(max_abs(u * u - ComplexMatrix::Identity(2, 2)) <= 1e-10, "U(g)^2 != I");
    }
    auto family = CoherentFamily::make(rep, StateVector::Unit(2, 0));
    o.require(check_coherent_injectivity(family).injective, "coherent family not injective");
    ConceptualVariable theta("theta", rep.group->space(), {"+1", "-1"}, {0, 1});
    auto bundle = build_operator(theta, family, 0);
    o.require(bundle.nondegenerate(), "operator degenerate");
    o.require(std::abs(bundle.spectral.eigenvalues(0) + 1.0) <= 1e-10 &&
                  std::abs(bundle.spectral.eigenvalues(1) - 1.0) <= 1e-10,
              "eigenvalues are not {-1, +1}");
}

void conjugation_law(Outcome& o) {
    auto one = [&](const UnitaryRep& rep, const ConceptualVariable& theta) {
        auto family = CoherentFamily::make(rep, StateVector::Unit(static_cast<Eigen::Index>(rep.dim), 0));
        for (std::size_t t = 0; t < rep.group->order(); ++t) {
            o.require(conjugation_check(rep, t, theta, family, 0).residual <= 1e-8, "conjugation residual too large");
        }
    };
    auto q = qubit_rep();
    one(q, ConceptualVariable("theta", q.group->space(), {"+1", "-1"}, {0, 1}));
    auto c = cyclic_dft_rep(4);
    one(c, ConceptualVariable("theta", c.group->space(), {"0", "1", "2", "3"}, {0, 1, 2, 3}));
    for (const char* name : {"qubit", "cyclic-4"}) {
        for (const auto& rec : run_builtin(name).checks) {
            if (rec.kind == "theorem2") o.require(rec.status == CheckStatus::Pass, std::string(name) + " theorem2 check");
        }
    }
}

void expansion(Outcome& o) {
    auto x = spin_component_bundle(SpinDirection(1, 0, 0), "x");
    auto z = spin_component_bundle(SpinDirection(0, 0, 1), "z");
    auto e = expand_in_basis(x, 1, z);
    const double r = 1.0 / std::sqrt(2.0);
    for (const auto& a : e.amplitudes) o.require(std::abs(a - r) <= 1e-10, "amplitude differs from 1/sqrt(2)");
    o.require(e.reconstruction_error <= 1e-10, "reconstruction error");
    o.require(std::abs(e.norm_sum - 1.0) <= 1e-10, "amplitudes not normalised");
}

void singlet_delta(Outcome& o) {
    auto d = delta_matrix();
    o.require((cvq::apply(d, singlet()) + 3.0 * singlet()).norm() <= 1e-10, "singlet eigen-equation");
    auto bundle = delta_operator();
    o.require(bundle.qa.size() == 2 && bundle.qa[0].multiplicity == 1 && bundle.qa[1].multiplicity == 3,
              "multiplicities are not {1, 3}");
    auto golden = oracle::jacobi_eigenvalues(oracle::spin_dot_spin());
    o.require(std::abs(bundle.qa.back().value - golden.back()) <= 1e-10, "degenerate eigenvalue differs from oracle");
    std::mt19937 rng(1);
    std::normal_distribution<double> normal;
    for (int i = 0; i < 100; ++i) {
        auto a = SpinDirection::normalized(normal(rng), normal(rng), normal(rng));
        o.require(anticorrelation_check(a).residual <= 1e-10, "anticorrelation residual");
    }
    o.note << "degenerate eigenvalue " << bundle.qa.back().value;
}

void permissibility_suite(Outcome& o) {
    std::mt19937 rng(5);
    std::size_t instances = 0;
    for (; instances < 1500; ++instances) {
        const std::size_t n = 1 + rng() % 8;
        auto s = PointSpace::range("s", n);
        auto ids = oracle::random_labelling(rng, n, 1 + rng() % n);
        std::vector<std::string> labels(*std::max_element(ids.begin(), ids.end()) + 1);
        for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = std::to_string(v);
        ConceptualVariable theta("t", s, labels, ids);
        std::vector<Permutation> gens;
        if (instances % 2) {
            // Permute points inside each block: always permissible.
            auto blocks = theta.blocks();
            std::vector<std::uint32_t> img(n);
            for (auto b : blocks) {
                auto dest = b;
                std::shuffle(dest.begin(), dest.end(), rng);
                for (std::size_t i = 0; i < b.size(); ++i) img[b[i]] = static_cast<std::uint32_t>(dest[i]);
            }
            gens.emplace_back(img);
        }
        gens.emplace_back(oracle::random_permutation(rng, n));
        if (rng() % 3 == 0) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gens.size()) - 1);
        auto K = make_group(s, gens);
        auto r = is_permissible(theta, *K);
        if (r.permissible) {
            auto induced = induced_group(theta, K);
            o.require(!induced.hom.verify().has_value(), "induced map is not a homomorphism");
            for (std::size_t k = 0; k < K->order(); ++k) {
                const auto& g = induced.group->element(induced.hom.map[k]);
                for (std::size_t p = 0; p < n; ++p) o.require(g(theta(p)) == theta(K->element(k)(p)), "induced action");
            }
            if (is_transitive(*K)) o.require(is_transitive(*induced.group), "transitivity not propagated");
        } else {
            const auto& w = *r.witness;
            o.require(K->contains(w.k) && theta(w.phi1) == theta(w.phi2) && theta(w.k(w.phi1)) != theta(w.k(w.phi2)),
                      "witness does not break well-definedness");
        }
    }
    o.note << instances << " instances";
}

void a1_instances(Outcome& o) {
    std::size_t pass = 0, na = 0;
    for (const auto& name : builtin_names()) {
        for (const auto& rec : run_builtin(name).checks) {
            if (rec.kind != "a1-search") continue;
            const std::string outcome = rec.details.contains("outcome") ? rec.details["outcome"].get<std::string>()
                                                                        : to_string(rec.status);
            o.require(outcome == "pass" || outcome == "not-applicable", name + "/" + rec.name + ": " + outcome);
            (outcome == "pass" ? pass : na)++;
        }
    }
    // Hypothesis violations on Z4 must never pass.
    auto s = PointSpace::range("Z4", 4);
    auto halves = ConceptualVariable::from_blocks("halves", s, {{0, 1}, {2, 3}});
    auto parity = ConceptualVariable::from_blocks("parity", s, {{0, 2}, {1, 3}});
    auto ends = ConceptualVariable::from_blocks("ends", s, {{0, 3}, {1, 2}});
    for (const auto& gens : std::vector<std::vector<Permutation>>{
             {Permutation({1, 2, 3, 0})},
             {Permutation({2, 3, 0, 1})},
             {Permutation({1, 2, 3, 0}), Permutation({0, 3, 2, 1})}}) {
        ThoughtScenario ts{s, {halves, parity, ends}, make_group(s, gens), {}};
        for (const auto& [t, e] : std::vector<std::pair<ConceptualVariable, ConceptualVariable>>{
                 {halves, ends}, {parity, halves}, {parity, parity}}) {
            auto r = theorem_a1_search(t, e, ts, true);
            o.require(r.status != SearchStatus::Fail, "a1 falsifier found");
            (r.status == SearchStatus::Pass ? pass : na)++;
        }
    }
    o.note << pass << " pass, " << na << " not-applicable";
}

void falsifier(Outcome& o) {
    auto first = exhaustive_falsifier(6);
    auto second = exhaustive_falsifier(6);
    o.require(first.complete && second.complete, "sweep incomplete");
    o.require(first.counterexamples == 0 && second.counterexamples == 0, "counterexample found");
    o.require(first.instances == kFalsifierInstances && second.instances == kFalsifierInstances,
              "instance count " + std::to_string(first.instances) + " differs from frozen value");
    o.note << first.instances << " instances, " << first.counterexamples << " counterexamples";
}

void determinism(Outcome& o) {
    for (const auto& name : builtin_names()) {
        o.require(to_json(run_builtin(name)).dump(2) == to_json(run_builtin(name)).dump(2), name + " differs");
    }
    o.note << builtin_names().size() << " built-ins";
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double limit_seconds;
        std::function<void(Outcome&)> body;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "qubit pipeline", 1.0, qubit_pipeline},
        {"AC2", "conjugation law on qubit and cyclic-4", 1.0, conjugation_law},
        {"AC3", "x resolved in the z basis", 1.0, expansion},
        {"AC4", "singlet and delta spectrum", 1.0, singlet_delta},
        {"AC5", "permissibility versus induced action", 60.0, permissibility_suite},
        {"AC6", "related-variable search", 10.0, a1_instances},
        {"AC7", "exhaustive falsifier up to 6 points", 600.0, falsifier},
        {"AC8", "deterministic reports", 600.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        o.require(seconds < c.limit_seconds, " (over time limit)");
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " [" << o.note.str() << "] ("
                  << std::fixed << std::setprecision(2) << seconds << " s)\n";
    }
    return failures == 0 ? 0 : 1;
}
