#include "cvq/harness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cvq/error.hpp"
#include "cvq/subgroups.hpp"

namespace cvq {

namespace {

std::vector<std::size_t> sorted_block_sizes(const ConceptualVariable& v) {
    auto sizes = v.fibre_sizes();
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool related(const ConceptualVariable& a, const ConceptualVariable& b, const PermutationGroup& K,
             RelatednessSearch mode = RelatednessSearch::Group) {
    return a.value_count() == b.value_count() && are_related(a, b, K, mode).has_value();
}

/// Union-find over family indices.
struct Classes {
    std::vector<std::size_t> parent;
    explicit Classes(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::AllRelated: return "all-related";
        case Verdict::AllEssentiallyDifferent: return "all-essentially-different";
        case Verdict::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Pass: return "pass";
        case SearchStatus::Fail: return "fail";
        case SearchStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

void ThoughtScenario::validate() const {
    if (!space) throw DomainError("thought scenario has no space");
    if (!K) throw DomainError("thought scenario has no group");
    if (!same_space(space, K->space())) throw DomainError("group does not act on the scenario space");
    for (const auto& v : family) {
        if (!same_space(space, v.domain())) throw DomainError("thought '" + v.name() + "' lives on another space");
        if (v.value_count() != family.front().value_count()) {
            throw DomainError("thoughts '" + family.front().name() + "' and '" + v.name() +
                              "' have value spaces of different size");
        }
    }
    if (product) product->validate(space->size());
    if (family.empty()) return;
    VariableFamily fam(family, false);
    for (const auto& v : family) {
        if (!is_maximal_in(v, fam)) throw PreconditionError("thought '" + v.name() + "' is not maximal in the family");
    }
}

bool verify_relating(const ConceptualVariable& theta, const ConceptualVariable& eta, const Permutation& k) {
    if (theta.value_count() != eta.value_count() || k.degree() != theta.domain_size() ||
        eta.domain_size() != theta.domain_size()) {
        return false;
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> bijection(theta.value_count(), unset);
    std::vector<bool> used(eta.value_count(), false);
    for (std::size_t phi = 0; phi < theta.domain_size(); ++phi) {
        std::size_t& slot = bijection[theta(k(phi))];
        if (slot == unset) {
            if (used[eta(phi)]) return false;
            slot = eta(phi);
            used[slot] = true;
        }
        if (slot != eta(phi)) return false;
    }
    return true;
}

ClassificationResult classify_thoughts(const ThoughtScenario& s, RelatednessSearch mode) {
    if (s.family.size() < 3) {
        throw PreconditionError("classify_thoughts needs more than two thoughts, got " + std::to_string(s.family.size()));
    }
    s.validate();
    for (std::size_t i = 0; i < s.family.size(); ++i) {
        for (std::size_t j = i + 1; j < s.family.size(); ++j) {
            if (s.family[i] == s.family[j]) {
                throw PreconditionError("thoughts '" + s.family[i].name() + "' and '" + s.family[j].name() +
                                        "' are the same variable");
            }
        }
    }
    const auto& K = *s.K;
    const std::size_t m = s.family.size();
    std::size_t search_size = K.order();
    if (mode == RelatednessSearch::Symmetric) {
        search_size = 1;
        for (std::size_t i = 2; i <= K.degree(); ++i) search_size *= i;
    }

    ClassificationResult out;
    Classes classes(m);
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        rel[i][i] = true;
        for (std::size_t j = i + 1; j < m; ++j) {
            PairRecord record{i, j, are_related(s.family[i], s.family[j], K, mode), search_size};
            if (record.witness) {
                if (!verify_relating(s.family[i], s.family[j], *record.witness)) {
                    throw Error("internal: relating witness " + record.witness->to_string() + " fails pointwise check");
                }
                classes.unite(i, j);
                rel[i][j] = rel[j][i] = true;
            }
            out.pairs.push_back(std::move(record));
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t i = 0; i < m; ++i) grouped[classes.find(i)].push_back(i);
    for (auto& [root, members] : grouped) out.classes.push_back(std::move(members));

    if (out.classes.size() == 1) {
        out.verdict = Verdict::AllRelated;
    } else if (out.classes.size() == m) {
        out.verdict = Verdict::AllEssentiallyDifferent;
    } else {
        out.verdict = Verdict::Mixed;
    }

    auto& h = out.hypotheses;
    h.transitive = is_transitive(K);
    h.trivial_isotropy = has_trivial_isotropy(K);
    for (const auto& v : s.family) h.permissible.push_back(is_permissible(v, K));

    if (out.verdict != Verdict::Mixed) return out;

    auto exchange = [&](std::size_t a, std::size_t b) {
        return s.product && flag_trivial_exchange(s.family[a], s.family[b], K, s.product);
    };
    std::optional<std::array<std::size_t, 3>> fallback;
    for (std::size_t t = 0; t < m && !out.mixed_triple; ++t) {
        for (std::size_t l = 0; l < m && !out.mixed_triple; ++l) {
            if (l == t || !rel[t][l]) continue;
            for (std::size_t x = 0; x < m; ++x) {
                if (rel[t][x]) continue;
                std::array<std::size_t, 3> triple{t, l, x};
                if (!fallback) fallback = triple;
                if (h.permissible[t].permissible) {
                    out.mixed_triple = triple;
                    break;
                }
            }
        }
    }
    if (!out.mixed_triple) out.mixed_triple = fallback;
    const auto [t, l, x] = *out.mixed_triple;
    if (s.product) h.trivial_exchange = exchange(t, l);
    out.counterexample = h.transitive && h.trivial_isotropy && h.permissible[t].permissible &&
                         !h.trivial_exchange.value_or(false);
    return out;
}

std::vector<ConceptualVariable> same_shape_variables(const ConceptualVariable& theta) {
    const std::size_t n = theta.domain_size();
    if (n > kMaxSubgroupDegree) {
        throw ResourceError("same-shape enumeration is limited to " + std::to_string(kMaxSubgroupDegree) + " points");
    }
    const auto shape = sorted_block_sizes(theta);
    std::vector<ConceptualVariable> out;
    for (const auto& rgs : set_partitions(n)) {
        std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks != shape.size()) continue;
        std::vector<std::string> labels(blocks);
        for (std::size_t b = 0; b < blocks; ++b) labels[b] = std::to_string(b);
        ConceptualVariable v("shape" + std::to_string(out.size()), theta.domain(), std::move(labels), rgs);
        if (sorted_block_sizes(v) == shape) out.push_back(std::move(v));
    }
    return out;
}

A1SearchResult theorem_a1_search(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                 const ThoughtScenario& s, bool all_shapes) {
    A1SearchResult out;
    const auto& K = *s.K;
    auto family = s.family;
    family.push_back(theta);
    family.push_back(eta);
    VariableFamily universe(family, false);
    if (!is_maximal_in(theta, universe) || !is_maximal_in(eta, universe)) {
        out.reason = "theta and eta must both be maximal";
        return out;
    }
    if (theta.value_count() != eta.value_count()) {
        out.reason = "value spaces of theta and eta are not in one-to-one correspondence";
        return out;
    }
    out.relating = are_related(theta, eta, K);
    if (!out.relating) {
        out.reason = "theta and eta are not related by any element of K";
        return out;
    }
    auto permissible = is_permissible(theta, K);
    if (!permissible) {
        out.permissibility_witness = permissible.witness;
        out.reason = "theta is not permissible with respect to K";
        return out;
    }
    if (!is_transitive(K)) {
        out.reason = "K is not transitive";
        return out;
    }
    if (!has_trivial_isotropy(K)) {
        out.reason = "K has a non-trivial isotropy group";
        return out;
    }

    std::vector<ConceptualVariable> candidates;
    for (const auto& v : s.family) {
        if (is_maximal_in(v, universe)) candidates.push_back(v);
    }
    if (all_shapes) {
        auto extra = same_shape_variables(theta);
        candidates.insert(candidates.end(), extra.begin(), extra.end());
    }
    for (const auto& lambda : candidates) {
        ++out.candidates_examined;
        if (lambda.value_count() != theta.value_count()) continue;
        if (related(theta, lambda, K) && !related(lambda, eta, K)) out.falsifiers.push_back(lambda);
    }
    out.status = out.falsifiers.empty() ? SearchStatus::Pass : SearchStatus::Fail;
    out.reason = out.falsifiers.empty() ? "no maximal variable related to theta but essentially different from eta"
                                        : "found a variable related to theta but essentially different from eta";
    return out;
}

ProofGroupResult proof_group_construction(const ConceptualVariable& theta, const ConceptualVariable& lambda,
                                          const ConceptualVariable& xi, const ThoughtScenario& s,
                                          std::size_t max_order) {
    const std::size_t n = theta.domain_size();
    if (theta.value_count() != lambda.value_count() || theta.value_count() != xi.value_count()) {
        throw PreconditionError("thought value spaces are not in one-to-one correspondence");
    }
    if (n > kMaxExhaustiveDegree) {
        throw ResourceError("proof group search is limited to " + std::to_string(kMaxExhaustiveDegree) + " points");
    }
    auto family = s.family;
    for (const auto* v : {&theta, &lambda, &xi}) family.push_back(*v);
    VariableFamily universe(family, false);
    for (const auto* v : {&theta, &lambda, &xi}) {
        if ((v->is_constant() && n > 1) || !is_maximal_in(*v, universe)) {
            throw PreconditionError("'" + v->name() + "' is not maximal");
        }
    }

    // Permutations of the space that permute theta's blocks.
    std::vector<Permutation> pool;
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    do {
        Permutation p(images);
        if (!p.is_identity() && induced_value_map(theta, p)) pool.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));

    ProofGroupResult out;
    constexpr std::size_t kCandidateBudget = 200'000;
    std::set<std::vector<Permutation>> tried;
    auto consider = [&](std::vector<Permutation> gens) {
        ++out.candidates_examined;
        PermutationGroup g = closure(theta.domain(), std::move(gens), max_order + 1);
        if (g.order() != n || g.order() > max_order) return false;  // regular actions have order n
        auto key = g.elements();
        std::sort(key.begin(), key.end());
        if (!tried.insert(std::move(key)).second) return false;
        if (!is_transitive(g) || !has_trivial_isotropy(g)) return false;
        auto k = are_related(theta, lambda, g);
        if (!k) return false;
        out.found = true;
        out.relating = k;
        out.group = std::make_shared<const PermutationGroup>(std::move(g));
        return true;
    };
    auto attempt = [&](std::vector<Permutation> gens) {
        try {
            return consider(std::move(gens));
        } catch (const ResourceError&) {
            return false;  // larger than max_order
        }
    };

    for (const auto& a : pool) {
        if (attempt({a})) break;
    }
    for (std::size_t i = 0; !out.found && i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (out.candidates_examined >= kCandidateBudget) break;
            if (attempt({pool[i], pool[j]})) break;
        }
    }

    if (!out.found) {
        out.note = out.candidates_examined >= kCandidateBudget
                       ? "search budget exhausted without a qualifying subgroup"
                       : "no transitive free subgroup permuting theta's blocks relates theta and lambda";
        return out;
    }
    out.transitive = is_transitive(*out.group);
    out.trivial_isotropy = has_trivial_isotropy(*out.group);
    out.permissible = is_permissible(theta, *out.group).permissible;
    out.note = "constructed subgroup of order " + std::to_string(out.group->order());
    return out;
}

FalsifierReport exhaustive_falsifier(std::size_t max_n, std::chrono::milliseconds budget) {
    if (max_n > kMaxSubgroupDegree) {
        throw PreconditionError("exhaustive_falsifier supports at most " + std::to_string(kMaxSubgroupDegree) +
                                " points");
    }
    const auto deadline = std::chrono::steady_clock::now() + budget;
    FalsifierReport report;
    report.max_n = max_n;
    for (std::size_t n = 1; n <= max_n && report.complete; ++n) {
        auto space = PointSpace::range("Omega" + std::to_string(n), n);
        FalsifierDegreeStats stats;
        stats.n = n;
        auto groups = subgroup_class_representatives(space);
        stats.subgroup_classes = groups.size();
        const auto all = set_partitions(n);
        for (std::size_t r = 2; r < n && report.complete; ++r) {
            if (n % r != 0) continue;
            std::vector<ConceptualVariable> shaped;
            for (const auto& rgs : all) {
                std::vector<std::size_t> sizes(n, 0);
                for (std::size_t b : rgs) ++sizes[b];
                bool balanced = std::count(sizes.begin(), sizes.end(), n / r) == static_cast<std::ptrdiff_t>(r);
                if (!balanced) continue;
                std::vector<std::string> labels(r);
                for (std::size_t b = 0; b < r; ++b) labels[b] = std::to_string(b);
                shaped.emplace_back("p" + std::to_string(shaped.size()), space, std::move(labels), rgs);
            }
            const std::size_t count = shaped.size();
            for (std::size_t a = 0; a < count && report.complete; ++a) {
                for (std::size_t b = a + 1; b < count && report.complete; ++b) {
                    for (std::size_t c = b + 1; c < count && report.complete; ++c) {
                        ++stats.families;
                        for (const auto& K : groups) {
                            if (std::chrono::steady_clock::now() > deadline) {
                                report.complete = false;
                                break;
                            }
                            ThoughtScenario scenario{space, {shaped[a], shaped[b], shaped[c]}, K, std::nullopt};
                            auto result = classify_thoughts(scenario);
                            ++stats.instances;
                            if (result.verdict != Verdict::Mixed) continue;
                            if (!result.counterexample) {
                                ++stats.mixed;
                                continue;
                            }
                            ++report.counterexamples;
                            FalsifierCounterexample witness;
                            witness.n = n;
                            for (const auto& v : scenario.family) witness.family.push_back(v.partition());
                            witness.generators = K->generators();
                            witness.triple = *result.mixed_triple;
                            report.witnesses.push_back(std::move(witness));
                        }
                    }
                }
            }
        }
        report.instances += stats.instances;
        report.mixed += stats.mixed;
        report.per_degree.push_back(stats);
    }
    return report;
}

}  // namespace cvq
