#include "cvq/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cvq {

namespace {

void require_acts_on(const ConceptualVariable& theta, const PermutationGroup& K) {
    if (!same_space(theta.domain(), K.space())) {
        throw DomainError("group does not act on the domain of '" + theta.name() + "'");
    }
}

/// First failing pair for one element, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_violation(const ConceptualVariable& theta,
                                                                    const Permutation& k) {
    const std::size_t n = theta.domain_size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (theta(a) == theta(b) && theta(k(a)) != theta(k(b))) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

bool same_partition_after(const ConceptualVariable& theta, const Permutation& k,
                          const std::vector<std::size_t>& target, std::vector<std::size_t>& scratch) {
    // Restricted-growth relabelling of phi -> theta(k phi), compared on the fly.
    std::fill(scratch.begin(), scratch.end(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (std::size_t p = 0; p < target.size(); ++p) {
        std::size_t& id = scratch[theta(k(p))];
        if (id == static_cast<std::size_t>(-1)) id = next++;
        if (id != target[p]) return false;
    }
    return true;
}

}  // namespace

ConceptualVariable compose(const ConceptualVariable& theta, const Permutation& k) {
    if (k.degree() != theta.domain_size()) throw DomainError("permutation degree does not match domain");
    std::vector<std::size_t> assignment(theta.domain_size());
    for (std::size_t p = 0; p < assignment.size(); ++p) assignment[p] = theta(k(p));
    return ConceptualVariable(theta.name() + "∘" + k.to_string(), theta.domain(), theta.values(),
                              std::move(assignment));
}

std::optional<Permutation> induced_value_map(const ConceptualVariable& theta, const Permutation& k) {
    constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> images(theta.value_count(), unset);
    for (std::size_t p = 0; p < theta.domain_size(); ++p) {
        auto image = static_cast<std::uint32_t>(theta(k(p)));
        std::uint32_t& slot = images[theta(p)];
        if (slot == unset) {
            slot = image;
        } else if (slot != image) {
            return std::nullopt;
        }
    }
    // Fibre-preserving bijections of a finite set permute the fibres.
    return Permutation(std::move(images));
}

PermissibilityResult is_permissible(const ConceptualVariable& theta, const PermutationGroup& K) {
    require_acts_on(theta, K);
    // Fibre preservation is closed under composition, so the generators decide.
    bool generators_ok = std::all_of(K.generators().begin(), K.generators().end(),
                                     [&](const Permutation& g) { return induced_value_map(theta, g).has_value(); });
    if (generators_ok) return {};
    for (const auto& k : K.elements()) {
        if (auto pair = first_violation(theta, k)) {
            return PermissibilityResult{false, PermissibilityWitness{k, pair->first, pair->second}};
        }
    }
    return {};  // unreachable for a consistent group
}

NotPermissibleError::NotPermissibleError(PermissibilityWitness witness)
    : PreconditionError("variable is not permissible: k=" + witness.k.to_string() + " separates points " +
                        std::to_string(witness.phi1) + " and " + std::to_string(witness.phi2)),
      witness_(std::move(witness)) {}

InducedAction induced_group(const ConceptualVariable& theta, const GroupRef& K) {
    auto check = is_permissible(theta, *K);
    if (!check) throw NotPermissibleError(*check.witness);

    auto value_space = std::make_shared<const PointSpace>(theta.name() + "-values", theta.values());
    std::vector<Permutation> generators;
    for (const auto& k : K->generators()) generators.push_back(*induced_value_map(theta, k));
    auto G = make_group(value_space, std::move(generators));

    std::vector<std::size_t> map(K->order());
    for (std::size_t i = 0; i < K->order(); ++i) {
        map[i] = *G->index_of(*induced_value_map(theta, K->element(i)));
    }
    return InducedAction{G, GroupHomomorphism{K, G, std::move(map)}};
}

std::optional<Permutation> are_related(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                       const PermutationGroup& K, RelatednessSearch mode) {
    require_acts_on(theta, K);
    require_acts_on(eta, K);
    if (theta.value_count() != eta.value_count()) {
        throw DomainError("are_related: value spaces of '" + theta.name() + "' and '" + eta.name() +
                          "' differ in size");
    }
    const auto& target = eta.partition();
    std::vector<std::size_t> scratch(theta.value_count());

    if (mode == RelatednessSearch::Symmetric) {
        const std::size_t n = theta.domain_size();
        if (n > kMaxExhaustiveDegree) {
            throw ResourceError("exhaustive relatedness search is limited to " +
                                std::to_string(kMaxExhaustiveDegree) + " points");
        }
        std::vector<std::uint32_t> images(n);
        std::iota(images.begin(), images.end(), 0u);
        do {
            Permutation k(images);
            if (same_partition_after(theta, k, target, scratch)) return k;
        } while (std::next_permutation(images.begin(), images.end()));
        return std::nullopt;
    }

    std::optional<Permutation> best;
    for (const auto& k : K.elements()) {
        if ((!best || k < *best) && same_partition_after(theta, k, target, scratch)) best = k;
    }
    return best;
}

std::vector<Permutation> relating_elements(const ConceptualVariable& theta, const ConceptualVariable& eta,
                                           const PermutationGroup& K) {
    require_acts_on(theta, K);
    require_acts_on(eta, K);
    if (theta.value_count() != eta.value_count()) {
        throw DomainError("relating_elements: value spaces differ in size");
    }
    std::vector<std::size_t> scratch(theta.value_count());
    std::vector<Permutation> out;
    for (const auto& k : K.elements()) {
        if (same_partition_after(theta, k, eta.partition(), scratch)) out.push_back(k);
    }
    return out;
}

std::size_t ProductStructure::first_size() const {
    return first.empty() ? 0 : *std::max_element(first.begin(), first.end()) + 1;
}

std::size_t ProductStructure::second_size() const {
    return second.empty() ? 0 : *std::max_element(second.begin(), second.end()) + 1;
}

void ProductStructure::validate(std::size_t n) const {
    if (first.size() != n || second.size() != n) {
        throw DomainError("product structure must give coordinates for every point");
    }
    if (first_size() * second_size() != n) {
        throw DomainError("product structure is not a bijection onto the coordinate grid");
    }
    std::set<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t p = 0; p < n; ++p) cells.emplace(first[p], second[p]);
    if (cells.size() != n) throw DomainError("product structure assigns one cell to two points");
}

Permutation ProductStructure::coordinate_exchange() const {
    if (first_size() != second_size()) {
        throw PreconditionError("coordinate exchange needs factors of equal size");
    }
    const std::size_t n = first.size();
    std::vector<std::uint32_t> images(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (first[q] == second[p] && second[q] == first[p]) images[p] = static_cast<std::uint32_t>(q);
        }
    }
    return Permutation(std::move(images));
}

bool flag_trivial_exchange(const ConceptualVariable& theta, const ConceptualVariable& eta,
                           const PermutationGroup& K, const std::optional<ProductStructure>& product) {
    if (!product) throw PreconditionError("not applicable: no product structure declared");
    product->validate(theta.domain_size());
    if (product->first_size() != product->second_size()) return false;
    auto relating = relating_elements(theta, eta, K);
    if (relating.empty()) return false;
    const Permutation swap = product->coordinate_exchange();
    return std::all_of(relating.begin(), relating.end(), [&](const Permutation& k) { return k == swap; });
}

}  // namespace cvq
