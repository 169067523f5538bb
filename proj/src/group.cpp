#include "cvq/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cvq/error.hpp"

namespace cvq {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t x : images_) {
        if (x >= images_.size() || seen[x]) throw DomainError("permutation images are not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> used(n, false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (cycle[i] >= n || used[cycle[i]]) throw DomainError("cycles are not disjoint points of the space");
            used[cycle[i]] = true;
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == start) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = images_[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DomainError("composing permutations of different degree");
    std::vector<std::uint32_t> images(a.degree());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(i));
    return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : p.images()) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t PermutationGroup::multiply(std::size_t a, std::size_t b) const {
    return index_.at(elements_[a] * elements_[b]);
}

std::size_t PermutationGroup::inverse(std::size_t a) const {
    return index_.at(elements_[a].inverse());
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Permutation& p) { return other.contains(p); });
}

PermutationGroup closure(SpaceRef space, std::vector<Permutation> generators, std::size_t cap) {
    if (!space) throw DomainError("closure: group needs a point space");
    const std::size_t n = space->size();
    for (const auto& g : generators) {
        if (g.degree() != n) {
            throw DomainError("closure: generator " + g.to_string() + " has degree " +
                              std::to_string(g.degree()) + ", space has " + std::to_string(n) + " points");
        }
    }
    PermutationGroup group;
    group.space_ = std::move(space);
    group.generators_ = std::move(generators);

    auto add = [&](Permutation p) {
        auto [it, inserted] = group.index_.try_emplace(p, group.elements_.size());
        if (!inserted) return;
        if (group.elements_.size() >= cap) {
            throw ResourceError("group closure exceeds the cap of " + std::to_string(cap) + " elements");
        }
        group.elements_.push_back(std::move(p));
    };
    add(Permutation::identity(n));
    // Elements are appended in discovery order, so the list itself is the BFS queue.
    for (std::size_t head = 0; head < group.elements_.size(); ++head) {
        for (const auto& g : group.generators_) {
            add(group.elements_[head] * g);
        }
    }
    return group;
}

PermutationGroup symmetric_group(SpaceRef space, std::size_t cap) {
    const std::size_t n = space->size();
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
        std::vector<std::uint32_t> cycle(n);
        std::iota(cycle.begin(), cycle.end(), 0u);
        if (n > 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return closure(std::move(space), std::move(gens), cap);
}

PermutationGroup cyclic_shift_group(SpaceRef space) {
    const std::size_t n = space->size();
    std::vector<std::uint32_t> images(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = static_cast<std::uint32_t>((j + 1) % n);
    return closure(std::move(space), {Permutation(std::move(images))});
}

std::vector<std::size_t> orbits(const PermutationGroup& group) {
    const std::size_t n = group.degree();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit(n, unset);
    std::size_t next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (orbit[start] != unset) continue;
        std::deque<std::size_t> queue{start};
        orbit[start] = next;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (const auto& g : group.generators()) {
                std::size_t y = g(x);
                if (orbit[y] == unset) {
                    orbit[y] = next;
                    queue.push_back(y);
                }
            }
        }
        ++next;
    }
    return orbit;
}

bool is_transitive(const PermutationGroup& group) {
    auto orbit = orbits(group);
    return std::all_of(orbit.begin(), orbit.end(), [](std::size_t o) { return o == 0; });
}

bool has_trivial_isotropy(const PermutationGroup& group) {
    for (std::size_t i = 1; i < group.order(); ++i) {
        const auto& g = group.element(i);
        for (std::size_t x = 0; x < g.degree(); ++x) {
            if (g(x) == x) return false;
        }
    }
    return true;
}

std::optional<GroupHomomorphism::Violation> GroupHomomorphism::verify(std::size_t exhaustive_limit) const {
    if (map.size() != source->order()) return Violation{0, 0};
    auto check = [&](std::size_t a, std::size_t b) {
        return map[source->multiply(a, b)] == target->multiply(map[a], map[b]);
    };
    if (source->order() <= exhaustive_limit) {
        for (std::size_t a = 0; a < source->order(); ++a) {
            for (std::size_t b = 0; b < source->order(); ++b) {
                if (!check(a, b)) return Violation{a, b};
            }
        }
        return std::nullopt;
    }
    // A map that is multiplicative on (element, generator) pairs is a homomorphism.
    for (const auto& g : source->generators()) {
        std::size_t gi = *source->index_of(g);
        for (std::size_t a = 0; a < source->order(); ++a) {
            if (!check(a, gi)) return Violation{a, gi};
        }
    }
    return std::nullopt;
}

bool GroupHomomorphism::maps_identity_to_identity() const {
    return !map.empty() && map[PermutationGroup::identity_index()] == PermutationGroup::identity_index();
}

}  // namespace cvq
