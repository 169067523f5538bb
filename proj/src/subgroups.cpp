#include "cvq/subgroups.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cvq/error.hpp"

namespace cvq {

namespace {

constexpr std::size_t kMaxOrder = 720;  // |S_6|
using ElementSet = std::bitset<kMaxOrder>;

/// S_n with full multiplication and inverse tables, elements in lexicographic order.
struct SymmetricTables {
    std::vector<Permutation> elements;
    std::vector<std::uint16_t> mult;  // mult[a * N + b] = a * b
    std::vector<std::uint16_t> inv;
    std::vector<std::uint64_t> cycle_type;

    explicit SymmetricTables(std::size_t n) {
        std::vector<std::uint32_t> images(n);
        std::iota(images.begin(), images.end(), 0u);
        do {
            elements.emplace_back(images);
        } while (std::next_permutation(images.begin(), images.end()));
        const std::size_t order = elements.size();
        std::unordered_map<Permutation, std::uint16_t, PermutationHash> index;
        for (std::size_t i = 0; i < order; ++i) index.emplace(elements[i], static_cast<std::uint16_t>(i));
        mult.resize(order * order);
        inv.resize(order);
        for (std::size_t a = 0; a < order; ++a) {
            inv[a] = index.at(elements[a].inverse());
            for (std::size_t b = 0; b < order; ++b) mult[a * order + b] = index.at(elements[a] * elements[b]);
        }
        for (const auto& p : elements) cycle_type.push_back(encode_cycle_type(p));
    }

    std::size_t order() const { return elements.size(); }
    std::uint16_t times(std::size_t a, std::size_t b) const { return mult[a * order() + b]; }
    std::uint16_t conjugate(std::size_t sigma, std::size_t g) const { return times(times(sigma, g), inv[sigma]); }

    static std::uint64_t encode_cycle_type(const Permutation& p) {
        std::vector<std::size_t> lengths;
        std::vector<bool> seen(p.degree(), false);
        for (std::size_t s = 0; s < p.degree(); ++s) {
            std::size_t len = 0;
            for (std::size_t x = s; !seen[x]; x = p(x)) {
                seen[x] = true;
                ++len;
            }
            if (len > 0) lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end());
        std::uint64_t code = 0;
        for (std::size_t len : lengths) code = code * 8 + len;
        return code;
    }
};

struct Subgroup {
    ElementSet members;
    std::vector<std::uint16_t> elements;  // sorted
    std::vector<std::uint16_t> generators;
    std::vector<std::uint64_t> invariant;  // sorted cycle types of the elements
};

Subgroup generate(const SymmetricTables& s, std::vector<std::uint16_t> generators) {
    Subgroup h;
    h.generators = std::move(generators);
    std::vector<std::uint16_t> queue{0};  // index 0 is the identity in lexicographic order
    h.members.set(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::uint16_t g : h.generators) {
            std::uint16_t y = s.times(queue[head], g);
            if (!h.members.test(y)) {
                h.members.set(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    h.elements = std::move(queue);
    for (std::uint16_t e : h.elements) h.invariant.push_back(s.cycle_type[e]);
    std::sort(h.invariant.begin(), h.invariant.end());
    return h;
}

bool conjugate(const SymmetricTables& s, const Subgroup& a, const Subgroup& b) {
    if (a.invariant != b.invariant) return false;
    for (std::size_t sigma = 0; sigma < s.order(); ++sigma) {
        bool inside = std::all_of(a.elements.begin(), a.elements.end(),
                                  [&](std::uint16_t g) { return b.members.test(s.conjugate(sigma, g)); });
        if (inside) return true;
    }
    return false;
}

}  // namespace

std::vector<GroupRef> subgroup_class_representatives(const SpaceRef& space) {
    const std::size_t n = space->size();
    if (n > kMaxSubgroupDegree) {
        throw ResourceError("subgroup classes are enumerated exactly only up to degree " +
                            std::to_string(kMaxSubgroupDegree));
    }
    SymmetricTables tables(n);
    std::vector<Subgroup> reps{generate(tables, {})};
    std::unordered_set<ElementSet> seen{reps.front().members};

    for (std::size_t head = 0; head < reps.size(); ++head) {
        for (std::size_t g = 0; g < tables.order(); ++g) {
            if (reps[head].members.test(g)) continue;
            auto gens = reps[head].generators;
            gens.push_back(static_cast<std::uint16_t>(g));
            Subgroup candidate = generate(tables, std::move(gens));
            if (!seen.insert(candidate.members).second) continue;
            bool known = std::any_of(reps.begin(), reps.end(),
                                     [&](const Subgroup& r) { return conjugate(tables, candidate, r); });
            if (!known) reps.push_back(std::move(candidate));
        }
    }

    std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    std::vector<GroupRef> out;
    out.reserve(reps.size());
    for (const auto& r : reps) {
        std::vector<Permutation> gens;
        for (std::uint16_t g : r.generators) gens.push_back(tables.elements[g]);
        out.push_back(make_group(space, std::move(gens)));
    }
    return out;
}

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) return {{}};
    std::vector<std::size_t> rgs(n, 0);
    // Recursive restricted-growth generation: rgs[i] <= 1 + max(rgs[0..i-1]).
    auto extend = [&](auto&& self, std::size_t i, std::size_t max_so_far) -> void {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (std::size_t v = 0; v <= max_so_far + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(max_so_far, v));
        }
    };
    rgs[0] = 0;
    extend(extend, 1, 0);
    return out;
}

}  // namespace cvq
