#pragma once

// Finite permutation groups given by generators and enumerated in full.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cvq/spaces.hpp"

namespace cvq {

/// A bijection of {0, ..., n-1}; entry i is the image of point i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t n);
    /// Product of disjoint cycles, e.g. {{0, 1}, {2, 3}}.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::size_t point) const { return images_[point]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// Cycle notation with 0-based points, "()" for the identity.
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

/// (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A permutation group with its full element list.
///
/// Elements are listed in breadth-first order from the identity, extending by
/// the generators in their given order; this order is deterministic and
/// element indices are used throughout as handles into representations.
class PermutationGroup {
public:
    const SpaceRef& space() const { return space_; }
    std::size_t degree() const { return space_->size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation& element(std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return index_of(p).has_value(); }
    /// Index of elements_[a] * elements_[b].
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    static constexpr std::size_t identity_index() { return 0; }

    bool is_subgroup_of(const PermutationGroup& other) const;

private:
    friend PermutationGroup closure(SpaceRef space, std::vector<Permutation> generators, std::size_t cap);

    SpaceRef space_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

using GroupRef = std::shared_ptr<const PermutationGroup>;

/// Enumerate the group generated by `generators` acting on `space`.
/// Throws ResourceError once more than `cap` elements are found.
PermutationGroup closure(SpaceRef space, std::vector<Permutation> generators,
                         std::size_t cap = kDefaultGroupCap);

inline GroupRef make_group(SpaceRef space, std::vector<Permutation> generators,
                           std::size_t cap = kDefaultGroupCap) {
    return std::make_shared<const PermutationGroup>(closure(std::move(space), std::move(generators), cap));
}

/// The full symmetric group on `space` (generated by a transposition and an n-cycle).
PermutationGroup symmetric_group(SpaceRef space, std::size_t cap = kDefaultGroupCap);
/// Z_n acting by j -> j + 1 (mod n).
PermutationGroup cyclic_shift_group(SpaceRef space);

/// Orbit partition as a block id per point (restricted growth order).
std::vector<std::size_t> orbits(const PermutationGroup& group);
bool is_transitive(const PermutationGroup& group);
/// Only the identity fixes any point.
bool has_trivial_isotropy(const PermutationGroup& group);

/// An element-index map between two enumerated groups.
struct GroupHomomorphism {
    GroupRef source;
    GroupRef target;
    std::vector<std::size_t> map;  // source element index -> target element index

    struct Violation {
        std::size_t a = 0;  // source indices with map(a*b) != map(a)*map(b)
        std::size_t b = 0;
    };

    /// Exhaustive over all element pairs when |source| <= `exhaustive_limit`,
    /// otherwise over generator-by-element pairs (which determines the rest).
    std::optional<Violation> verify(std::size_t exhaustive_limit = 500) const;
    bool maps_identity_to_identity() const;
};

}  // namespace cvq
