#pragma once

#include <cstddef>
#include <vector>

#include "cvq/group.hpp"

namespace cvq {

/// Representatives of the conjugacy classes of subgroups of Sym(space).
///
/// Every subgroup is reached from the trivial group by adjoining one element at
/// a time, and conjugating such a chain gives a chain for the conjugate, so
/// extending only class representatives visits every class. Representatives
/// are ordered by group order, then by their sorted element lists.
std::vector<GroupRef> subgroup_class_representatives(const SpaceRef& space);

/// Largest degree accepted by subgroup_class_representatives.
inline constexpr std::size_t kMaxSubgroupDegree = 6;

/// Every set partition of {0..n-1}, as restricted-growth strings in lexicographic order.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

}  // namespace cvq
