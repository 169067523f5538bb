#pragma once

// Finite point spaces, conceptual variables as functions on them, and the
// domination order used for accessibility and maximality.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cvq {

/// A finite labelled set of points. Labels are unique and there is at least one.
class PointSpace {
public:
    PointSpace(std::string id, std::vector<std::string> labels);

    const std::string& id() const { return id_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

    /// Space {0, 1, ..., n-1} with decimal labels.
    static std::shared_ptr<const PointSpace> range(std::string id, std::size_t n);

    bool operator==(const PointSpace&) const = default;

private:
    std::string id_;
    std::vector<std::string> labels_;
};

using SpaceRef = std::shared_ptr<const PointSpace>;

bool same_space(const SpaceRef& a, const SpaceRef& b);

/// A total surjective map from a point space onto a finite set of values.
///
/// Two variables compare equal when they live on the same space and induce
/// the same partition of it; value labels only matter for reporting and for
/// the numeric eigenvalues attached to each value.
class ConceptualVariable {
public:
    ConceptualVariable(std::string name, SpaceRef domain, std::vector<std::string> values,
                       std::vector<std::size_t> assignment);

    /// Build from an explicit list of blocks; block i gets value label `labels[i]`
    /// (or its index when `labels` is empty).
    static ConceptualVariable from_blocks(std::string name, SpaceRef domain,
                                          const std::vector<std::vector<std::size_t>>& blocks,
                                          std::vector<std::string> labels = {});
    static ConceptualVariable identity(std::string name, SpaceRef domain);
    static ConceptualVariable constant(std::string name, SpaceRef domain);

    const std::string& name() const { return name_; }
    const SpaceRef& domain() const { return domain_; }
    const std::vector<std::string>& values() const { return values_; }
    std::size_t value_count() const { return values_.size(); }
    std::size_t domain_size() const { return assignment_.size(); }

    std::size_t operator()(std::size_t point) const { return assignment_[point]; }
    std::span<const std::size_t> assignment() const { return assignment_; }

    /// Numeric reading of value `v`: the label itself when every label parses as a
    /// distinct number, otherwise the value index.
    double numeric(std::size_t v) const { return numeric_[v]; }
    const std::vector<double>& numeric_values() const { return numeric_; }

    /// Restricted-growth encoding of the fibre partition: block ids in order of
    /// first appearance. Equal partitions have equal encodings.
    const std::vector<std::size_t>& partition() const { return canonical_; }
    std::vector<std::vector<std::size_t>> blocks() const;
    /// Number of points mapped to each value index.
    std::vector<std::size_t> fibre_sizes() const;

    bool is_identity() const { return value_count() == domain_size(); }
    bool is_constant() const { return value_count() == 1; }

    bool operator==(const ConceptualVariable& other) const;

private:
    std::string name_;
    SpaceRef domain_;
    std::vector<std::string> values_;
    std::vector<std::size_t> assignment_;
    std::vector<std::size_t> canonical_;
    std::vector<double> numeric_;
};

/// Restricted-growth relabelling of an arbitrary block-id sequence.
std::vector<std::size_t> canonical_partition(std::span<const std::size_t> ids);

/// f(theta) for the value map `f` (value index -> new value id). The new value
/// set is the image of `f`, ordered by first appearance over theta's values.
ConceptualVariable push_forward(const ConceptualVariable& theta, std::span<const std::size_t> f,
                                std::string name);

/// A generating family of accessible variables over one shared domain.
class VariableFamily {
public:
    explicit VariableFamily(std::vector<ConceptualVariable> generators,
                            bool inaccessible_total = true);

    const std::vector<ConceptualVariable>& generators() const { return generators_; }
    bool inaccessible_total() const { return inaccessible_total_; }
    const SpaceRef& domain() const;
    bool empty() const { return generators_.empty(); }

private:
    std::vector<ConceptualVariable> generators_;
    bool inaccessible_total_;
};

/// True iff theta = f(lambda) for some f, i.e. lambda's partition refines theta's.
bool dominates(const ConceptualVariable& theta, const ConceptualVariable& lambda);
/// theta <= lambda and not lambda <= theta.
bool strictly_dominated(const ConceptualVariable& theta, const ConceptualVariable& lambda);

bool is_accessible(const ConceptualVariable& theta, const VariableFamily& family);

/// Generators not strictly dominated by any other generator. Generators with
/// identical partitions are reported once (first occurrence wins).
std::vector<ConceptualVariable> maximal_accessible(const VariableFamily& family);

/// Whether `theta` is one of the maximal elements of `family` (partition equality).
bool is_maximal_in(const ConceptualVariable& theta, const VariableFamily& family);

}  // namespace cvq
