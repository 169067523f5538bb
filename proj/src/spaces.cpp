#include "cvq/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <unordered_map>

#include "cvq/error.hpp"

namespace cvq {

namespace {

std::optional<double> parse_number(const std::string& label) {
    std::string_view text = label;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::vector<double> numeric_readings(const std::vector<std::string>& labels) {
    std::vector<double> parsed;
    parsed.reserve(labels.size());
    for (const auto& label : labels) {
        auto number = parse_number(label);
        if (!number) break;
        parsed.push_back(*number);
    }
    if (parsed.size() == labels.size() &&
        std::set<double>(parsed.begin(), parsed.end()).size() == parsed.size()) {
        return parsed;
    }
    std::vector<double> indices(labels.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<double>(i);
    return indices;
}

void require_same_domain(const ConceptualVariable& a, const ConceptualVariable& b) {
    if (!same_space(a.domain(), b.domain())) {
        throw DomainError("variables '" + a.name() + "' and '" + b.name() +
                          "' live on different spaces");
    }
}

}  // namespace

PointSpace::PointSpace(std::string id, std::vector<std::string> labels)
    : id_(std::move(id)), labels_(std::move(labels)) {
    if (labels_.empty()) throw DomainError("point space '" + id_ + "' must have at least one point");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw DomainError("point space '" + id_ + "' has duplicate labels");
    }
}

SpaceRef PointSpace::range(std::string id, std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return std::make_shared<const PointSpace>(std::move(id), std::move(labels));
}

bool same_space(const SpaceRef& a, const SpaceRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::vector<std::size_t> canonical_partition(std::span<const std::size_t> ids) {
    std::unordered_map<std::size_t, std::size_t> relabel;
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (std::size_t id : ids) {
        auto [it, inserted] = relabel.try_emplace(id, relabel.size());
        out.push_back(it->second);
    }
    return out;
}

ConceptualVariable::ConceptualVariable(std::string name, SpaceRef domain,
                                       std::vector<std::string> values,
                                       std::vector<std::size_t> assignment)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      values_(std::move(values)),
      assignment_(std::move(assignment)) {
    if (!domain_) throw DomainError("variable '" + name_ + "' has no domain");
    if (assignment_.size() != domain_->size()) {
        throw DomainError("variable '" + name_ + "': assignment covers " +
                          std::to_string(assignment_.size()) + " points, domain has " +
                          std::to_string(domain_->size()));
    }
    if (values_.empty()) throw DomainError("variable '" + name_ + "' has no values");
    std::vector<bool> hit(values_.size(), false);
    for (std::size_t v : assignment_) {
        if (v >= values_.size()) {
            throw DomainError("variable '" + name_ + "': value index " + std::to_string(v) +
                              " out of range");
        }
        hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        throw DomainError("variable '" + name_ + "' is not surjective onto its values");
    }
    canonical_ = canonical_partition(assignment_);
    numeric_ = numeric_readings(values_);
}

ConceptualVariable ConceptualVariable::from_blocks(std::string name, SpaceRef domain,
                                                   const std::vector<std::vector<std::size_t>>& blocks,
                                                   std::vector<std::string> labels) {
    if (!domain) throw DomainError("variable '" + name + "' has no domain");
    const std::size_t n = domain->size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assignment(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t p : blocks[b]) {
            if (p >= n) throw DomainError("variable '" + name + "': point " + std::to_string(p) + " out of range");
            if (assignment[p] != unset) {
                throw DomainError("variable '" + name + "': point " + std::to_string(p) + " in two blocks");
            }
            assignment[p] = b;
        }
    }
    if (std::find(assignment.begin(), assignment.end(), unset) != assignment.end()) {
        throw DomainError("variable '" + name + "': blocks do not cover the domain");
    }
    if (labels.empty()) {
        for (std::size_t b = 0; b < blocks.size(); ++b) labels.push_back(std::to_string(b));
    }
    return ConceptualVariable(std::move(name), std::move(domain), std::move(labels), std::move(assignment));
}

ConceptualVariable ConceptualVariable::identity(std::string name, SpaceRef domain) {
    const std::size_t n = domain->size();
    std::vector<std::size_t> assignment(n);
    for (std::size_t i = 0; i < n; ++i) assignment[i] = i;
    auto labels = domain->labels();
    return ConceptualVariable(std::move(name), std::move(domain), std::move(labels), std::move(assignment));
}

ConceptualVariable ConceptualVariable::constant(std::string name, SpaceRef domain) {
    const std::size_t n = domain->size();
    return ConceptualVariable(std::move(name), std::move(domain), {"*"}, std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<std::size_t>> ConceptualVariable::blocks() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t p = 0; p < canonical_.size(); ++p) {
        if (canonical_[p] == out.size()) out.emplace_back();
        out[canonical_[p]].push_back(p);
    }
    return out;
}

std::vector<std::size_t> ConceptualVariable::fibre_sizes() const {
    std::vector<std::size_t> sizes(values_.size(), 0);
    for (std::size_t v : assignment_) ++sizes[v];
    return sizes;
}

bool ConceptualVariable::operator==(const ConceptualVariable& other) const {
    return same_space(domain_, other.domain_) && canonical_ == other.canonical_;
}

ConceptualVariable push_forward(const ConceptualVariable& theta, std::span<const std::size_t> f,
                                std::string name) {
    if (f.size() != theta.value_count()) {
        throw DomainError("value map for '" + theta.name() + "' has wrong length");
    }
    std::vector<std::size_t> new_index;
    std::vector<std::string> labels;
    std::unordered_map<std::size_t, std::size_t> seen;
    new_index.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        auto [it, inserted] = seen.try_emplace(f[v], seen.size());
        if (inserted) labels.push_back(std::to_string(f[v]));
        new_index.push_back(it->second);
    }
    std::vector<std::size_t> assignment(theta.domain_size());
    for (std::size_t p = 0; p < assignment.size(); ++p) assignment[p] = new_index[theta(p)];
    return ConceptualVariable(std::move(name), theta.domain(), std::move(labels), std::move(assignment));
}

VariableFamily::VariableFamily(std::vector<ConceptualVariable> generators, bool inaccessible_total)
    : generators_(std::move(generators)), inaccessible_total_(inaccessible_total) {
    for (const auto& g : generators_) {
        require_same_domain(generators_.front(), g);
        if (inaccessible_total_ && g.is_identity() && g.domain_size() > 1) {
            throw DomainError("generator '" + g.name() +
                              "' equals the total variable, which the family declares inaccessible");
        }
    }
}

const SpaceRef& VariableFamily::domain() const {
    if (generators_.empty()) throw PreconditionError("empty variable family has no domain");
    return generators_.front().domain();
}

bool dominates(const ConceptualVariable& theta, const ConceptualVariable& lambda) {
    require_same_domain(theta, lambda);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> f(lambda.value_count(), unset);
    for (std::size_t p = 0; p < theta.domain_size(); ++p) {
        std::size_t& image = f[lambda(p)];
        if (image == unset) {
            image = theta(p);
        } else if (image != theta(p)) {
            return false;
        }
    }
    return true;
}

bool strictly_dominated(const ConceptualVariable& theta, const ConceptualVariable& lambda) {
    return dominates(theta, lambda) && !dominates(lambda, theta);
}

bool is_accessible(const ConceptualVariable& theta, const VariableFamily& family) {
    return std::any_of(family.generators().begin(), family.generators().end(),
                       [&](const ConceptualVariable& g) { return dominates(theta, g); });
}

std::vector<ConceptualVariable> maximal_accessible(const VariableFamily& family) {
    if (family.empty()) throw PreconditionError("maximal_accessible: empty family");
    std::vector<ConceptualVariable> out;
    for (const auto& candidate : family.generators()) {
        bool dominated = std::any_of(family.generators().begin(), family.generators().end(),
                                     [&](const ConceptualVariable& other) {
                                         return strictly_dominated(candidate, other);
                                     });
        if (dominated) continue;
        if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(candidate);
    }
    return out;
}

bool is_maximal_in(const ConceptualVariable& theta, const VariableFamily& family) {
    auto maximal = maximal_accessible(family);
    return std::find(maximal.begin(), maximal.end(), theta) != maximal.end();
}

}  // namespace cvq
