#include "cvq/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cvq {

ScenarioError::ScenarioError(std::string location, const std::string& message)
    : Error((location.empty() ? std::string("/") : location) + ": " + message), location_(std::move(location)) {}

const ConceptualVariable& Scenario::variable(const std::string& name) const {
    for (const auto& v : variables) {
        if (v.name() == name) return v;
    }
    throw DomainError("unknown variable '" + name + "'");
}

const GroupRef& Scenario::group(const std::string& name) const {
    for (const auto& g : groups) {
        if (g.name == name) return g.group;
    }
    throw DomainError("unknown group '" + name + "'");
}

const NamedRep& Scenario::representation(const std::string& name) const {
    for (const auto& r : representations) {
        if (r.name == name) return r;
    }
    throw DomainError("unknown representation '" + name + "'");
}

VariableFamily Scenario::accessible_family() const {
    if (family.empty()) return VariableFamily(variables, inaccessible_total);
    std::vector<ConceptualVariable> gens;
    for (const auto& name : family) gens.push_back(variable(name));
    return VariableFamily(std::move(gens), inaccessible_total);
}

namespace {

/// A JSON value together with its pointer, for location-bearing errors.
struct Node {
    const Json& j;
    std::string path;

    [[noreturn]] void fail(const std::string& message) const { throw ScenarioError(path, message); }

    bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
    Node at(const std::string& key) const {
        if (!j.is_object()) fail("expected an object");
        if (!j.contains(key)) fail("missing field '" + key + "'");
        return {j.at(key), path + "/" + key};
    }
    Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }
    std::size_t size() const { return j.size(); }

    const Json& object() const {
        if (!j.is_object()) fail("expected an object");
        return j;
    }
    const Json& array() const {
        if (!j.is_array()) fail("expected an array");
        return j;
    }
    std::string str() const {
        if (!j.is_string()) fail("expected a string");
        return j.get<std::string>();
    }
    bool boolean() const {
        if (!j.is_boolean()) fail("expected true or false");
        return j.get<bool>();
    }
    double number() const {
        if (!j.is_number()) fail("expected a number");
        return j.get<double>();
    }
    std::size_t index() const {
        if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
            fail("expected a non-negative integer");
        }
        return j.get<std::size_t>();
    }
    std::vector<std::string> strings() const {
        array();
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).str());
        return out;
    }
    std::vector<std::size_t> indices() const {
        array();
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).index());
        return out;
    }
    void only(std::initializer_list<const char*> keys) const {
        for (const auto& [key, value] : object().items()) {
            if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
                fail("unknown field '" + key + "'");
            }
        }
    }
};

Complex parse_complex(const Node& n) {
    if (n.j.is_number()) return {n.number(), 0.0};
    n.array();
    if (n.size() != 2) n.fail("complex numbers are written as [re, im]");
    return {n.at(std::size_t{0}).number(), n.at(std::size_t{1}).number()};
}

StateVector parse_state(const Node& n) {
    n.array();
    if (n.size() == 0) n.fail("empty state vector");
    StateVector v(static_cast<Eigen::Index>(n.size()));
    for (std::size_t i = 0; i < n.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(n.at(i));
    return v;
}

ComplexMatrix parse_matrix(const Node& n) {
    n.array();
    const std::size_t rows = n.size();
    if (rows == 0) n.fail("empty matrix");
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        Node row = n.at(r);
        row.array();
        if (row.size() != rows) row.fail("matrix must be square with " + std::to_string(rows) + " columns");
        for (std::size_t c = 0; c < rows; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(row.at(c));
        }
    }
    return m;
}

template <class F>
auto wrap(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        n.fail(e.what());
    }
}

SpaceRef parse_space(const Node& n) {
    n.only({"id", "labels", "size"});
    std::string id = n.has("id") ? n.at("id").str() : "omega";
    if (n.has("labels") == n.has("size")) n.fail("space needs exactly one of 'labels' or 'size'");
    if (n.has("size")) {
        std::size_t size = n.at("size").index();
        if (size == 0) n.at("size").fail("space must have at least one point");
        return PointSpace::range(id, size);
    }
    auto labels = n.at("labels").strings();
    return wrap(n.at("labels"), [&] { return std::make_shared<const PointSpace>(id, std::move(labels)); });
}

ConceptualVariable parse_variable(const Node& n, const SpaceRef& space) {
    n.only({"name", "values", "assignment", "blocks", "labels", "identity", "constant"});
    std::string name = n.at("name").str();
    int forms = n.has("assignment") + n.has("blocks") + n.has("identity") + n.has("constant");
    if (forms != 1) n.fail("variable '" + name + "' needs exactly one of assignment, blocks, identity, constant");
    if (n.has("identity")) {
        if (!n.at("identity").boolean()) n.at("identity").fail("identity must be true when present");
        return ConceptualVariable::identity(name, space);
    }
    if (n.has("constant")) {
        if (!n.at("constant").boolean()) n.at("constant").fail("constant must be true when present");
        return ConceptualVariable::constant(name, space);
    }
    if (n.has("blocks")) {
        Node blocks = n.at("blocks");
        blocks.array();
        std::vector<std::vector<std::size_t>> parts;
        for (std::size_t i = 0; i < blocks.size(); ++i) parts.push_back(blocks.at(i).indices());
        std::vector<std::string> labels = n.has("labels") ? n.at("labels").strings() : std::vector<std::string>{};
        return wrap(blocks, [&] { return ConceptualVariable::from_blocks(name, space, parts, labels); });
    }
    auto assignment = n.at("assignment").indices();
    std::vector<std::string> values;
    if (n.has("values")) {
        values = n.at("values").strings();
    } else {
        std::size_t count = assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
        for (std::size_t v = 0; v < count; ++v) values.push_back(std::to_string(v));
    }
    return wrap(n.at("assignment"), [&] { return ConceptualVariable(name, space, values, assignment); });
}

Permutation parse_permutation(const Node& n, std::size_t degree) {
    auto images = n.indices();
    if (images.size() != degree) n.fail("permutation must list " + std::to_string(degree) + " images");
    std::vector<std::uint32_t> narrow(images.begin(), images.end());
    return wrap(n, [&] { return Permutation(std::move(narrow)); });
}

GroupRef parse_group(const Node& n, const SpaceRef& space) {
    n.only({"name", "generators", "kind"});
    if (n.has("kind") == n.has("generators")) n.fail("group needs exactly one of 'generators' or 'kind'");
    if (n.has("kind")) {
        Node kind = n.at("kind");
        std::string k = kind.str();
        return wrap(kind, [&]() -> GroupRef {
            if (k == "cyclic") return std::make_shared<const PermutationGroup>(cyclic_shift_group(space));
            if (k == "symmetric") return std::make_shared<const PermutationGroup>(symmetric_group(space));
            if (k == "trivial") return make_group(space, {});
            kind.fail("unknown group kind '" + k + "' (cyclic, symmetric, trivial)");
        });
    }
    Node gens = n.at("generators");
    gens.array();
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) perms.push_back(parse_permutation(gens.at(i), space->size()));
    return wrap(gens, [&] { return make_group(space, std::move(perms)); });
}

/// Matrices for the generators, extended to every element along the closure.
UnitaryRep explicit_rep(const Node& n, const GroupRef& group) {
    Node mats = n.at("generators");
    mats.array();
    const auto& gens = group->generators();
    if (mats.size() != gens.size()) {
        mats.fail("one matrix per group generator required (" + std::to_string(gens.size()) + ")");
    }
    std::vector<ComplexMatrix> gm;
    for (std::size_t i = 0; i < mats.size(); ++i) gm.push_back(parse_matrix(mats.at(i)));
    const Eigen::Index dim = gm.empty() ? (n.has("dim") ? static_cast<Eigen::Index>(n.at("dim").index()) : 1)
                                        : gm.front().rows();
    for (std::size_t i = 0; i < gm.size(); ++i) {
        if (gm[i].rows() != dim) mats.at(i).fail("generator matrices differ in dimension");
    }
    UnitaryRep rep{group, static_cast<std::size_t>(dim), {}};
    std::vector<std::optional<ComplexMatrix>> m(group->order());
    m[0] = ComplexMatrix::Identity(dim, dim);
    std::vector<std::size_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::size_t next = *group->index_of(group->element(queue[head]) * gens[g]);
            if (m[next]) continue;
            m[next] = (*m[queue[head]]) * gm[g];
            queue.push_back(next);
        }
    }
    for (auto& x : m) rep.matrices.push_back(std::move(*x));
    return rep;
}

NamedRep parse_rep(const Node& n, const Scenario& s) {
    n.only({"name", "group", "kind", "n", "generators", "dim"});
    NamedRep out;
    out.name = n.at("name").str();
    out.kind = n.at("kind").str();
    out.group = n.at("group").str();
    const GroupRef& group = wrap(n.at("group"), [&]() -> const GroupRef& { return s.group(out.group); });
    Node kind = n.at("kind");
    out.rep = wrap(kind, [&]() -> UnitaryRep {
        if (out.kind == "qubit") return rebind(qubit_rep(), group);
        if (out.kind == "cyclic-dft") return rebind(cyclic_dft_rep(n.at("n").index()), group);
        if (out.kind == "permutation") return permutation_rep(group);
        if (out.kind == "explicit") return explicit_rep(n, group);
        kind.fail("unknown representation kind '" + out.kind + "' (qubit, cyclic-dft, permutation, explicit)");
    });
    return out;
}

Tolerances parse_tolerances(const Node& n) {
    Tolerances t;
    const std::map<std::string, double*> fields{
        {"hermitian", &t.hermitian},         {"unitary", &t.unitary},
        {"reconstruction", &t.reconstruction}, {"degeneracy_gap", &t.degeneracy_gap},
        {"projective", &t.projective},       {"distinct_states", &t.distinct_states},
        {"overlap", &t.overlap},             {"orthogonality", &t.orthogonality},
        {"eigenvalue", &t.eigenvalue},       {"conjugation", &t.conjugation},
        {"expansion", &t.expansion},         {"commutant", &t.commutant},
        {"singlet", &t.singlet}};
    for (const auto& [key, value] : n.object().items()) {
        auto it = fields.find(key);
        if (it == fields.end()) n.fail("unknown tolerance '" + key + "'");
        double x = n.at(key).number();
        if (!(x > 0.0)) n.at(key).fail("tolerances must be positive");
        *it->second = x;
    }
    return t;
}

enum class Field { Var, VarList, Group, Rep, State, Uint, Number, Bool, String, Op, Real3 };

struct FieldSpec {
    const char* key;
    Field type;
    bool required;
};

const std::vector<std::pair<std::string, std::vector<FieldSpec>>>& check_schema() {
    static const std::vector<std::pair<std::string, std::vector<FieldSpec>>> schema{
        {"permissibility", {{"variable", Field::Var, true}, {"group", Field::Group, true}, {"expect", Field::Bool, false}}},
        {"induced-group", {{"variable", Field::Var, true}, {"group", Field::Group, true}}},
        {"theorem1-hypotheses",
         {{"variable", Field::Var, true},
          {"representation", Field::Rep, true},
          {"base", Field::State, true},
          {"base_point", Field::Uint, false},
          {"refinement", Field::Var, false}}},
        {"theorem2",
         {{"variable", Field::Var, true},
          {"representation", Field::Rep, true},
          {"base", Field::State, true},
          {"base_point", Field::Uint, false}}},
        {"eq1-expansion",
         {{"target", Field::Op, true},
          {"basis", Field::Op, true},
          {"target_eigenvalue", Field::Number, false},
          {"target_index", Field::Uint, false},
          {"expect", Field::State, false}}},
        {"singlet-delta",
         {{"directions", Field::Uint, false},
          {"seed", Field::Uint, false},
          {"literature_triplet_value", Field::Number, false}}},
        {"a1-search",
         {{"theta", Field::Var, true},
          {"eta", Field::Var, true},
          {"group", Field::Group, true},
          {"thoughts", Field::VarList, false},
          {"all_shapes", Field::Bool, false},
          {"expect", Field::String, false}}},
        {"a2-classify",
         {{"thoughts", Field::VarList, true}, {"group", Field::Group, true}, {"expect", Field::String, false}}},
        {"a2-falsify", {{"max_n", Field::Uint, false}, {"budget_seconds", Field::Number, false}}},
        {"proof-group-construction",
         {{"theta", Field::Var, true},
          {"lambda", Field::Var, true},
          {"xi", Field::Var, true},
          {"group", Field::Group, false},
          {"thoughts", Field::VarList, false},
          {"max_order", Field::Uint, false},
          {"expect", Field::Bool, false}}},
    };
    return schema;
}

void check_reference(const Node& n, const Scenario& s, Field type, std::size_t dim_hint);

void check_operator_spec(const Node& n, const Scenario& s) {
    n.only({"name", "spin", "variable", "representation", "base", "base_point", "matrix"});
    int forms = n.has("spin") + n.has("variable") + n.has("matrix");
    if (forms != 1) n.fail("operator needs exactly one of 'spin', 'variable', 'matrix'");
    if (n.has("name")) n.at("name").str();
    if (n.has("spin")) check_reference(n.at("spin"), s, Field::Real3, 0);
    if (n.has("matrix")) parse_matrix(n.at("matrix"));
    if (n.has("variable")) {
        check_reference(n.at("variable"), s, Field::Var, 0);
        check_reference(n.at("representation"), s, Field::Rep, 0);
        const auto& rep = s.representation(n.at("representation").str()).rep;
        check_reference(n.at("base"), s, Field::State, rep.dim);
        if (n.has("base_point")) n.at("base_point").index();
    }
}

void check_reference(const Node& n, const Scenario& s, Field type, std::size_t dim_hint) {
    auto resolve = [&](auto&& f) { wrap(n, [&] { f(); return 0; }); };
    switch (type) {
        case Field::Var: {
            auto name = n.str();
            resolve([&] { s.variable(name); });
            break;
        }
        case Field::VarList: {
            n.array();
            for (std::size_t i = 0; i < n.size(); ++i) check_reference(n.at(i), s, Field::Var, 0);
            break;
        }
        case Field::Group: {
            auto name = n.str();
            resolve([&] { s.group(name); });
            break;
        }
        case Field::Rep: {
            auto name = n.str();
            resolve([&] { s.representation(name); });
            break;
        }
        case Field::State: {
            auto v = parse_state(n);
            if (dim_hint && static_cast<std::size_t>(v.size()) != dim_hint) {
                n.fail("state has dimension " + std::to_string(v.size()) + ", representation has " +
                       std::to_string(dim_hint));
            }
            break;
        }
        case Field::Uint: n.index(); break;
        case Field::Number: n.number(); break;
        case Field::Bool: n.boolean(); break;
        case Field::String: n.str(); break;
        case Field::Op: check_operator_spec(n, s); break;
        case Field::Real3: {
            n.array();
            if (n.size() != 3) n.fail("direction needs three components");
            for (std::size_t i = 0; i < 3; ++i) n.at(i).number();
            break;
        }
    }
}

CheckSpec parse_check(const Node& n, const Scenario& s) {
    n.object();
    CheckSpec out;
    out.kind = n.at("kind").str();
    out.location = n.path;
    const auto& schema = check_schema();
    auto it = std::find_if(schema.begin(), schema.end(), [&](const auto& e) { return e.first == out.kind; });
    if (it == schema.end()) n.at("kind").fail("unknown check kind '" + out.kind + "'");
    for (const auto& [key, value] : n.j.items()) {
        if (key == "kind" || key == "name" || key == "informational") continue;
        if (std::none_of(it->second.begin(), it->second.end(), [&](const FieldSpec& f) { return key == f.key; })) {
            n.fail("unknown field '" + key + "' for check kind '" + out.kind + "'");
        }
    }
    std::size_t dim = 0;
    if (n.has("representation")) {
        check_reference(n.at("representation"), s, Field::Rep, 0);
        dim = s.representation(n.at("representation").str()).rep.dim;
    }
    for (const auto& f : it->second) {
        if (!n.has(f.key)) {
            if (f.required) n.fail("check kind '" + out.kind + "' needs field '" + f.key + "'");
            continue;
        }
        check_reference(n.at(f.key), s, f.type, dim);
    }
    if (n.has("informational")) n.at("informational").boolean();
    out.name = n.has("name") ? n.at("name").str() : out.kind;
    out.params = n.j;
    return out;
}

std::string syntax_location(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> kinds = [] {
        std::vector<std::string> out;
        for (const auto& [kind, fields] : check_schema()) out.push_back(kind);
        return out;
    }();
    return kinds;
}

Scenario parse_scenario(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ScenarioError(syntax_location(text, e.byte), "invalid JSON");
    }
    Node root{doc, ""};
    root.only({"name", "description", "space", "product", "variables", "groups", "representations", "family",
               "tolerances", "checks"});
    Scenario s;
    s.name = root.at("name").str();
    if (root.has("description")) s.description = root.at("description").str();
    s.space = parse_space(root.at("space"));
    if (root.has("product")) {
        Node p = root.at("product");
        p.only({"first", "second"});
        ProductStructure product{p.at("first").indices(), p.at("second").indices()};
        wrap(p, [&] { product.validate(s.space->size()); return 0; });
        s.product = std::move(product);
    }
    if (root.has("variables")) {
        Node vars = root.at("variables");
        vars.array();
        std::set<std::string> names;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto v = parse_variable(vars.at(i), s.space);
            if (!names.insert(v.name()).second) vars.at(i).fail("duplicate variable name '" + v.name() + "'");
            s.variables.push_back(std::move(v));
        }
    }
    if (root.has("groups")) {
        Node groups = root.at("groups");
        groups.array();
        for (std::size_t i = 0; i < groups.size(); ++i) {
            Node g = groups.at(i);
            std::string name = g.at("name").str();
            if (std::any_of(s.groups.begin(), s.groups.end(), [&](const NamedGroup& x) { return x.name == name; })) {
                g.fail("duplicate group name '" + name + "'");
            }
            s.groups.push_back({name, parse_group(g, s.space)});
        }
    }
    if (root.has("representations")) {
        Node reps = root.at("representations");
        reps.array();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            auto rep = parse_rep(reps.at(i), s);
            if (std::any_of(s.representations.begin(), s.representations.end(),
                            [&](const NamedRep& x) { return x.name == rep.name; })) {
                reps.at(i).fail("duplicate representation name '" + rep.name + "'");
            }
            s.representations.push_back(std::move(rep));
        }
    }
    if (root.has("family")) {
        Node fam = root.at("family");
        fam.only({"generators", "inaccessible_total"});
        Node gens = fam.at("generators");
        check_reference(gens, s, Field::VarList, 0);
        s.family = gens.strings();
        if (fam.has("inaccessible_total")) s.inaccessible_total = fam.at("inaccessible_total").boolean();
    }
    if (!s.variables.empty() || !s.family.empty()) {
        wrap(root.has("family") ? root.at("family") : root, [&] { return s.accessible_family(); });
    }
    if (root.has("tolerances")) s.tolerances = parse_tolerances(root.at("tolerances"));

    Node checks = root.at("checks");
    checks.array();
    if (checks.size() == 0) checks.fail("check list is empty");
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto check = parse_check(checks.at(i), s);
        if (++seen[check.name] > 1) {
            if (checks.at(i).has("name")) checks.at(i).fail("duplicate check name '" + check.name + "'");
            check.name += "-" + std::to_string(seen[check.name]);
        }
        s.checks.push_back(std::move(check));
    }
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("", "cannot open scenario file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

}  // namespace cvq
