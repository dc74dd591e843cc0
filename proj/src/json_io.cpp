#include "egh/json_io.hpp"

#include "egh/errors.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace egh::io {

namespace {

namespace fs = std::filesystem;

// DOM builder that stores every float literal as its source text, so exact
// mode can parse decimals without a detour through binary doubles. Containers
// only mutate while on top of the stack, so parent addresses stay valid.
class PreservingSax : public nlohmann::json_sax<json> {
public:
    json result;

    bool null() override { return emplace(json(nullptr)); }
    bool boolean(bool v) override { return emplace(json(v)); }
    bool number_integer(number_integer_t v) override { return emplace(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return emplace(json(v)); }
    bool number_float(number_float_t, const string_t& s) override { return emplace(json(s)); }
    bool string(string_t& v) override { return emplace(json(v)); }
    bool binary(binary_t&) override {
        throw StructuralError("binary values are not part of any schema");
    }
    bool start_object(std::size_t) override {
        stack_.push_back(insert(json::object()));
        return true;
    }
    bool key(string_t& v) override {
        key_ = v;
        has_key_ = true;
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        stack_.push_back(insert(json::array()));
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw StructuralError("JSON parse error at byte " + std::to_string(position) + ": " +
                              ex.what());
    }

private:
    json* insert(json&& value) {
        if (stack_.empty()) {
            result = std::move(value);
            return &result;
        }
        json& top = *stack_.back();
        if (top.is_object()) {
            if (!has_key_) throw StructuralError("object value without a key");
            has_key_ = false;
            return &(top[key_] = std::move(value));
        }
        top.push_back(std::move(value));
        return &top.back();
    }

    bool emplace(json&& value) {
        insert(std::move(value));
        return true;
    }

    std::vector<json*> stack_;
    std::string key_;
    bool has_key_ = false;
};

const json& require(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw StructuralError("missing required key '" + key + "'");
    return j.at(key);
}

void check_format(const json& j) {
    if (j.is_object() && j.contains("format")) {
        const long long v = int_from_json(j.at("format"), "format");
        if (v != format_version)
            throw StructuralError("unsupported format version " + std::to_string(v));
    }
}

std::vector<int> int_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw StructuralError(what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(static_cast<int>(int_from_json(v, what)));
    return out;
}

json int_array_to_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

} // namespace

json parse_text(const std::string& text, bool preserve_numbers) {
    if (!preserve_numbers) {
        try {
            return json::parse(text);
        } catch (const nlohmann::detail::exception& ex) {
            throw StructuralError(std::string("JSON parse error: ") + ex.what());
        }
    }
    PreservingSax sax;
    json::sax_parse(text, &sax);
    return std::move(sax.result);
}

json load_file(const std::filesystem::path& path, bool preserve_numbers) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), preserve_numbers);
}

void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StructuralError("cannot write '" + path.string() + "'");
    out << j.dump(2) << "\n";
}

long long int_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_number_unsigned()) return static_cast<long long>(j.get<unsigned long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const json::string_t&>();
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw StructuralError(what + ": '" + s + "' is not an integer");
    }
    throw StructuralError(what + " must be an integer");
}

template <class S>
S scalar_from_json(const json& j) {
    if (j.is_string()) return scalar_from_string<S>(j.get_ref<const json::string_t&>());
    if (j.is_number_integer()) return S(j.get<long long>());
    if (j.is_number_unsigned()) return S(static_cast<long long>(j.get<unsigned long long>()));
    if (j.is_number_float()) {
        if constexpr (scalar_traits<S>::exact)
            return rational_from_double(j.get<double>());
        else
            return j.get<double>();
    }
    throw StructuralError("expected a number");
}

template <>
json scalar_to_json<double>(const double& v) {
    return json(v);
}

template <>
json scalar_to_json<Rational>(const Rational& v) {
    return json(rational_to_string(v));
}

template <class S>
SpaceT<S> space_from_json(const json& j) {
    check_format(j);
    const json& dist = require(j, "dist");
    if (!dist.is_array() || dist.empty())
        throw StructuralError("dist must be a nonempty array of rows");
    const std::size_t n = dist.size();
    SquareTable<S> table(n, S{});
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = dist.at(i);
        if (!row.is_array() || row.size() != n)
            throw StructuralError("dist row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
        for (std::size_t k = 0; k < n; ++k) table(i, k) = scalar_from_json<S>(row.at(k));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& raw = j.at("labels");
        if (!raw.is_array()) throw StructuralError("labels must be an array");
        for (const auto& l : raw) {
            if (!l.is_string()) throw StructuralError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != n)
            throw StructuralError("label count does not match the distance table");
    } else {
        labels = default_labels(n);
    }
    return SpaceT<S>{std::move(labels), std::move(table)};
}

template <class S>
json space_to_json(const SpaceT<S>& space) {
    json j;
    j["format"] = format_version;
    j["labels"] = space.labels;
    json rows = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < space.size(); ++k) row.push_back(scalar_to_json<S>(space.d(i, k)));
        rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    return j;
}

namespace {

template <class S>
SpaceT<S> valid_space_from_json(const json& j, const fs::path& base) {
    json resolved = j;
    if (j.is_string()) {
        const fs::path ref = base / j.get<std::string>();
        resolved = load_file(ref, scalar_traits<S>::exact);
    }
    SpaceT<S> space = space_from_json<S>(resolved);
    return make_space(std::move(space.labels), std::move(space.dist));
}

template <class S>
Group perms_to_group(const json& perms, const SpaceT<S>& space) {
    if (!perms.is_array()) throw StructuralError("perms must be an array of permutations");
    std::vector<Perm> generators;
    for (std::size_t p = 0; p < perms.size(); ++p) {
        Perm perm;
        for (const auto& v : perms.at(p))
            perm.push_back(static_cast<int>(int_from_json(v, "perm entry")));
        if (!is_permutation(perm, space.size()))
            throw StructuralError("perm " + std::to_string(p) +
                                  " is not a permutation of the space's points");
        if (!preserves_distances(perm, space))
            throw StructuralError("perm " + std::to_string(p) + " does not preserve distances");
        generators.push_back(std::move(perm));
    }
    return group_closure(std::move(generators), space.size());
}

} // namespace

template <class S>
PairPtr<S> pair_from_json(const json& j, const std::filesystem::path& base) {
    if (j.is_string()) {
        const fs::path ref = base / j.get<std::string>();
        return pair_from_json<S>(load_file(ref, scalar_traits<S>::exact), ref.parent_path());
    }
    if (!j.is_object()) throw StructuralError("pair must be an object or a path");
    check_format(j);

    if (j.contains("dist")) {
        // bare space: pair it with its full isometry group
        SpaceT<S> space = valid_space_from_json<S>(j, base);
        return make_action_pair_full(std::move(space));
    }
    if (j.contains("perms")) {
        SpaceT<S> space = valid_space_from_json<S>(require(j, "space"), base);
        Group group = perms_to_group(j.at("perms"), space);
        return make_action_pair(std::move(space), std::move(group));
    }
    if (!j.contains("space")) throw StructuralError("pair needs a 'space' (or 'dist') entry");

    SpaceT<S> space = valid_space_from_json<S>(j.at("space"), base);
    if (!j.contains("group")) return make_action_pair_full(std::move(space));

    const json& g = j.at("group");
    if (g.is_string()) {
        const std::string& tag = g.get_ref<const json::string_t&>();
        if (tag == "full") return make_action_pair_full(std::move(space));
        if (tag == "trivial") return make_action_pair_trivial(std::move(space));
        const fs::path ref = base / tag;
        const json loaded = load_file(ref, scalar_traits<S>::exact);
        Group group = perms_to_group(require(loaded, "perms"), space);
        return make_action_pair(std::move(space), std::move(group));
    }
    if (g.is_array()) {
        Group group = perms_to_group(g, space);
        return make_action_pair(std::move(space), std::move(group));
    }
    if (g.is_object()) {
        Group group = perms_to_group(require(g, "perms"), space);
        return make_action_pair(std::move(space), std::move(group));
    }
    throw StructuralError("unrecognized 'group' entry");
}

template <class S>
json pair_to_json(const ActionPairT<S>& pair) {
    json j;
    j["format"] = format_version;
    j["space"] = space_to_json(pair.space);
    json perms = json::array();
    for (const auto& p : pair.group.elements) perms.push_back(int_array_to_json(p));
    j["perms"] = std::move(perms);
    return j;
}

template <class S>
TripleT<S> triple_from_json(const json& j, const std::filesystem::path& base) {
    check_format(j);
    PairPtr<S> dom = pair_from_json<S>(require(j, "domain"), base);
    PairPtr<S> cod = pair_from_json<S>(require(j, "codomain"), base);
    return make_triple<S>(std::move(dom), std::move(cod), int_array(require(j, "f"), "f"),
                          int_array(require(j, "theta"), "theta"),
                          int_array(require(j, "psi"), "psi"));
}

template <class S>
json triple_to_json(const TripleT<S>& t, bool embed_pairs) {
    json j;
    j["format"] = format_version;
    if (embed_pairs) {
        j["domain"] = pair_to_json(*t.dom);
        j["codomain"] = pair_to_json(*t.cod);
    }
    j["f"] = int_array_to_json(t.f);
    j["theta"] = int_array_to_json(t.theta);
    j["psi"] = int_array_to_json(t.psi);
    j["order"] = scalar_to_json<S>(t.order());
    j["components"] = {{"distortion", scalar_to_json<S>(t.score.distortion)},
                       {"covering", scalar_to_json<S>(t.score.covering)},
                       {"theta_defect", scalar_to_json<S>(t.score.theta_defect)},
                       {"psi_defect", scalar_to_json<S>(t.score.psi_defect)}};
    return j;
}

std::vector<int> group_map_from_json(const json& j) {
    if (j.is_array()) return int_array(j, "group map");
    if (j.is_object()) {
        if (j.contains("theta2")) return int_array(j.at("theta2"), "theta2");
        if (j.contains("theta")) return int_array(j.at("theta"), "theta");
    }
    throw StructuralError("expected a group map: an array or an object with 'theta'/'theta2'");
}

template <class S>
json check_to_json(const BoundCheck<S>& c) {
    json j;
    j["name"] = c.name;
    j["measured"] = scalar_to_json<S>(c.measured);
    j["ceiling"] = scalar_to_json<S>(c.ceiling);
    j["pass"] = c.pass;
    return j;
}

template <class S>
json validation_to_json(const ValidationReport& report) {
    json j;
    j["format"] = format_version;
    j["kind"] = "validation";
    j["mode"] = scalar_traits<S>::mode_name();
    j["valid"] = report.valid();
    json violations = json::array();
    for (const auto& v : report.violations) {
        json entry;
        entry["axiom"] = axiom_name(v.axiom);
        entry["i"] = v.i;
        entry["j"] = v.j;
        if (v.axiom == Axiom::triangle) entry["via"] = v.via;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j;
}

template <class S>
json group_report_to_json(const ActionPairT<S>& pair) {
    json j;
    j["format"] = format_version;
    j["kind"] = "isometry-group";
    j["mode"] = scalar_traits<S>::mode_name();
    j["order"] = pair.group.order();
    json perms = json::array();
    for (const auto& p : pair.group.elements) perms.push_back(int_array_to_json(p));
    j["perms"] = std::move(perms);
    return j;
}

template <class S>
json triple_report_to_json(const TripleT<S>& t) {
    json j;
    j["format"] = format_version;
    j["kind"] = "triple-certificate";
    j["mode"] = scalar_traits<S>::mode_name();
    j["order"] = scalar_to_json<S>(t.order());
    j["components"] = triple_to_json(t, false).at("components");
    return j;
}

template <class S>
json theta_certificate_to_json(const ThetaCertificate<S>& c) {
    json j;
    j["format"] = format_version;
    j["kind"] = "theta-certificate";
    j["epsilon"] = scalar_to_json<S>(c.epsilon);
    j["checks"] = json::array({check_to_json(c.covering), check_to_json(c.upper_distortion),
                               check_to_json(c.lower_distortion)});
    j["pass"] = c.pass();
    return j;
}

template <class S>
json perturb_certificate_to_json(const PerturbCertificate<S>& c) {
    json j;
    j["format"] = format_version;
    j["kind"] = "perturbed-theta-certificate";
    j["epsilon"] = scalar_to_json<S>(c.epsilon);
    j["theta_distance"] = scalar_to_json<S>(c.theta_distance);
    j["checks"] = json::array({check_to_json(c.order), check_to_json(c.covering),
                               check_to_json(c.upper_distortion),
                               check_to_json(c.lower_distortion)});
    j["pass"] = c.pass();
    return j;
}

template <class S>
json inverse_to_json(const InverseResult<S>& r) {
    json j;
    j["format"] = format_version;
    j["kind"] = "almost-inverse";
    j["epsilon"] = scalar_to_json<S>(r.epsilon);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    j["pass"] = r.pass();
    j["inverse"] = triple_to_json(r.inverse, true);
    return j;
}

template <class S>
json compose_to_json(const ComposeResult<S>& r) {
    json j;
    j["format"] = format_version;
    j["kind"] = "composed-triple";
    j["check"] = check_to_json(r.order);
    j["pass"] = r.pass();
    j["triple"] = triple_to_json(r.composed, true);
    return j;
}

template <class S>
json distance_to_json(const DistanceCertificate<S>& c, const SearchConfig& cfg) {
    json j;
    j["format"] = format_version;
    j["kind"] = "egh-distance";
    j["mode"] = scalar_traits<S>::mode_name();
    j["search"] = {{"mode", cfg.mode == SearchMode::exact ? "exact" : "upper_bound"},
                   {"max_nodes", cfg.max_nodes},
                   {"prune_margin", cfg.prune_margin},
                   {"symmetry_reduction", cfg.symmetry_reduction}};
    j["value"] = scalar_to_json<S>(c.value);
    j["optimal"] = c.optimal;
    j["nodes_forward"] = c.nodes_forward;
    j["nodes_backward"] = c.nodes_backward;
    j["witness_forward"] = triple_to_json(c.witness_forward, true);
    j["witness_backward"] = triple_to_json(c.witness_backward, true);
    return j;
}

template <class S>
json repair_to_json(const RepairResult<S>& r) {
    json j;
    j["format"] = format_version;
    j["kind"] = "basepoint-repair";
    j["original_order"] = scalar_to_json<S>(r.original_order);
    j["measured_order"] = scalar_to_json<S>(r.measured.order());
    j["measured"] = {{"distortion", scalar_to_json<S>(r.measured.distortion)},
                     {"covering", scalar_to_json<S>(r.measured.covering)}};
    j["checks"] = json::array({check_to_json(r.upper_spread), check_to_json(r.lower_spread),
                               check_to_json(r.order)});
    j["pass"] = r.pass();
    j["f"] = int_array_to_json(r.repaired);
    return j;
}

template <class S>
json quotient_to_json(const QuotientSpaceT<S>& q) {
    json j;
    j["format"] = format_version;
    j["kind"] = "quotient-space";
    json classes = json::array();
    for (const auto& members : q.classes) classes.push_back(int_array_to_json(members));
    j["classes"] = std::move(classes);
    j["space"] = space_to_json(q.space);
    return j;
}

template <class S>
json coset_space_to_json(const CosetSpace<S>& c) {
    json j = quotient_to_json(c.quotient);
    j["kind"] = "coset-space";
    j["subgroup"] = int_array_to_json(c.subgroup);
    j["gap"] = c.gap ? scalar_to_json<S>(*c.gap) : json(nullptr);
    return j;
}

template <class S>
json coset_map_to_json(const CosetMapReport<S>& r) {
    json j;
    j["format"] = format_version;
    j["kind"] = "induced-coset-map";
    j["map"] = int_array_to_json(r.map);
    j["well_defined"] = r.well_defined;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    if (r.split) {
        const auto& s = *r.split;
        j["split"] = {{"class", s[0]}, {"g1", s[1]}, {"g2", s[2]}, {"target1", s[3]},
                      {"target2", s[4]}};
    } else {
        j["split"] = nullptr;
    }
    j["theta_covering"] = scalar_to_json<S>(r.theta_covering);
    j["gap"] = r.gap ? scalar_to_json<S>(*r.gap) : json(nullptr);
    j["epsilon"] = r.epsilon ? scalar_to_json<S>(*r.epsilon) : json(nullptr);
    j["guaranteed_by_epsilon"] = r.guaranteed_by_epsilon;
    j["guaranteed_by_covering"] = r.guaranteed_by_covering;
    return j;
}

json smooth_to_json(const SmoothResult& r, const NetSpec& net, const BumpSpec& bump) {
    json j;
    j["format"] = format_version;
    j["kind"] = "smoothed-theta";
    j["epsilon"] = r.epsilon;
    j["measured_distance"] = r.measured_distance;
    j["ceiling_check"] = check_to_json(r.ceiling);
    j["net"] = {{"centers", int_array_to_json(net.centers)}, {"radius", net.radius}};
    j["bump"] = {{"cutoff", bump.cutoff}, {"profile", bump_profile_name(bump.profile)}};
    j["recertifiable"] = r.recertifiable;
    j["recertification"] =
        r.recertification ? perturb_certificate_to_json(*r.recertification) : json(nullptr);
    j["theta2"] = int_array_to_json(r.theta2);
    j["pass"] = r.pass();
    return j;
}

ConvergenceScenario scenario_from_json(const json& j, const std::filesystem::path& base) {
    check_format(j);
    ConvergenceScenario s;
    s.limit = pair_from_json<double>(require(j, "limit"), base);
    const json& schedule = require(j, "schedule");
    if (!schedule.is_array()) throw StructuralError("schedule must be an array");
    for (const auto& v : schedule) s.schedule.push_back(scalar_from_json<double>(v));
    if (j.contains("seed"))
        s.seed = static_cast<std::uint64_t>(int_from_json(j.at("seed"), "seed"));
    if (j.contains("subgroup")) s.subgroup = int_array(j.at("subgroup"), "subgroup");
    if (j.contains("preserve_symmetry")) {
        if (!j.at("preserve_symmetry").is_boolean())
            throw StructuralError("preserve_symmetry must be a boolean");
        s.preserve_symmetry = j.at("preserve_symmetry").get<bool>();
    }
    if (j.contains("budget"))
        s.solver.max_nodes = static_cast<std::uint64_t>(int_from_json(j.at("budget"), "budget"));
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "exact")
            s.solver.mode = SearchMode::exact;
        else if (mode == "bound" || mode == "upper_bound")
            s.solver.mode = SearchMode::upper_bound;
        else
            throw StructuralError("unknown solver mode '" + mode + "'");
    }
    return s;
}

namespace {

json step_to_json(const ScenarioStep& s) {
    json j;
    j["k"] = s.k;
    j["delta"] = s.delta;
    j["epsilon"] = s.epsilon;
    j["witness_order"] = s.witness_order;
    j["optimal"] = s.optimal;
    j["perturb_deviation"] = s.perturb_deviation;
    j["group_preserved"] = s.group_preserved;
    j["group_order"] = s.group_order;
    j["theta_defects"] = {{"covering", s.theta_covering},
                          {"upper_distortion", s.theta_upper},
                          {"lower_distortion", s.theta_lower}};
    j["theta_pass"] = s.theta_pass;
    j["coset_checked"] = s.coset_checked;
    j["gap"] = s.gap_defined ? json(s.gap) : json(nullptr);
    j["surjective"] = s.surjective;
    j["guaranteed_by_epsilon"] = s.guaranteed_by_epsilon;
    j["guaranteed_by_covering"] = s.guaranteed_by_covering;
    j["orbit_gh"] = s.orbit_gh;
    j["event"] = s.event;
    return j;
}

} // namespace

json scenario_report_to_json(const ScenarioReport& r) {
    json j;
    j["format"] = format_version;
    j["kind"] = "scenario-report";
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back(step_to_json(s));
    j["steps"] = std::move(steps);
    json thresholds = json::array();
    for (const auto& t : r.thresholds)
        thresholds.push_back({{"threshold", t.threshold}, {"attained_from", t.attained_from}});
    j["thresholds"] = std::move(thresholds);
    j["thresholds_pass"] = r.thresholds_pass;
    j["ceilings_pass"] = r.ceilings_pass;
    j["surjectivity_pass"] = r.surjectivity_pass;
    j["pass"] = r.pass();
    return j;
}

std::string scenario_report_csv(const ScenarioReport& r) {
    std::ostringstream out;
    out << "k,delta,epsilon,theta_defect,gap,verdict,surjective\n";
    out << std::setprecision(12);
    for (const auto& s : r.steps) {
        double defect = s.theta_covering;
        if (s.theta_upper > defect) defect = s.theta_upper;
        if (s.theta_lower > defect) defect = s.theta_lower;
        out << s.k << "," << s.delta << "," << s.epsilon << "," << defect << ",";
        if (s.gap_defined)
            out << s.gap;
        else
            out << "inf";
        out << ",";
        if (!s.coset_checked)
            out << "skipped";
        else
            out << (s.guaranteed_by_epsilon ? "stable" : "unstable");
        out << "," << (s.surjective ? 1 : 0) << "\n";
    }
    return out.str();
}

#define EGH_IO_INSTANTIATE(S)                                                                      \
    template S scalar_from_json<S>(const json&);                                                   \
    template SpaceT<S> space_from_json<S>(const json&);                                            \
    template json space_to_json<S>(const SpaceT<S>&);                                              \
    template PairPtr<S> pair_from_json<S>(const json&, const std::filesystem::path&);              \
    template json pair_to_json<S>(const ActionPairT<S>&);                                          \
    template TripleT<S> triple_from_json<S>(const json&, const std::filesystem::path&);            \
    template json triple_to_json<S>(const TripleT<S>&, bool);                                      \
    template json check_to_json<S>(const BoundCheck<S>&);                                          \
    template json validation_to_json<S>(const ValidationReport&);                                  \
    template json group_report_to_json<S>(const ActionPairT<S>&);                                  \
    template json triple_report_to_json<S>(const TripleT<S>&);                                     \
    template json inverse_to_json<S>(const InverseResult<S>&);                                     \
    template json theta_certificate_to_json<S>(const ThetaCertificate<S>&);                        \
    template json perturb_certificate_to_json<S>(const PerturbCertificate<S>&);                    \
    template json compose_to_json<S>(const ComposeResult<S>&);                                     \
    template json distance_to_json<S>(const DistanceCertificate<S>&, const SearchConfig&);         \
    template json repair_to_json<S>(const RepairResult<S>&);                                       \
    template json quotient_to_json<S>(const QuotientSpaceT<S>&);                                   \
    template json coset_space_to_json<S>(const CosetSpace<S>&);                                    \
    template json coset_map_to_json<S>(const CosetMapReport<S>&);

EGH_IO_INSTANTIATE(double)
EGH_IO_INSTANTIATE(Rational)
#undef EGH_IO_INSTANTIATE

} // namespace egh::io
