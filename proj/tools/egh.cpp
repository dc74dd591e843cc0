#include "egh/errors.hpp"
#include "egh/json_io.hpp"
#include "egh/quotients.hpp"
#include "egh/smoothing.hpp"
#include "egh/solver.hpp"
#include "egh/triples.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace fs = std::filesystem;
using egh::io::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2; // a proved ceiling failed: a bug, not a data problem

struct CommonOptions {
    bool exact = false;
    std::string out;
    std::uint64_t budget = 2'000'000;
    std::string mode = "exact";
    bool no_symmetry_reduction = false;
    std::optional<std::uint64_t> seed;
};

void emit(const json& report, const std::string& out_path) {
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) egh::io::write_file(out_path, report);
}

fs::path base_of(const std::string& file) {
    return fs::path(file).parent_path();
}

egh::SearchConfig search_config(const CommonOptions& opts) {
    egh::SearchConfig cfg;
    cfg.max_nodes = opts.budget;
    cfg.symmetry_reduction = !opts.no_symmetry_reduction;
    if (opts.mode == "exact")
        cfg.mode = egh::SearchMode::exact;
    else if (opts.mode == "bound" || opts.mode == "upper_bound")
        cfg.mode = egh::SearchMode::upper_bound;
    else
        throw egh::StructuralError("unknown search mode '" + opts.mode + "'");
    return cfg;
}

template <class S>
int run_validate(const std::string& file, const CommonOptions& opts) {
    const json raw = egh::io::load_file(file, egh::scalar_traits<S>::exact);
    const auto space = egh::io::space_from_json<S>(raw);
    const auto report = egh::validate_space(space);
    emit(egh::io::validation_to_json<S>(report), opts.out);
    return report.valid() ? exit_ok : exit_input;
}

template <class S>
int run_group(const std::string& file, const CommonOptions& opts) {
    const json raw = egh::io::load_file(file, egh::scalar_traits<S>::exact);
    auto space = egh::io::space_from_json<S>(raw);
    auto pair = egh::make_action_pair_full(
        egh::make_space(std::move(space.labels), std::move(space.dist)));
    std::cout << egh::io::group_report_to_json(*pair).dump(2) << "\n";
    if (!opts.out.empty()) egh::io::write_file(opts.out, egh::io::pair_to_json(*pair));
    return exit_ok;
}

template <class S>
int run_dist(const std::string& file_a, const std::string& file_b, const CommonOptions& opts) {
    const bool exact = egh::scalar_traits<S>::exact;
    auto a = egh::io::pair_from_json<S>(egh::io::load_file(file_a, exact), base_of(file_a));
    auto b = egh::io::pair_from_json<S>(egh::io::load_file(file_b, exact), base_of(file_b));
    const auto cfg = search_config(opts);
    const auto cert = egh::egh_distance<S>(a, b, cfg);
    emit(egh::io::distance_to_json(cert, cfg), opts.out);
    return exit_ok;
}

template <class S>
int run_check_triple(const std::string& file, const CommonOptions& opts) {
    const bool exact = egh::scalar_traits<S>::exact;
    const auto t = egh::io::triple_from_json<S>(egh::io::load_file(file, exact), base_of(file));
    const auto cert = egh::theta_as_approximation(t);
    json report = egh::io::triple_report_to_json(t);
    report["theta_certificate"] = egh::io::theta_certificate_to_json(cert);
    report["pass"] = cert.pass();
    emit(report, opts.out);
    return cert.pass() ? exit_ok : exit_violation;
}

template <class S>
int run_invert(const std::string& file, const CommonOptions& opts) {
    const bool exact = egh::scalar_traits<S>::exact;
    const auto t = egh::io::triple_from_json<S>(egh::io::load_file(file, exact), base_of(file));
    const auto result = egh::almost_inverse(t);
    std::cout << egh::io::inverse_to_json(result).dump(2) << "\n";
    if (!opts.out.empty())
        egh::io::write_file(opts.out, egh::io::triple_to_json(result.inverse, true));
    return result.pass() ? exit_ok : exit_violation;
}

template <class S>
int run_certify_theta(const std::string& file, const std::string& theta2_file,
                      const CommonOptions& opts) {
    const bool exact = egh::scalar_traits<S>::exact;
    const auto t = egh::io::triple_from_json<S>(egh::io::load_file(file, exact), base_of(file));
    if (theta2_file.empty()) {
        const auto cert = egh::theta_as_approximation(t);
        emit(egh::io::theta_certificate_to_json(cert), opts.out);
        return cert.pass() ? exit_ok : exit_violation;
    }
    const auto theta2 =
        egh::io::group_map_from_json(egh::io::load_file(theta2_file, exact));
    const auto cert = egh::perturb_theta(t, theta2);
    emit(egh::io::perturb_certificate_to_json(cert), opts.out);
    return cert.pass() ? exit_ok : exit_violation;
}

int run_smooth(const std::string& file, double net_radius, bool net_all, double cutoff,
               const std::string& profile, const CommonOptions& opts) {
    const auto t =
        egh::io::triple_from_json<double>(egh::io::load_file(file, false), base_of(file));
    const auto emb = egh::default_embedding(*t.cod);
    egh::NetSpec net;
    if (net_all)
        net = egh::all_elements_net(t.dom->group);
    else
        net = egh::greedy_net(*t.dom, net_radius);
    egh::BumpSpec bump;
    bump.cutoff = cutoff;
    bump.profile = egh::bump_profile_from_name(profile);
    const auto result = egh::smooth_theta(t, emb, net, bump);
    std::cout << egh::io::smooth_to_json(result, net, bump).dump(2) << "\n";
    if (!opts.out.empty()) {
        json artifact;
        artifact["format"] = egh::io::format_version;
        artifact["kind"] = "group-map";
        artifact["theta"] = result.theta2;
        egh::io::write_file(opts.out, artifact);
    }
    return result.pass() ? exit_ok : exit_violation;
}

template <class S>
int run_quotient(const std::string& file, const std::string& kind,
                 const std::vector<int>& subgroup, const CommonOptions& opts) {
    const bool exact = egh::scalar_traits<S>::exact;
    auto pair = egh::io::pair_from_json<S>(egh::io::load_file(file, exact), base_of(file));
    if (kind == "orbit") {
        const auto q = egh::orbit_space(*pair);
        std::cout << egh::io::quotient_to_json(q).dump(2) << "\n";
        if (!opts.out.empty()) egh::io::write_file(opts.out, egh::io::space_to_json(q.space));
        return exit_ok;
    }
    if (kind == "coset") {
        std::vector<int> h = subgroup;
        if (h.empty()) h.push_back(pair->group.identity);
        const auto c = egh::coset_space(*pair, h);
        std::cout << egh::io::coset_space_to_json(c).dump(2) << "\n";
        if (!opts.out.empty())
            egh::io::write_file(opts.out, egh::io::space_to_json(c.quotient.space));
        return exit_ok;
    }
    throw egh::StructuralError("unknown quotient kind '" + kind + "'");
}

int run_scenario(const std::string& file, const std::string& csv, const CommonOptions& opts) {
    auto scenario =
        egh::io::scenario_from_json(egh::io::load_file(file, false), base_of(file));
    if (opts.seed) scenario.seed = *opts.seed;
    scenario.solver.max_nodes = opts.budget;
    const auto report = egh::run_scenario(scenario);
    emit(egh::io::scenario_report_to_json(report), opts.out);
    if (!csv.empty()) {
        std::ofstream out(csv, std::ios::binary);
        if (!out) throw egh::StructuralError("cannot write '" + csv + "'");
        out << egh::io::scenario_report_csv(report);
    }
    const bool proved_ok = report.ceilings_pass && report.surjectivity_pass;
    return proved_ok ? exit_ok : exit_violation;
}

int fail(const std::string& cls, const std::string& message, int code) {
    json j;
    j["format"] = egh::io::format_version;
    j["kind"] = "error";
    j["class"] = cls;
    j["error"] = message;
    std::cout << j.dump(2) << "\n";
    std::cerr << "egh: " << message << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant Gromov-Hausdorff machinery for finite metric spaces"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string input_a, input_b, theta2_file, quotient_kind = "orbit", csv_file;
    std::string bump_profile = "tent";
    double net_radius = 0.0, cutoff = 0.0;
    bool net_all = false;
    std::vector<int> subgroup;
    std::uint64_t seed_value = 0;

    auto add_common = [&](CLI::App* cmd, bool with_exact = true) {
        if (with_exact) cmd->add_flag("--exact", opts.exact, "exact rational arithmetic");
        cmd->add_option("--out", opts.out, "write the report/artifact to this file");
    };

    auto* validate = app.add_subcommand("validate", "check the metric axioms of a space file");
    validate->add_option("space", input_a, "space JSON file")->required();
    add_common(validate);

    auto* group = app.add_subcommand("group", "full isometry group of a space");
    group->add_option("space", input_a, "space JSON file")->required();
    add_common(group);

    auto* dist = app.add_subcommand("dist", "equivariant Gromov-Hausdorff distance");
    dist->add_option("a", input_a, "first space/pair file")->required();
    dist->add_option("b", input_b, "second space/pair file")->required();
    dist->add_option("--mode", opts.mode, "exact | bound")->check(CLI::IsMember({"exact", "bound"}));
    dist->add_option("--budget", opts.budget, "search node budget");
    dist->add_flag("--no-symmetry-reduction", opts.no_symmetry_reduction,
                   "disable first-point orbit reduction");
    add_common(dist);

    auto* check = app.add_subcommand("check-triple", "score a triple and certify its theta");
    check->add_option("triple", input_a, "triple JSON file")->required();
    add_common(check);

    auto* invert = app.add_subcommand("invert", "almost inverse with 3e/4e certificates");
    invert->add_option("triple", input_a, "triple JSON file")->required();
    add_common(invert);

    auto* certify = app.add_subcommand("certify-theta", "theta approximation certificates");
    certify->add_option("triple", input_a, "triple JSON file")->required();
    certify->add_option("--theta2", theta2_file, "perturbed theta to certify instead");
    add_common(certify);

    auto* smooth = app.add_subcommand("smooth", "net/bump smoothing of theta");
    smooth->add_option("triple", input_a, "triple JSON file")->required();
    auto* radius_opt = smooth->add_option("--net-radius", net_radius, "greedy net radius");
    smooth->add_flag("--net-all", net_all, "use every element as a net center")
        ->excludes(radius_opt);
    smooth->add_option("--cutoff", cutoff, "bump support cutoff")->required();
    smooth->add_option("--profile", bump_profile, "tent | indicator")
        ->check(CLI::IsMember({"tent", "indicator"}));
    add_common(smooth, /*with_exact=*/false);

    auto* quotient = app.add_subcommand("quotient", "orbit or coset quotient space");
    quotient->add_option("pair", input_a, "pair JSON file")->required();
    quotient->add_option("--kind", quotient_kind, "orbit | coset")
        ->check(CLI::IsMember({"orbit", "coset"}));
    quotient->add_option("--subgroup", subgroup, "element indices of the subgroup (coset kind)");
    add_common(quotient);

    auto* scenario = app.add_subcommand("scenario", "run a convergence scenario");
    scenario->add_option("scenario", input_a, "scenario JSON file")->required();
    scenario->add_option("--csv", csv_file, "write the per-step table as CSV");
    auto* seed_opt = scenario->add_option("--seed", seed_value, "override the scenario seed");
    scenario->add_option("--budget", opts.budget, "search node budget");
    add_common(scenario, /*with_exact=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (seed_opt->count() > 0) opts.seed = seed_value;

    try {
        if (validate->parsed())
            return opts.exact ? run_validate<egh::Rational>(input_a, opts)
                              : run_validate<double>(input_a, opts);
        if (group->parsed())
            return opts.exact ? run_group<egh::Rational>(input_a, opts)
                              : run_group<double>(input_a, opts);
        if (dist->parsed())
            return opts.exact ? run_dist<egh::Rational>(input_a, input_b, opts)
                              : run_dist<double>(input_a, input_b, opts);
        if (check->parsed())
            return opts.exact ? run_check_triple<egh::Rational>(input_a, opts)
                              : run_check_triple<double>(input_a, opts);
        if (invert->parsed())
            return opts.exact ? run_invert<egh::Rational>(input_a, opts)
                              : run_invert<double>(input_a, opts);
        if (certify->parsed())
            return opts.exact ? run_certify_theta<egh::Rational>(input_a, theta2_file, opts)
                              : run_certify_theta<double>(input_a, theta2_file, opts);
        if (smooth->parsed())
            return run_smooth(input_a, net_radius, net_all, cutoff, bump_profile, opts);
        if (quotient->parsed())
            return opts.exact ? run_quotient<egh::Rational>(input_a, quotient_kind, subgroup, opts)
                              : run_quotient<double>(input_a, quotient_kind, subgroup, opts);
        if (scenario->parsed()) return run_scenario(input_a, csv_file, opts);
        return fail("usage", "no subcommand", exit_input);
    } catch (const egh::InternalCheckError& e) {
        return fail("internal", e.what(), exit_violation);
    } catch (const egh::PreconditionError& e) {
        return fail("precondition", e.what(), exit_input);
    } catch (const egh::StructuralError& e) {
        return fail("structural", e.what(), exit_input);
    } catch (const std::exception& e) {
        return fail("error", e.what(), exit_input);
    }
}
