#include "egh/quotients.hpp"

#include "egh/errors.hpp"
#include "egh/parallel.hpp"
#include "egh/rng.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

namespace egh {

namespace {

template <class S>
void check_quotient_metric(const SpaceT<S>& space, const char* what) {
    const auto report = validate_space(space);
    if (!report.valid()) {
        const auto& v = report.violations.front();
        std::ostringstream msg;
        msg << what << " metric violates the " << axiom_name(v.axiom) << " axiom at (" << v.i
            << "," << v.j;
        if (v.axiom == Axiom::triangle) msg << "," << v.via;
        msg << ")";
        throw InternalCheckError(msg.str());
    }
}

std::string joined_label(const std::vector<std::string>& labels, const std::vector<int>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += "|";
        out += labels[members[i]];
    }
    return out;
}

} // namespace

template <class S>
QuotientSpaceT<S> orbit_space(const ActionPairT<S>& pair) {
    const std::size_t n = pair.space.size();
    QuotientSpaceT<S> q;
    q.class_of.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        if (q.class_of[x] != -1) continue;
        const int cls = static_cast<int>(q.classes.size());
        std::vector<int> members;
        for (const auto& g : pair.group.elements) {
            const int y = g[x];
            if (q.class_of[y] == -1) {
                q.class_of[y] = cls;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        q.classes.push_back(std::move(members));
    }

    const std::size_t m = q.classes.size();
    SquareTable<S> dist(m, S{});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            if (a == b) continue;
            const int xa = q.classes[a][0];
            const int xb = q.classes[b][0];
            // single-sided min over the acting group; valid for isometric actions
            S best = pair.space.d(xa, pair.group.elements[0][xb]);
            for (const auto& g : pair.group.elements) {
                const S& d = pair.space.d(xa, g[xb]);
                if (d < best) best = d;
            }
            dist(a, b) = best;
            dist(b, a) = best;
        }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& members : q.classes) labels.push_back(joined_label(pair.space.labels, members));
    q.space = SpaceT<S>{std::move(labels), std::move(dist)};
    check_quotient_metric(q.space, "orbit");
    return q;
}

template <class S>
CosetSpace<S> coset_space(const ActionPairT<S>& pair, const std::vector<int>& subgroup_indices) {
    const Group& g = pair.group;
    CosetSpace<S> result;
    result.subgroup = check_subgroup(g, subgroup_indices);

    const std::size_t m = g.order();
    result.quotient.class_of.assign(m, -1);
    for (std::size_t e = 0; e < m; ++e) {
        if (result.quotient.class_of[e] != -1) continue;
        const int cls = static_cast<int>(result.quotient.classes.size());
        std::vector<int> members;
        for (int h : result.subgroup) {
            const int prod = g.mul(e, h); // left coset e·H
            if (result.quotient.class_of[prod] == -1) {
                result.quotient.class_of[prod] = cls;
                members.push_back(prod);
            }
        }
        std::sort(members.begin(), members.end());
        result.quotient.classes.push_back(std::move(members));
    }

    const std::size_t classes = result.quotient.classes.size();
    SquareTable<S> dist(classes, S{});
    for (std::size_t a = 0; a < classes; ++a)
        for (std::size_t b = a + 1; b < classes; ++b) {
            bool first = true;
            S best{};
            for (int ga : result.quotient.classes[a])
                for (int gb : result.quotient.classes[b]) {
                    const S& d = pair.unif(ga, gb);
                    if (first || d < best) {
                        best = d;
                        first = false;
                    }
                }
            dist(a, b) = best;
            dist(b, a) = best;
        }

    if (classes > 1) {
        bool first = true;
        S gap{};
        for (std::size_t a = 0; a < classes; ++a)
            for (std::size_t b = a + 1; b < classes; ++b)
                if (first || dist(a, b) < gap) {
                    gap = dist(a, b);
                    first = false;
                }
        result.gap = gap;
    }

    result.quotient.space =
        SpaceT<S>{default_labels(classes, "c"), std::move(dist)};
    check_quotient_metric(result.quotient.space, "coset");
    return result;
}

template <class S>
CosetMapReport<S> induced_coset_map(const ActionPairT<S>& dom, const std::vector<int>& subgroup_dom,
                                    const ActionPairT<S>& cod, const std::vector<int>& subgroup_cod,
                                    const std::vector<int>& theta, std::optional<S> epsilon) {
    if (theta.size() != dom.group.order())
        throw StructuralError("theta has " + std::to_string(theta.size()) +
                              " entries, expected " + std::to_string(dom.group.order()));
    for (int v : theta)
        if (v < 0 || static_cast<std::size_t>(v) >= cod.group.order())
            throw StructuralError("theta entry " + std::to_string(v) + " out of range");

    const CosetSpace<S> dq = coset_space(dom, subgroup_dom);
    const CosetSpace<S> cq = coset_space(cod, subgroup_cod);

    CosetMapReport<S> report;
    report.gap = cq.gap;
    report.epsilon = epsilon;
    report.map.assign(dq.quotient.classes.size(), -1);
    report.well_defined = true;
    for (std::size_t cls = 0; cls < dq.quotient.classes.size(); ++cls) {
        const auto& members = dq.quotient.classes[cls];
        const int target = cq.quotient.class_of[theta[members[0]]];
        report.map[cls] = target;
        for (int g : members) {
            const int t = cq.quotient.class_of[theta[g]];
            if (t != target) {
                report.well_defined = false;
                report.map[cls] = -1;
                if (!report.split)
                    report.split = std::array<int, 5>{static_cast<int>(cls), members[0], g,
                                                      target, t};
                break;
            }
        }
    }

    std::vector<bool> hit(cq.quotient.classes.size(), false);
    for (std::size_t g = 0; g < dom.group.order(); ++g)
        hit[cq.quotient.class_of[theta[g]]] = true;
    report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    report.injective = report.well_defined;
    if (report.well_defined) {
        std::vector<bool> used(cq.quotient.classes.size(), false);
        for (int t : report.map) {
            if (used[t]) {
                report.injective = false;
                break;
            }
            used[t] = true;
        }
    }

    // covering defect of θ between the uniform metrics
    bool first = true;
    for (std::size_t h = 0; h < cod.group.order(); ++h) {
        S nearest = cod.unif(theta[0], h);
        for (std::size_t g = 1; g < dom.group.order(); ++g) {
            const S& d = cod.unif(theta[g], h);
            if (d < nearest) nearest = d;
        }
        if (first || report.theta_covering < nearest) report.theta_covering = nearest;
        first = false;
    }

    if (report.gap) {
        if (epsilon) report.guaranteed_by_epsilon = *epsilon < *report.gap;
        report.guaranteed_by_covering = report.theta_covering < *report.gap;
    } else {
        // a single codomain coset is always hit
        report.guaranteed_by_covering = true;
        if (epsilon) report.guaranteed_by_epsilon = true;
    }

    if ((report.guaranteed_by_epsilon || report.guaranteed_by_covering) && !report.surjective)
        throw InternalCheckError(
            "induced coset map must be surjective below the inter-coset gap but is not");
    return report;
}

namespace {

template <class S>
PerturbResult<S> perturb_with_factors(const SpaceT<S>& x, const S& delta,
                                      const std::vector<std::vector<int>>& pair_orbits,
                                      std::uint64_t seed) {
    if (delta < S{}) throw PreconditionError("delta must be nonnegative");
    if (!(delta < S(1)))
        throw PreconditionError("delta must be below 1: factors could reach zero");

    const std::size_t n = x.size();
    Rng rng(seed);
    SquareTable<S> noisy = x.dist;
    for (const auto& orbit : pair_orbits) {
        const S u = rng.template unit<S>();
        const S factor = S(1) + delta * (S(2) * u - S(1));
        for (int flat : orbit) {
            const std::size_t i = static_cast<std::size_t>(flat) / n;
            const std::size_t j = static_cast<std::size_t>(flat) % n;
            noisy(i, j) = x.dist(i, j) * factor;
            noisy(j, i) = noisy(i, j);
        }
    }

    // shortest-path closure until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t via = 0; via < n; ++via)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const S relay = noisy(i, via) + noisy(via, j);
                    if (relay < noisy(i, j)) {
                        noisy(i, j) = relay;
                        changed = true;
                    }
                }
    }

    PerturbResult<S> result;
    result.delta_diam = delta * x.diameter();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const S dev = abs_diff(noisy(i, j), x.dist(i, j));
            if (result.max_deviation < dev) result.max_deviation = dev;
        }
    result.space = make_space(x.labels, std::move(noisy));
    return result;
}

std::vector<std::vector<int>> singleton_pair_orbits(std::size_t n) {
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            orbits.push_back({static_cast<int>(i * n + j)});
    return orbits;
}

std::vector<std::vector<int>> group_pair_orbits(const Group& group, std::size_t n) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (seen[i * n + j]) continue;
            std::vector<int> orbit;
            for (const auto& g : group.elements) {
                std::size_t a = static_cast<std::size_t>(g[i]);
                std::size_t b = static_cast<std::size_t>(g[j]);
                if (a > b) std::swap(a, b);
                if (!seen[a * n + b]) {
                    seen[a * n + b] = true;
                    orbit.push_back(static_cast<int>(a * n + b));
                }
            }
            orbits.push_back(std::move(orbit));
        }
    return orbits;
}

} // namespace

template <class S>
PerturbResult<S> perturb_space(const SpaceT<S>& x, const S& delta, std::uint64_t seed) {
    return perturb_with_factors(x, delta, singleton_pair_orbits(x.size()), seed);
}

template <class S>
PerturbResult<S> perturb_space_equivariant(const SpaceT<S>& x, const Group& group, const S& delta,
                                           std::uint64_t seed) {
    if (group.degree() != x.size())
        throw StructuralError("group does not act on the space being perturbed");
    return perturb_with_factors(x, delta, group_pair_orbits(group, x.size()), seed);
}

namespace {

ScenarioStep scenario_step(const ConvergenceScenario& scenario, const std::vector<int>& subgroup,
                           int k) {
    ScenarioStep step;
    step.k = k;
    step.delta = scenario.schedule[k];
    const std::uint64_t seed_k = derive_seed(scenario.seed, static_cast<std::uint64_t>(k));

    const auto& limit = *scenario.limit;
    PerturbResult<double> perturbed =
        scenario.preserve_symmetry
            ? perturb_space_equivariant(limit.space, limit.group, step.delta, seed_k)
            : perturb_space(limit.space, step.delta, seed_k);
    step.perturb_deviation = perturbed.max_deviation;

    PairPtr<double> pair_k;
    if (scenario.preserve_symmetry) {
        step.group_preserved = true;
        step.group_order = limit.group.order();
        pair_k = make_action_pair(std::move(perturbed.space), limit.group);
    } else {
        Group recomputed = isometry_group(perturbed.space);
        step.group_preserved = true;
        for (const auto& g : limit.group.elements)
            if (!preserves_distances(g, perturbed.space)) {
                step.group_preserved = false;
                break;
            }
        step.group_order = recomputed.order();
        if (recomputed.order() != limit.group.order()) {
            std::ostringstream msg;
            msg << "isometry group order changed from " << limit.group.order() << " to "
                << recomputed.order();
            step.event = msg.str();
        }
        pair_k = make_action_pair(std::move(perturbed.space), std::move(recomputed));
    }

    const auto cert = egh_distance(pair_k, scenario.limit, scenario.solver);
    step.epsilon = cert.value;
    step.witness_order = cert.witness_forward.order();
    step.optimal = cert.optimal;

    const auto theta_cert = theta_as_approximation(cert.witness_forward);
    step.theta_covering = theta_cert.covering.measured;
    step.theta_upper = theta_cert.upper_distortion.measured;
    step.theta_lower = theta_cert.lower_distortion.measured;
    step.theta_pass = theta_cert.pass();

    if (step.group_preserved && scenario.preserve_symmetry) {
        const auto coset = induced_coset_map<double>(*pair_k, subgroup, limit, subgroup,
                                                     cert.witness_forward.theta,
                                                     step.witness_order);
        step.coset_checked = true;
        step.gap_defined = coset.gap.has_value();
        step.gap = coset.gap.value_or(0.0);
        step.surjective = coset.surjective;
        step.guaranteed_by_epsilon = coset.guaranteed_by_epsilon;
        step.guaranteed_by_covering = coset.guaranteed_by_covering;
    }

    const auto orbit_k = orbit_space(*pair_k);
    const auto orbit_limit = orbit_space(limit);
    const auto orbit_cert =
        egh_distance(make_action_pair_trivial(orbit_k.space),
                     make_action_pair_trivial(orbit_limit.space), scenario.solver);
    step.orbit_gh = orbit_cert.value;
    return step;
}

} // namespace

ScenarioReport run_scenario(const ConvergenceScenario& scenario) {
    if (!scenario.limit) throw StructuralError("scenario needs a limit pair");
    if (scenario.schedule.empty()) throw StructuralError("scenario schedule is empty");
    for (std::size_t i = 0; i < scenario.schedule.size(); ++i) {
        if (!(scenario.schedule[i] >= 0.0))
            throw StructuralError("schedule magnitudes must be nonnegative");
        if (i > 0 && !(scenario.schedule[i] < scenario.schedule[i - 1]))
            throw StructuralError("schedule must be strictly decreasing");
    }
    std::vector<int> subgroup = scenario.subgroup;
    if (subgroup.empty()) subgroup.push_back(scenario.limit->group.identity);
    subgroup = check_subgroup(scenario.limit->group, std::move(subgroup));

    ScenarioReport report;
    report.steps.resize(scenario.schedule.size());
    parallel_for(scenario.schedule.size(), [&](std::size_t k) {
        report.steps[k] = scenario_step(scenario, subgroup, static_cast<int>(k));
    });

    // a threshold is crossed once the schedule goes strictly below it
    report.thresholds_pass = true;
    for (std::size_t j = 0; j + 1 < scenario.schedule.size(); ++j) {
        ThresholdVerdict verdict;
        verdict.threshold = scenario.schedule[j];
        for (std::size_t start = 0; start < report.steps.size(); ++start) {
            bool all_below = true;
            for (std::size_t k = start; k < report.steps.size(); ++k)
                if (!(report.steps[k].epsilon < verdict.threshold)) {
                    all_below = false;
                    break;
                }
            if (all_below) {
                verdict.attained_from = static_cast<int>(start);
                break;
            }
        }
        if (verdict.attained_from < 0) report.thresholds_pass = false;
        report.thresholds.push_back(verdict);
    }

    report.ceilings_pass = true;
    report.surjectivity_pass = true;
    for (const auto& step : report.steps) {
        if (!step.theta_pass) report.ceilings_pass = false;
        if (step.coset_checked && step.guaranteed_by_epsilon && !step.surjective)
            report.surjectivity_pass = false;
    }
    return report;
}

#define EGH_QUOTIENTS_INSTANTIATE(S)                                                               \
    template struct QuotientSpaceT<S>;                                                             \
    template QuotientSpaceT<S> orbit_space<S>(const ActionPairT<S>&);                              \
    template struct CosetSpace<S>;                                                                 \
    template CosetSpace<S> coset_space<S>(const ActionPairT<S>&, const std::vector<int>&);         \
    template struct CosetMapReport<S>;                                                             \
    template CosetMapReport<S> induced_coset_map<S>(                                               \
        const ActionPairT<S>&, const std::vector<int>&, const ActionPairT<S>&,                     \
        const std::vector<int>&, const std::vector<int>&, std::optional<S>);                       \
    template struct PerturbResult<S>;                                                              \
    template PerturbResult<S> perturb_space<S>(const SpaceT<S>&, const S&, std::uint64_t);         \
    template PerturbResult<S> perturb_space_equivariant<S>(const SpaceT<S>&, const Group&,         \
                                                           const S&, std::uint64_t);

EGH_QUOTIENTS_INSTANTIATE(double)
EGH_QUOTIENTS_INSTANTIATE(Rational)
#undef EGH_QUOTIENTS_INSTANTIATE

} // namespace egh
