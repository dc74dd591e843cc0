#pragma once

#include "egh/group.hpp"
#include "egh/metric_space.hpp"
#include "egh/solver.hpp"
#include "egh/triples.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace egh {

// Orbit or coset space with the min-over-representatives metric. The induced
// table is re-validated against all metric axioms on construction.
template <class S>
struct QuotientSpaceT {
    std::vector<std::vector<int>> classes; // members ascending; classes by first member
    std::vector<int> class_of;             // underlying index → class index
    SpaceT<S> space;                       // induced metric on the classes
};

template <class S>
QuotientSpaceT<S> orbit_space(const ActionPairT<S>& pair);

template <class S>
struct CosetSpace {
    QuotientSpaceT<S> quotient;
    std::vector<int> subgroup; // validated member indices, ascending
    // min distance between distinct cosets; empty when only one coset
    std::optional<S> gap;
};

// Left cosets of the subgroup (given by element indices) under the uniform
// metric, plus the inter-coset gap.
template <class S>
CosetSpace<S> coset_space(const ActionPairT<S>& pair, const std::vector<int>& subgroup_indices);

template <class S>
struct CosetMapReport {
    std::vector<int> map; // domain class → codomain class; -1 where ill-defined
    bool well_defined = false;
    bool injective = false;
    bool surjective = false; // every codomain class hit by some θ image
    // witness when a domain coset splits: (class, g1, g2, target1, target2)
    std::optional<std::array<int, 5>> split;
    S theta_covering{}; // covering defect of θ in the uniform metrics
    std::optional<S> gap;
    std::optional<S> epsilon; // triple order, when supplied
    bool guaranteed_by_epsilon = false;  // ε < gap
    bool guaranteed_by_covering = false; // covering defect < gap (always implies surjective)
};

// θ̃([g]H_k) = [θ(g)]H with well-definedness, injectivity and surjectivity
// flags. When the triple's order is supplied and sits below the inter-coset
// gap, surjectivity is asserted; a miss raises InternalCheckError.
template <class S>
CosetMapReport<S> induced_coset_map(const ActionPairT<S>& dom, const std::vector<int>& subgroup_dom,
                                    const ActionPairT<S>& cod, const std::vector<int>& subgroup_cod,
                                    const std::vector<int>& theta, std::optional<S> epsilon);

template <class S>
struct PerturbResult {
    SpaceT<S> space;
    S max_deviation{}; // max entry change after repair
    S delta_diam{};    // delta · diameter of the input
};

// Multiplies each off-diagonal entry by a seeded factor in [1−delta, 1+delta]
// (one factor per unordered pair), then repairs to a metric by shortest-path
// closure. delta ≥ 1 would allow nonpositive entries and is rejected.
template <class S>
PerturbResult<S> perturb_space(const SpaceT<S>& x, const S& delta, std::uint64_t seed);

// Same, but one factor per group-orbit of unordered pairs, so the given group
// still acts by isometries on the output.
template <class S>
PerturbResult<S> perturb_space_equivariant(const SpaceT<S>& x, const Group& group, const S& delta,
                                           std::uint64_t seed);

struct ConvergenceScenario {
    PairPtr<double> limit;
    std::vector<double> schedule; // strictly decreasing positive magnitudes
    std::uint64_t seed = 0;
    std::vector<int> subgroup;       // designated H in the limit group
    bool preserve_symmetry = true;   // orbit-wise factors, group transported
    SearchConfig solver;
};

struct ScenarioStep {
    int k = 0;
    double delta = 0.0;
    double epsilon = 0.0;         // d_eGH value of the step
    double witness_order = 0.0;   // order of the forward witness triple
    bool optimal = false;
    double perturb_deviation = 0.0;
    bool group_preserved = false; // the limit group still acts on X_k
    std::size_t group_order = 0;
    double theta_covering = 0.0;
    double theta_upper = 0.0;
    double theta_lower = 0.0;
    bool theta_pass = false; // the 4ε/5ε/5ε ceilings
    bool gap_defined = false;
    double gap = 0.0;
    bool surjective = false;
    bool guaranteed_by_epsilon = false;
    bool guaranteed_by_covering = false;
    bool coset_checked = false;
    double orbit_gh = 0.0; // plain GH distance between the orbit spaces
    std::string event;     // collapse notes and similar
};

struct ThresholdVerdict {
    double threshold = 0.0;
    // first index such that every later step stays strictly below; -1 = never
    int attained_from = -1;
};

struct ScenarioReport {
    std::vector<ScenarioStep> steps;
    std::vector<ThresholdVerdict> thresholds; // crossed thresholds only
    bool thresholds_pass = false;             // every crossed threshold attained
    bool ceilings_pass = false;               // θ certificates on every step
    bool surjectivity_pass = false;           // ε < gap steps are surjective
    bool pass() const { return thresholds_pass && ceilings_pass && surjectivity_pass; }
};

// Replays the convergence argument on a generated sequence: perturb, solve,
// certify θ, check the coset map against the gap, compare orbit spaces.
ScenarioReport run_scenario(const ConvergenceScenario& scenario);

#define EGH_QUOTIENTS_EXTERN(S)                                                                    \
    extern template struct QuotientSpaceT<S>;                                                      \
    extern template QuotientSpaceT<S> orbit_space<S>(const ActionPairT<S>&);                       \
    extern template struct CosetSpace<S>;                                                          \
    extern template CosetSpace<S> coset_space<S>(const ActionPairT<S>&, const std::vector<int>&);  \
    extern template struct CosetMapReport<S>;                                                      \
    extern template CosetMapReport<S> induced_coset_map<S>(                                        \
        const ActionPairT<S>&, const std::vector<int>&, const ActionPairT<S>&,                     \
        const std::vector<int>&, const std::vector<int>&, std::optional<S>);                       \
    extern template struct PerturbResult<S>;                                                       \
    extern template PerturbResult<S> perturb_space<S>(const SpaceT<S>&, const S&, std::uint64_t);  \
    extern template PerturbResult<S> perturb_space_equivariant<S>(const SpaceT<S>&, const Group&,  \
                                                                  const S&, std::uint64_t);

EGH_QUOTIENTS_EXTERN(double)
EGH_QUOTIENTS_EXTERN(Rational)
#undef EGH_QUOTIENTS_EXTERN

} // namespace egh
