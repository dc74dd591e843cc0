#pragma once

#include "egh/group.hpp"
#include "egh/triples.hpp"

#include <cstdint>
#include <vector>

namespace egh {

enum class SearchMode { exact, upper_bound };

struct SearchConfig {
    std::uint64_t max_nodes = 2'000'000;
    // Extra pruning slack: branches that cannot beat the incumbent by more
    // than this margin are cut. Zero keeps the search exact.
    double prune_margin = 0.0;
    // Restrict the first assigned point's images to codomain-group orbit
    // representatives; sound because post-composing f with an isometry of the
    // codomain never changes the optimal order.
    bool symmetry_reduction = true;
    SearchMode mode = SearchMode::exact;
};

// For a fixed f the two equivariance defects decompose per group element over
// the shared matrix D[γ][λ] = max_x d_Y(λ(f x), f(γ x)); the optimal θ picks
// the row-wise argmin, the optimal ψ the column-wise argmin.
template <class S>
struct GroupMapFit {
    std::vector<int> theta;
    std::vector<int> psi;
    S theta_defect{};
    S psi_defect{};
};

template <class S>
GroupMapFit<S> fit_group_maps(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                              const std::vector<int>& f);

template <class S>
std::vector<int> best_theta_for_f(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                                  const std::vector<int>& f);

template <class S>
struct DirectionalSearch {
    TripleT<S> witness;
    S value{};
    bool optimal = false;
    std::uint64_t nodes = 0;
};

// Minimal triple order over all maps dom → cod with element-wise group maps.
template <class S>
DirectionalSearch<S> best_triple(PairPtr<S> dom, PairPtr<S> cod, const SearchConfig& cfg);

template <class S>
struct DistanceCertificate {
    S value{};
    bool optimal = false;
    std::uint64_t nodes_forward = 0;
    std::uint64_t nodes_backward = 0;
    TripleT<S> witness_forward;
    TripleT<S> witness_backward;
};

// Max of the two one-directional optima; optimal only when both searches
// exhausted their trees within budget.
template <class S>
DistanceCertificate<S> egh_distance(PairPtr<S> a, PairPtr<S> b, const SearchConfig& cfg);

// Redirects f at one point and certifies that the map order survives with
// ceiling 2ε, reporting the sharp measured value. Requires the new target to
// be ε-close to the old image.
template <class S>
struct RepairResult {
    std::vector<int> repaired;
    S original_order{};
    MapOrder<S> measured;
    BoundCheck<S> upper_spread; // d(f̃x', f̃x'') − d(x', x'') against 2ε
    BoundCheck<S> lower_spread; // d(x', x'') − d(f̃x', f̃x'') against 2ε
    BoundCheck<S> order;        // full map order against 2ε
    bool pass() const { return upper_spread.pass && lower_spread.pass && order.pass; }
};

template <class S>
RepairResult<S> basepoint_repair(const SpaceT<S>& dom, const SpaceT<S>& cod,
                                 const std::vector<int>& f, int target_pre, int target);

// The action g ⋆ x = θ⁻¹(g)(x) of `group` on the target space, with the
// original composition tables. theta_inv must be a table-respecting bijection
// onto target_group; violations are rejected naming the offending product.
template <class S>
Group pullback_action(const Group& group, const std::vector<int>& theta_inv,
                      const Group& target_group, const SpaceT<S>& target_space);

#define EGH_SOLVER_EXTERN(S)                                                                       \
    extern template struct GroupMapFit<S>;                                                         \
    extern template GroupMapFit<S> fit_group_maps<S>(const ActionPairT<S>&, const ActionPairT<S>&, \
                                                     const std::vector<int>&);                     \
    extern template std::vector<int> best_theta_for_f<S>(const ActionPairT<S>&,                    \
                                                         const ActionPairT<S>&,                    \
                                                         const std::vector<int>&);                 \
    extern template struct DirectionalSearch<S>;                                                   \
    extern template DirectionalSearch<S> best_triple<S>(PairPtr<S>, PairPtr<S>,                    \
                                                        const SearchConfig&);                      \
    extern template struct DistanceCertificate<S>;                                                 \
    extern template DistanceCertificate<S> egh_distance<S>(PairPtr<S>, PairPtr<S>,                 \
                                                           const SearchConfig&);                   \
    extern template struct RepairResult<S>;                                                        \
    extern template RepairResult<S> basepoint_repair<S>(const SpaceT<S>&, const SpaceT<S>&,        \
                                                        const std::vector<int>&, int, int);        \
    extern template Group pullback_action<S>(const Group&, const std::vector<int>&, const Group&,  \
                                             const SpaceT<S>&);

EGH_SOLVER_EXTERN(double)
EGH_SOLVER_EXTERN(Rational)
#undef EGH_SOLVER_EXTERN

} // namespace egh
