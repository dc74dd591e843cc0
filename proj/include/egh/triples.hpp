#pragma once

#include "egh/group.hpp"
#include "egh/metric_space.hpp"
#include "egh/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace egh {

// One named inequality of a certificate: measured value against its ceiling.
template <class S>
struct BoundCheck {
    std::string name;
    S measured{};
    S ceiling{};
    bool pass = false;
};

template <class S>
BoundCheck<S> make_check(std::string name, const S& measured, const S& ceiling);

template <class S>
bool all_pass(const std::vector<BoundCheck<S>>& checks);

// A square of maps between two spaces, compared leg against leg.
struct DiagramSpec {
    std::vector<int> f; // X → Y
    std::vector<int> k; // X → X
    std::vector<int> g; // Y → Y
    std::vector<int> h; // X → Y
};

// Least ε for which g∘f and h∘k agree up to ε at every point of X.
template <class S>
S diagram_defect(const SpaceT<S>& X, const SpaceT<S>& Y, const DiagramSpec& spec);

template <class S>
struct MapOrder {
    S distortion{}; // max over pairs of |d_Y(f x, f x') − d_X(x, x')|
    S covering{};   // max over y of min over x of d_Y(f x, y)
    S order() const { return distortion < covering ? covering : distortion; }
};

template <class S>
MapOrder<S> map_order(const SpaceT<S>& X, const SpaceT<S>& Y, const std::vector<int>& f);

// The four defect components whose max is the minimal valid order of a triple.
template <class S>
struct TripleScore {
    S distortion{};
    S covering{};
    S theta_defect{}; // max over γ, x of d_Y(θ(γ)(f x), f(γ x))
    S psi_defect{};   // max over λ, x of d_Y(λ(f x), f(ψ(λ) x))

    S order() const {
        S m = distortion;
        if (m < covering) m = covering;
        if (m < theta_defect) m = theta_defect;
        if (m < psi_defect) m = psi_defect;
        return m;
    }
};

// An equivariant approximation triple between two action pairs, with its
// computed minimal order cached at construction.
template <class S>
struct TripleT {
    PairPtr<S> dom;
    PairPtr<S> cod;
    std::vector<int> f;     // points of dom → points of cod
    std::vector<int> theta; // elements of dom.group → elements of cod.group
    std::vector<int> psi;   // elements of cod.group → elements of dom.group
    TripleScore<S> score;

    S order() const { return score.order(); }
};

// Validates shapes and ranges, scores the maps.
template <class S>
TripleT<S> make_triple(PairPtr<S> dom, PairPtr<S> cod, std::vector<int> f,
                       std::vector<int> theta, std::vector<int> psi);

template <class S>
TripleScore<S> score_triple(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                            const std::vector<int>& f, const std::vector<int>& theta,
                            const std::vector<int>& psi);

// Identity triple on a pair; order 0.
template <class S>
TripleT<S> identity_triple(PairPtr<S> pair);

// max over g of d_cod(theta_a(g), theta_b(g)) in the codomain uniform metric
template <class S>
S group_map_distance(const UniformMetricT<S>& cod_unif, const std::vector<int>& theta_a,
                     const std::vector<int>& theta_b);

// Almost inverse per the explicit construction: f̃(y) is the lowest-index
// argmin of d_Y(f x, y), with the group maps swapped. Certifies the 4ε triple
// bound, both 3ε round trips, and the 3ε order of f̃.
template <class S>
struct InverseResult {
    TripleT<S> inverse;
    S epsilon{}; // order of the input triple
    std::vector<BoundCheck<S>> checks;
    bool pass() const { return all_pass(checks); }
};

template <class S>
InverseResult<S> almost_inverse(const TripleT<S>& t);

// θ measured as a Gromov–Hausdorff approximation between the uniform-metric
// groups: covering against 4ε, both distortion sides against 5ε.
template <class S>
struct ThetaCertificate {
    S epsilon{};
    BoundCheck<S> covering;
    BoundCheck<S> upper_distortion;
    BoundCheck<S> lower_distortion;
    std::vector<BoundCheck<S>> checks() const { return {covering, upper_distortion, lower_distortion}; }
    bool pass() const { return covering.pass && upper_distortion.pass && lower_distortion.pass; }
};

template <class S>
ThetaCertificate<S> theta_as_approximation(const TripleT<S>& t);

// Swapping θ for an ε-close θ′ keeps (f, θ′, ψ) a 2ε triple and makes θ′ a
// 10ε approximation. Throws PreconditionError when θ′ is farther than ε.
template <class S>
struct PerturbCertificate {
    S epsilon{};
    S theta_distance{}; // measured max distance between θ and θ′
    BoundCheck<S> order;
    BoundCheck<S> covering;
    BoundCheck<S> upper_distortion;
    BoundCheck<S> lower_distortion;
    std::vector<BoundCheck<S>> checks() const {
        return {order, covering, upper_distortion, lower_distortion};
    }
    bool pass() const {
        return order.pass && covering.pass && upper_distortion.pass && lower_distortion.pass;
    }
};

template <class S>
PerturbCertificate<S> perturb_theta(const TripleT<S>& t, const std::vector<int>& theta2);

// (f2∘f1, θ2∘θ1, ψ1∘ψ2) with the ε1 + 2ε2 ceiling.
template <class S>
struct ComposeResult {
    TripleT<S> composed;
    BoundCheck<S> order;
    bool pass() const { return order.pass; }
};

template <class S>
ComposeResult<S> compose_triples(const TripleT<S>& t1, const TripleT<S>& t2);

#define EGH_TRIPLES_EXTERN(S)                                                                      \
    extern template BoundCheck<S> make_check<S>(std::string, const S&, const S&);                  \
    extern template bool all_pass<S>(const std::vector<BoundCheck<S>>&);                           \
    extern template S diagram_defect<S>(const SpaceT<S>&, const SpaceT<S>&, const DiagramSpec&);   \
    extern template struct MapOrder<S>;                                                            \
    extern template MapOrder<S> map_order<S>(const SpaceT<S>&, const SpaceT<S>&,                   \
                                             const std::vector<int>&);                             \
    extern template struct TripleScore<S>;                                                         \
    extern template struct TripleT<S>;                                                             \
    extern template TripleT<S> make_triple<S>(PairPtr<S>, PairPtr<S>, std::vector<int>,            \
                                              std::vector<int>, std::vector<int>);                 \
    extern template TripleScore<S> score_triple<S>(const ActionPairT<S>&, const ActionPairT<S>&,   \
                                                   const std::vector<int>&,                        \
                                                   const std::vector<int>&,                        \
                                                   const std::vector<int>&);                       \
    extern template TripleT<S> identity_triple<S>(PairPtr<S>);                                     \
    extern template S group_map_distance<S>(const UniformMetricT<S>&, const std::vector<int>&,     \
                                            const std::vector<int>&);                              \
    extern template struct InverseResult<S>;                                                       \
    extern template InverseResult<S> almost_inverse<S>(const TripleT<S>&);                         \
    extern template struct ThetaCertificate<S>;                                                    \
    extern template ThetaCertificate<S> theta_as_approximation<S>(const TripleT<S>&);              \
    extern template struct PerturbCertificate<S>;                                                  \
    extern template PerturbCertificate<S> perturb_theta<S>(const TripleT<S>&,                      \
                                                           const std::vector<int>&);               \
    extern template struct ComposeResult<S>;                                                       \
    extern template ComposeResult<S> compose_triples<S>(const TripleT<S>&, const TripleT<S>&);

EGH_TRIPLES_EXTERN(double)
EGH_TRIPLES_EXTERN(Rational)
#undef EGH_TRIPLES_EXTERN

} // namespace egh
