#pragma once

#include "egh/metric_space.hpp"
#include "egh/scalar.hpp"
#include "egh/square_table.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace egh {

// A permutation of point indices; perm[i] is the image of point i.
using Perm = std::vector<int>;

Perm identity_perm(std::size_t n);
Perm compose(const Perm& g, const Perm& h); // (g∘h)(i) = g[h[i]]
Perm invert(const Perm& g);
bool is_permutation(const Perm& p, std::size_t n);

// A finite group of permutations with precomputed composition and inverse
// tables. Canonically built groups keep elements sorted lexicographically by
// permutation word; pullback groups keep the source group's element order.
struct Group {
    std::vector<Perm> elements;
    SquareTable<int> mul; // mul(i, j) = index of elements[i] ∘ elements[j]
    std::vector<int> inv;
    int identity = 0;

    std::size_t order() const { return elements.size(); }
    std::size_t degree() const { return elements.empty() ? 0 : elements[0].size(); }
    int index_of(const Perm& p) const; // -1 when absent

    bool operator==(const Group&) const = default;
};

// Builds the tables from an element set, verifying closure, identity and
// inverses. sort_elements keeps the canonical lexicographic order.
Group group_from_elements(std::vector<Perm> elements, bool sort_elements = true);

// Multiplicative closure of the generators, canonical order.
Group group_closure(std::vector<Perm> generators, std::size_t degree);

// Smallest subgroup of g containing the generator elements.
Group subgroup_closure(const Group& g, const std::vector<int>& generator_indices);

// Element indices of g forming the closure, ascending; identity included.
std::vector<int> subgroup_closure_indices(const Group& g, const std::vector<int>& generator_indices);

// Verifies the index set is a subgroup of g; throws StructuralError naming the
// first violated product otherwise. Returns the indices sorted ascending.
std::vector<int> check_subgroup(const Group& g, std::vector<int> member_indices);

template <class S>
bool preserves_distances(const Perm& p, const SpaceT<S>& space);

// Full group of distance-preserving permutations, elements in lexicographic
// order. Backtracking with distance pruning; exact on rationals, tol 1e-9 on
// floats.
template <class S>
Group isometry_group(const SpaceT<S>& space);

// entry(g, g') = max over points x of d(g·x, g'·x)
template <class S>
struct UniformMetricT {
    SquareTable<S> table;
    const S& operator()(std::size_t g, std::size_t h) const { return table(g, h); }
    std::size_t size() const { return table.size(); }

    bool operator==(const UniformMetricT&) const = default;
};

template <class S>
UniformMetricT<S> uniform_metric(const Group& group, const SpaceT<S>& space);

// A space with a designated isometry subgroup and its cached uniform metric:
// the (X, G) objects every other module consumes.
template <class S>
struct ActionPairT {
    SpaceT<S> space;
    Group group;
    UniformMetricT<S> unif;

    bool operator==(const ActionPairT&) const = default;
};

template <class S>
using PairPtr = std::shared_ptr<const ActionPairT<S>>;

// Validates that the group acts on the space by isometries.
template <class S>
PairPtr<S> make_action_pair(SpaceT<S> space, Group group);

// Pairs the space with its full isometry group.
template <class S>
PairPtr<S> make_action_pair_full(SpaceT<S> space);

template <class S>
PairPtr<S> make_action_pair_trivial(SpaceT<S> space);

extern template bool preserves_distances<double>(const Perm&, const SpaceT<double>&);
extern template bool preserves_distances<Rational>(const Perm&, const SpaceT<Rational>&);
extern template Group isometry_group<double>(const SpaceT<double>&);
extern template Group isometry_group<Rational>(const SpaceT<Rational>&);
extern template struct UniformMetricT<double>;
extern template struct UniformMetricT<Rational>;
extern template UniformMetricT<double> uniform_metric<double>(const Group&, const SpaceT<double>&);
extern template UniformMetricT<Rational> uniform_metric<Rational>(const Group&, const SpaceT<Rational>&);
extern template struct ActionPairT<double>;
extern template struct ActionPairT<Rational>;
extern template PairPtr<double> make_action_pair<double>(SpaceT<double>, Group);
extern template PairPtr<Rational> make_action_pair<Rational>(SpaceT<Rational>, Group);
extern template PairPtr<double> make_action_pair_full<double>(SpaceT<double>);
extern template PairPtr<Rational> make_action_pair_full<Rational>(SpaceT<Rational>);
extern template PairPtr<double> make_action_pair_trivial<double>(SpaceT<double>);
extern template PairPtr<Rational> make_action_pair_trivial<Rational>(SpaceT<Rational>);

} // namespace egh
