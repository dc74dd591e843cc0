#pragma once

// Shared corpus builders for the unit and acceptance suites. Deterministic
// given the seed.

#include "egh/group.hpp"
#include "egh/metric_space.hpp"
#include "egh/quotients.hpp"
#include "egh/rng.hpp"
#include "egh/solver.hpp"
#include "egh/triples.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fixtures {

template <class S>
egh::SpaceT<S> from_rows(const std::vector<std::vector<S>>& rows) {
    egh::SquareTable<S> table(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) table(i, j) = rows[i][j];
    return egh::make_space(std::move(table));
}

template <class S>
egh::SpaceT<S> point_space() {
    return egh::make_space(egh::SquareTable<S>(1, S{}));
}

template <class S>
egh::SpaceT<S> two_point(const S& d) {
    egh::SquareTable<S> t(2, S{});
    t(0, 1) = t(1, 0) = d;
    return egh::make_space(std::move(t));
}

template <class S>
egh::SpaceT<S> equilateral(std::size_t n, const S& d) {
    egh::SquareTable<S> t(n, S{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) t(i, j) = d;
    return egh::make_space(std::move(t));
}

// path metric on the n-cycle; edge length = scale
template <class S>
egh::SpaceT<S> cycle(std::size_t n, const S& scale) {
    egh::SquareTable<S> t(n, S{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t hops = i < j ? j - i : i - j;
            const std::size_t around = n - hops;
            t(i, j) = S(static_cast<long long>(hops < around ? hops : around)) * scale;
        }
    return egh::make_space(std::move(t));
}

// the cyclic rotation subgroup of the n-cycle, canonical element order
inline egh::Group cyclic_rotations(std::size_t n) {
    egh::Perm step(n);
    for (std::size_t i = 0; i < n; ++i) step[i] = static_cast<int>((i + 1) % n);
    return egh::group_closure({step}, n);
}

// Entries in [lo, lo + spread] with spread ≤ lo satisfy the triangle
// inequality outright; a cheap generic metric with trivial symmetry.
template <class S>
egh::SpaceT<S> random_space(egh::Rng& rng, std::size_t n, const S& lo, const S& spread) {
    egh::SquareTable<S> t(n, S{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const S d = lo + rng.template unit<S>() * spread;
            t(i, j) = d;
            t(j, i) = d;
        }
    return egh::make_space(std::move(t));
}

// A space with genuine symmetry: a structured base perturbed orbit-wise so a
// chosen subgroup survives.
template <class S>
egh::SpaceT<S> random_symmetric_space(egh::Rng& rng, std::size_t max_points) {
    const int shape = static_cast<int>(rng.below(3));
    std::size_t n = 2 + static_cast<std::size_t>(rng.below(max_points - 1));
    egh::SpaceT<S> base;
    switch (shape) {
    case 0:
        if (n < 3) n = 3;
        base = cycle<S>(n, S(1));
        break;
    case 1:
        // keep the symmetric group small
        base = equilateral<S>(n < 4 ? n : 4, S(1));
        break;
    default: base = two_point<S>(S(1)); break;
    }
    const egh::Group full = egh::isometry_group(base);
    const S delta = rng.template unit<S>() * S(1) / S(4);
    auto perturbed = egh::perturb_space_equivariant(base, full, delta, rng.next());
    return std::move(perturbed.space);
}

// Random subgroup of the full isometry group with order at most max_order.
inline egh::Group random_subgroup(egh::Rng& rng, const egh::Group& full, std::size_t max_order) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<int> gens;
        const std::size_t count = 1 + rng.below(2);
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(static_cast<int>(rng.below(full.order())));
        const auto indices = egh::subgroup_closure_indices(full, gens);
        if (indices.size() <= max_order) return egh::subgroup_closure(full, gens);
    }
    return egh::subgroup_closure(full, {full.identity});
}

template <class S>
egh::PairPtr<S> random_pair(egh::Rng& rng, std::size_t max_points, std::size_t max_group) {
    egh::SpaceT<S> space = rng.below(2) == 0 ? random_symmetric_space<S>(rng, max_points)
                                             : random_space<S>(rng, 2 + rng.below(max_points - 1),
                                                               S(1), S(1));
    egh::Group full = egh::isometry_group(space);
    egh::Group sub = random_subgroup(rng, full, max_group);
    return egh::make_action_pair(std::move(space), std::move(sub));
}

template <class S>
std::vector<int> random_map(egh::Rng& rng, std::size_t domain, std::size_t codomain) {
    std::vector<int> f(domain);
    for (auto& v : f) v = static_cast<int>(rng.below(codomain));
    return f;
}

// Random triple; group maps are random for style 0, element-wise optimal for
// style 1, and style 2 additionally draws f as a random bijection when the
// sizes match (small-order triples).
template <class S>
egh::TripleT<S> random_triple(egh::Rng& rng, egh::PairPtr<S> dom, egh::PairPtr<S> cod,
                              int style) {
    std::vector<int> f;
    if (style == 2 && dom->space.size() == cod->space.size()) {
        f.resize(dom->space.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<int>(i);
        for (std::size_t i = f.size(); i > 1; --i)
            std::swap(f[i - 1], f[rng.below(i)]);
    } else {
        f = random_map<S>(rng, dom->space.size(), cod->space.size());
    }
    if (style == 0) {
        auto theta = random_map<S>(rng, dom->group.order(), cod->group.order());
        auto psi = random_map<S>(rng, cod->group.order(), dom->group.order());
        return egh::make_triple<S>(std::move(dom), std::move(cod), std::move(f),
                                   std::move(theta), std::move(psi));
    }
    const auto fit = egh::fit_group_maps(*dom, *cod, f);
    return egh::make_triple<S>(std::move(dom), std::move(cod), std::move(f), fit.theta, fit.psi);
}

// The fixed small corpus behind the exhaustive sweeps: every listed space
// paired with each of its subgroups of order ≤ max_group_order.
template <class S>
std::vector<egh::PairPtr<S>> small_pair_corpus(std::size_t max_group_order) {
    std::vector<egh::SpaceT<S>> spaces;
    spaces.push_back(point_space<S>());
    spaces.push_back(two_point<S>(S(1)));
    spaces.push_back(two_point<S>(S(6) / S(5)));
    spaces.push_back(equilateral<S>(3, S(1)));
    spaces.push_back(from_rows<S>({{S(0), S(1), S(1)}, {S(1), S(0), S(3) / S(2)},
                                   {S(1), S(3) / S(2), S(0)}}));
    spaces.push_back(from_rows<S>({{S(0), S(1), S(6) / S(5)}, {S(1), S(0), S(19) / S(10)},
                                   {S(6) / S(5), S(19) / S(10), S(0)}}));

    std::vector<egh::PairPtr<S>> pairs;
    for (const auto& space : spaces) {
        const egh::Group full = egh::isometry_group(space);
        std::vector<std::vector<int>> subgroup_sets;
        subgroup_sets.push_back({full.identity});
        for (std::size_t e = 0; e < full.order(); ++e) {
            if (static_cast<int>(e) == full.identity) continue;
            const auto indices = egh::subgroup_closure_indices(full, {static_cast<int>(e)});
            if (indices.size() <= max_group_order) subgroup_sets.push_back(indices);
        }
        std::sort(subgroup_sets.begin(), subgroup_sets.end());
        subgroup_sets.erase(std::unique(subgroup_sets.begin(), subgroup_sets.end()),
                            subgroup_sets.end());
        for (const auto& set : subgroup_sets) {
            std::vector<int> gens = set;
            pairs.push_back(egh::make_action_pair(space, egh::subgroup_closure(full, gens)));
        }
    }
    return pairs;
}

} // namespace fixtures
