#include "egh/group.hpp"

#include "egh/errors.hpp"
#include "egh/parallel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace egh {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}

Perm compose(const Perm& g, const Perm& h) {
    Perm r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
    return r;
}

Perm invert(const Perm& g) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const Perm& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

int Group::index_of(const Perm& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return -1;
}

Group group_from_elements(std::vector<Perm> elements, bool sort_elements) {
    if (elements.empty()) throw StructuralError("group needs at least the identity");
    const std::size_t n = elements[0].size();
    for (const auto& p : elements)
        if (!is_permutation(p, n)) throw StructuralError("group element is not a permutation");
    if (sort_elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    }

    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], static_cast<int>(i)).second)
            throw StructuralError("duplicate group element at index " + std::to_string(i));
    }

    Group g;
    g.elements = std::move(elements);
    const std::size_t m = g.elements.size();
    g.mul = SquareTable<int>(m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto it = index.find(compose(g.elements[i], g.elements[j]));
            if (it == index.end())
                throw StructuralError("element set not closed: product of elements " +
                                      std::to_string(i) + " and " + std::to_string(j) +
                                      " is missing");
            g.mul(i, j) = it->second;
        }
    auto id_it = index.find(identity_perm(n));
    if (id_it == index.end()) throw StructuralError("identity permutation is missing");
    g.identity = id_it->second;

    g.inv.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = index.find(invert(g.elements[i]));
        if (it == index.end())
            throw StructuralError("inverse of element " + std::to_string(i) + " is missing");
        g.inv[i] = it->second;
    }
    return g;
}

Group group_closure(std::vector<Perm> generators, std::size_t degree) {
    std::map<Perm, int> seen;
    std::vector<Perm> frontier;
    auto add = [&](const Perm& p) {
        if (seen.emplace(p, 0).second) frontier.push_back(p);
    };
    add(identity_perm(degree));
    for (auto& p : generators) {
        if (!is_permutation(p, degree)) throw StructuralError("generator is not a permutation");
        add(p);
    }
    std::vector<Perm> gens(generators.begin(), generators.end());
    std::size_t head = 0;
    while (head < frontier.size()) {
        Perm current = frontier[head++];
        for (const auto& gen : gens) {
            add(compose(gen, current));
            add(compose(current, gen));
        }
    }
    std::vector<Perm> elements;
    elements.reserve(seen.size());
    for (auto& [p, _] : seen) elements.push_back(p);
    return group_from_elements(std::move(elements));
}

std::vector<int> subgroup_closure_indices(const Group& g, const std::vector<int>& generator_indices) {
    const auto m = static_cast<int>(g.order());
    std::vector<bool> member(g.order(), false);
    std::vector<int> frontier;
    auto add = [&](int idx) {
        if (!member[idx]) {
            member[idx] = true;
            frontier.push_back(idx);
        }
    };
    add(g.identity);
    for (int idx : generator_indices) {
        if (idx < 0 || idx >= m)
            throw StructuralError("generator index " + std::to_string(idx) + " out of range");
        add(idx);
    }
    std::size_t head = 0;
    while (head < frontier.size()) {
        const int a = frontier[head++];
        add(g.inv[a]);
        for (std::size_t b = 0; b < g.order(); ++b)
            if (member[b]) {
                add(g.mul(a, b));
                add(g.mul(b, a));
            }
    }
    std::vector<int> indices;
    for (int i = 0; i < m; ++i)
        if (member[i]) indices.push_back(i);
    return indices;
}

Group subgroup_closure(const Group& g, const std::vector<int>& generator_indices) {
    std::vector<Perm> elements;
    for (int idx : subgroup_closure_indices(g, generator_indices))
        elements.push_back(g.elements[idx]);
    return group_from_elements(std::move(elements));
}

std::vector<int> check_subgroup(const Group& g, std::vector<int> member_indices) {
    std::sort(member_indices.begin(), member_indices.end());
    member_indices.erase(std::unique(member_indices.begin(), member_indices.end()),
                         member_indices.end());
    std::vector<bool> member(g.order(), false);
    for (int idx : member_indices) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= g.order())
            throw StructuralError("subgroup index " + std::to_string(idx) + " out of range");
        member[idx] = true;
    }
    if (!member[g.identity]) throw StructuralError("subgroup does not contain the identity");
    for (int a : member_indices) {
        if (!member[g.inv[a]])
            throw StructuralError("subgroup is missing the inverse of element " + std::to_string(a));
        for (int b : member_indices)
            if (!member[g.mul(a, b)])
                throw StructuralError("subgroup is not closed: product of elements " +
                                      std::to_string(a) + " and " + std::to_string(b) +
                                      " escapes");
    }
    return member_indices;
}

template <class S>
bool preserves_distances(const Perm& p, const SpaceT<S>& space) {
    const std::size_t n = space.size();
    if (p.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!leq_tol(abs_diff(space.d(p[i], p[j]), space.d(i, j)), S{})) return false;
    return true;
}

namespace {

// Assign images point by point, pruning on any distance mismatch with the
// prefix. Iterating candidate images in ascending order yields the elements
// already sorted lexicographically.
template <class S>
void isometry_search(const SpaceT<S>& space, Perm& partial, std::vector<bool>& used,
                     std::size_t depth, std::vector<Perm>& out) {
    const std::size_t n = space.size();
    if (depth == n) {
        out.push_back(partial);
        return;
    }
    for (std::size_t img = 0; img < n; ++img) {
        if (used[img]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < depth; ++prev) {
            if (!leq_tol(abs_diff(space.d(partial[prev], static_cast<int>(img)),
                                  space.d(prev, depth)),
                         S{})) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        partial[depth] = static_cast<int>(img);
        used[img] = true;
        isometry_search(space, partial, used, depth + 1, out);
        used[img] = false;
    }
}

} // namespace

template <class S>
Group isometry_group(const SpaceT<S>& space) {
    const std::size_t n = space.size();
    if (n == 0) throw StructuralError("metric space must have at least one point");
    std::vector<Perm> elements;
    Perm partial(n, 0);
    std::vector<bool> used(n, false);
    isometry_search(space, partial, used, 0, elements);
    return group_from_elements(std::move(elements), /*sort_elements=*/false);
}

template <class S>
UniformMetricT<S> uniform_metric(const Group& group, const SpaceT<S>& space) {
    if (group.degree() != space.size())
        throw StructuralError("group degree " + std::to_string(group.degree()) +
                              " does not match space size " + std::to_string(space.size()));
    const std::size_t m = group.order();
    UniformMetricT<S> u;
    u.table = SquareTable<S>(m, S{});
    parallel_for(m, [&](std::size_t g) {
        for (std::size_t h = 0; h < m; ++h) {
            S best{};
            for (std::size_t x = 0; x < space.size(); ++x) {
                const S& d = space.d(group.elements[g][x], group.elements[h][x]);
                if (best < d) best = d;
            }
            u.table(g, h) = best;
        }
    });
    return u;
}

template <class S>
PairPtr<S> make_action_pair(SpaceT<S> space, Group group) {
    for (std::size_t i = 0; i < group.order(); ++i)
        if (!preserves_distances(group.elements[i], space))
            throw StructuralError("group element " + std::to_string(i) +
                                  " does not preserve distances");
    auto unif = uniform_metric(group, space);
    return std::make_shared<const ActionPairT<S>>(
        ActionPairT<S>{std::move(space), std::move(group), std::move(unif)});
}

template <class S>
PairPtr<S> make_action_pair_full(SpaceT<S> space) {
    Group g = isometry_group(space);
    auto unif = uniform_metric(g, space);
    return std::make_shared<const ActionPairT<S>>(
        ActionPairT<S>{std::move(space), std::move(g), std::move(unif)});
}

template <class S>
PairPtr<S> make_action_pair_trivial(SpaceT<S> space) {
    Group g = group_from_elements({identity_perm(space.size())});
    auto unif = uniform_metric(g, space);
    return std::make_shared<const ActionPairT<S>>(
        ActionPairT<S>{std::move(space), std::move(g), std::move(unif)});
}

template bool preserves_distances<double>(const Perm&, const SpaceT<double>&);
template bool preserves_distances<Rational>(const Perm&, const SpaceT<Rational>&);
template Group isometry_group<double>(const SpaceT<double>&);
template Group isometry_group<Rational>(const SpaceT<Rational>&);
template struct UniformMetricT<double>;
template struct UniformMetricT<Rational>;
template UniformMetricT<double> uniform_metric<double>(const Group&, const SpaceT<double>&);
template UniformMetricT<Rational> uniform_metric<Rational>(const Group&, const SpaceT<Rational>&);
template struct ActionPairT<double>;
template struct ActionPairT<Rational>;
template PairPtr<double> make_action_pair<double>(SpaceT<double>, Group);
template PairPtr<Rational> make_action_pair<Rational>(SpaceT<Rational>, Group);
template PairPtr<double> make_action_pair_full<double>(SpaceT<double>);
template PairPtr<Rational> make_action_pair_full<Rational>(SpaceT<Rational>);
template PairPtr<double> make_action_pair_trivial<double>(SpaceT<double>);
template PairPtr<Rational> make_action_pair_trivial<Rational>(SpaceT<Rational>);

} // namespace egh
