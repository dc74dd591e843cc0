#pragma once

// Brute-force reference implementations, kept independent of the library's
// scoring and search paths. Everything here re-derives its value from the
// definitions with plain loops and enumeration.

#include "egh/group.hpp"
#include "egh/metric_space.hpp"

#include <limits>
#include <vector>

namespace oracle {

// max over points of d(g·x, h·x)
template <class S>
S uniform_entry(const egh::SpaceT<S>& space, const egh::Perm& g, const egh::Perm& h) {
    S worst{};
    for (std::size_t x = 0; x < space.size(); ++x) {
        const S& d = space.d(g[x], h[x]);
        if (worst < d) worst = d;
    }
    return worst;
}

template <class S>
S map_distortion(const egh::SpaceT<S>& X, const egh::SpaceT<S>& Y, const std::vector<int>& f) {
    S worst{};
    for (std::size_t a = 0; a < X.size(); ++a)
        for (std::size_t b = 0; b < X.size(); ++b) {
            const S da = Y.d(f[a], f[b]);
            const S db = X.d(a, b);
            const S gap = da < db ? S(db - da) : S(da - db);
            if (worst < gap) worst = gap;
        }
    return worst;
}

template <class S>
S map_covering(const egh::SpaceT<S>& X, const egh::SpaceT<S>& Y, const std::vector<int>& f) {
    S worst{};
    for (std::size_t y = 0; y < Y.size(); ++y) {
        S nearest = Y.d(f[0], y);
        for (std::size_t a = 1; a < X.size(); ++a)
            if (Y.d(f[a], y) < nearest) nearest = Y.d(f[a], y);
        if (worst < nearest) worst = nearest;
    }
    return worst;
}

// minimal order of (f, theta, psi) straight from the definition
template <class S>
S triple_order(const egh::SpaceT<S>& X, const egh::Group& GX, const egh::SpaceT<S>& Y,
               const egh::Group& GY, const std::vector<int>& f, const std::vector<int>& theta,
               const std::vector<int>& psi) {
    S worst = map_distortion(X, Y, f);
    const S cov = map_covering(X, Y, f);
    if (worst < cov) worst = cov;
    for (std::size_t g = 0; g < GX.order(); ++g)
        for (std::size_t x = 0; x < X.size(); ++x) {
            const S& d = Y.d(GY.elements[theta[g]][f[x]], f[GX.elements[g][x]]);
            if (worst < d) worst = d;
        }
    for (std::size_t l = 0; l < GY.order(); ++l)
        for (std::size_t x = 0; x < X.size(); ++x) {
            const S& d = Y.d(GY.elements[l][f[x]], f[GX.elements[psi[l]][x]]);
            if (worst < d) worst = d;
        }
    return worst;
}

// Advances an odometer word in [0, radix)^size; false once wrapped.
inline bool next_word(std::vector<int>& word, int radix) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (++word[i] < radix) return true;
        word[i] = 0;
    }
    return false;
}

// Best order achievable for a fixed f, minimizing theta and psi element-wise.
template <class S>
S best_order_for_f(const egh::SpaceT<S>& X, const egh::Group& GX, const egh::SpaceT<S>& Y,
                   const egh::Group& GY, const std::vector<int>& f) {
    S worst = map_distortion(X, Y, f);
    const S cov = map_covering(X, Y, f);
    if (worst < cov) worst = cov;
    for (std::size_t g = 0; g < GX.order(); ++g) {
        bool first = true;
        S best{};
        for (std::size_t l = 0; l < GY.order(); ++l) {
            S defect{};
            for (std::size_t x = 0; x < X.size(); ++x) {
                const S& d = Y.d(GY.elements[l][f[x]], f[GX.elements[g][x]]);
                if (defect < d) defect = d;
            }
            if (first || defect < best) {
                best = defect;
                first = false;
            }
        }
        if (worst < best) worst = best;
    }
    for (std::size_t l = 0; l < GY.order(); ++l) {
        bool first = true;
        S best{};
        for (std::size_t g = 0; g < GX.order(); ++g) {
            S defect{};
            for (std::size_t x = 0; x < X.size(); ++x) {
                const S& d = Y.d(GY.elements[l][f[x]], f[GX.elements[g][x]]);
                if (defect < d) defect = d;
            }
            if (first || defect < best) {
                best = defect;
                first = false;
            }
        }
        if (worst < best) worst = best;
    }
    return worst;
}

// Minimal order over every map f: full |Y|^|X| enumeration.
template <class S>
S best_directional_order(const egh::SpaceT<S>& X, const egh::Group& GX, const egh::SpaceT<S>& Y,
                         const egh::Group& GY) {
    std::vector<int> f(X.size(), 0);
    bool first = true;
    S best{};
    do {
        const S value = best_order_for_f(X, GX, Y, GY, f);
        if (first || value < best) {
            best = value;
            first = false;
        }
    } while (next_word(f, static_cast<int>(Y.size())));
    return best;
}

// The full d_eGH value by naive enumeration in both directions.
template <class S>
S egh_value(const egh::SpaceT<S>& X, const egh::Group& GX, const egh::SpaceT<S>& Y,
            const egh::Group& GY) {
    const S fwd = best_directional_order(X, GX, Y, GY);
    const S back = best_directional_order(Y, GY, X, GX);
    return fwd < back ? back : fwd;
}

// Same minimum ignoring the group conditions: the plain GH-style map bound.
template <class S>
S best_map_order(const egh::SpaceT<S>& X, const egh::SpaceT<S>& Y) {
    std::vector<int> f(X.size(), 0);
    bool first = true;
    S best{};
    do {
        S value = map_distortion(X, Y, f);
        const S cov = map_covering(X, Y, f);
        if (value < cov) value = cov;
        if (first || value < best) {
            best = value;
            first = false;
        }
    } while (next_word(f, static_cast<int>(Y.size())));
    return best;
}

// Best condition-(2) defect over every full theta table, for the optimality
// cross-check of the element-wise choice.
template <class S>
S best_theta_defect_full_enumeration(const egh::SpaceT<S>& X, const egh::Group& GX,
                                     const egh::SpaceT<S>& Y, const egh::Group& GY,
                                     const std::vector<int>& f) {
    std::vector<int> theta(GX.order(), 0);
    bool first = true;
    S best{};
    do {
        S defect{};
        for (std::size_t g = 0; g < GX.order(); ++g)
            for (std::size_t x = 0; x < X.size(); ++x) {
                const S& d = Y.d(GY.elements[theta[g]][f[x]], f[GX.elements[g][x]]);
                if (defect < d) defect = d;
            }
        if (first || defect < best) {
            best = defect;
            first = false;
        }
    } while (next_word(theta, static_cast<int>(GY.order())));
    return best;
}

// Shortest-path closure of a symmetric table; the repair oracle.
template <class S>
egh::SquareTable<S> metric_closure(egh::SquareTable<S> table) {
    const std::size_t n = table.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t via = 0; via < n; ++via)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const S relay = table(i, via) + table(via, j);
                    if (relay < table(i, j)) {
                        table(i, j) = relay;
                        changed = true;
                    }
                }
    }
    return table;
}

} // namespace oracle
