#include "egh/solver.hpp"

#include "egh/errors.hpp"
#include "egh/parallel.hpp"
#include "egh/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace egh {

template <class S>
GroupMapFit<S> fit_group_maps(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                              const std::vector<int>& f) {
    const std::size_t gn = dom.group.order();
    const std::size_t ln = cod.group.order();
    const std::size_t pts = dom.space.size();

    // D[a][b] = max_x d_Y(λ_b(f x), f(γ_a x)); serves both conditions
    std::vector<S> defect(gn * ln, S{});
    for (std::size_t a = 0; a < gn; ++a) {
        const Perm& ga = dom.group.elements[a];
        for (std::size_t b = 0; b < ln; ++b) {
            const Perm& lb = cod.group.elements[b];
            S worst{};
            for (std::size_t x = 0; x < pts; ++x) {
                const S& d = cod.space.d(lb[f[x]], f[ga[x]]);
                if (worst < d) worst = d;
            }
            defect[a * ln + b] = worst;
        }
    }

    GroupMapFit<S> fit;
    fit.theta.assign(gn, 0);
    fit.psi.assign(ln, 0);
    for (std::size_t a = 0; a < gn; ++a) {
        std::size_t arg = 0;
        for (std::size_t b = 1; b < ln; ++b)
            if (defect[a * ln + b] < defect[a * ln + arg]) arg = b;
        fit.theta[a] = static_cast<int>(arg);
        if (fit.theta_defect < defect[a * ln + arg]) fit.theta_defect = defect[a * ln + arg];
    }
    for (std::size_t b = 0; b < ln; ++b) {
        std::size_t arg = 0;
        for (std::size_t a = 1; a < gn; ++a)
            if (defect[a * ln + b] < defect[arg * ln + b]) arg = a;
        fit.psi[b] = static_cast<int>(arg);
        if (fit.psi_defect < defect[arg * ln + b]) fit.psi_defect = defect[arg * ln + b];
    }
    return fit;
}

template <class S>
std::vector<int> best_theta_for_f(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                                  const std::vector<int>& f) {
    return fit_group_maps(dom, cod, f).theta;
}

namespace {

template <class S>
S margin_as_scalar(double margin) {
    if constexpr (scalar_traits<S>::exact) {
        return margin == 0.0 ? Rational(0) : rational_from_double(margin);
    } else {
        return margin;
    }
}

// Orbit representatives (lowest index) of the group's action on its space.
std::vector<int> orbit_representatives(const Group& group, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::vector<int> reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        reps.push_back(static_cast<int>(x));
        for (const auto& g : group.elements) seen[g[x]] = true;
    }
    return reps;
}

template <class S>
class TripleSearch {
public:
    TripleSearch(const ActionPairT<S>& dom, const ActionPairT<S>& cod, const SearchConfig& cfg)
        : dom_(dom), cod_(cod), cfg_(cfg), margin_(margin_as_scalar<S>(cfg.prune_margin)) {
        const std::size_t n = dom_.space.size();
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            const S ea = dom_.space.eccentricity(a);
            const S eb = dom_.space.eccentricity(b);
            if (eb < ea) return true;
            if (ea < eb) return false;
            return a < b;
        });
        image_.assign(n, -1);
    }

    void run() {
        seed_greedy();
        descend(0);
    }

    std::vector<int> best_f;
    S best_value{};
    bool has_best = false;
    bool aborted = false;
    std::uint64_t nodes = 0;

private:
    // Deterministic greedy incumbent so a budget abort still returns a bound.
    void seed_greedy() {
        const std::size_t n = dom_.space.size();
        const std::size_t m = cod_.space.size();
        std::vector<int> f(n, 0);
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t p = order_[t];
            std::size_t arg = 0;
            S arg_cost{};
            for (std::size_t y = 0; y < m; ++y) {
                S cost{};
                for (std::size_t s = 0; s < t; ++s) {
                    const std::size_t q = order_[s];
                    const S gap = abs_diff(cod_.space.d(y, f[q]), dom_.space.d(p, q));
                    if (cost < gap) cost = gap;
                }
                if (y == 0 || cost < arg_cost) {
                    arg = y;
                    arg_cost = cost;
                }
            }
            f[p] = static_cast<int>(arg);
        }
        consider(f);
    }

    void consider(const std::vector<int>& f) {
        const MapOrder<S> mo = map_order(dom_.space, cod_.space, f);
        S value = mo.order();
        if (has_best && !(value < best_value)) return;
        const auto fit = fit_group_maps(dom_, cod_, f);
        if (value < fit.theta_defect) value = fit.theta_defect;
        if (value < fit.psi_defect) value = fit.psi_defect;
        if (!has_best || value < best_value) {
            has_best = true;
            best_value = value;
            best_f = f;
        }
    }

    // A branch whose distortion floor cannot beat the incumbent is dead.
    bool prunable(const S& lb) const {
        return has_best && !(lb < best_value - margin_);
    }

    void descend(std::size_t depth) {
        if (aborted) return;
        const std::size_t n = dom_.space.size();
        if (depth == n) {
            consider(image_);
            return;
        }
        const std::size_t p = order_[depth];
        std::vector<int> candidates;
        if (depth == 0 && cfg_.symmetry_reduction) {
            candidates = orbit_representatives(cod_.group, cod_.space.size());
        } else {
            candidates.resize(cod_.space.size());
            std::iota(candidates.begin(), candidates.end(), 0);
        }
        for (int y : candidates) {
            if (++nodes > cfg_.max_nodes) {
                aborted = true;
                return;
            }
            S lb = lower_bounds_[depth];
            for (std::size_t s = 0; s < depth && !prunable(lb); ++s) {
                const std::size_t q = order_[s];
                const S gap = abs_diff(cod_.space.d(y, image_[q]), dom_.space.d(p, q));
                if (lb < gap) lb = gap;
            }
            if (prunable(lb)) continue;
            image_[p] = y;
            lower_bounds_[depth + 1] = lb;
            descend(depth + 1);
            image_[p] = -1;
            if (aborted) return;
        }
    }

    const ActionPairT<S>& dom_;
    const ActionPairT<S>& cod_;
    SearchConfig cfg_;
    S margin_;
    std::vector<std::size_t> order_;
    std::vector<int> image_;
    std::vector<S> lower_bounds_ = std::vector<S>(dom_.space.size() + 1, S{});
};

} // namespace

template <class S>
DirectionalSearch<S> best_triple(PairPtr<S> dom, PairPtr<S> cod, const SearchConfig& cfg) {
    if (cfg.max_nodes < 1) throw StructuralError("search budget must be at least 1");
    TripleSearch<S> search(*dom, *cod, cfg);
    search.run();

    const auto fit = fit_group_maps(*dom, *cod, search.best_f);
    DirectionalSearch<S> result;
    result.witness = make_triple<S>(dom, cod, search.best_f, fit.theta, fit.psi);
    result.value = search.best_value;
    result.optimal = !search.aborted;
    result.nodes = search.nodes;
    if (!leq_tol(result.witness.order(), result.value) || !leq_tol(result.value, result.witness.order()))
        throw InternalCheckError("search incumbent disagrees with the re-scored witness");
    return result;
}

template <class S>
DistanceCertificate<S> egh_distance(PairPtr<S> a, PairPtr<S> b, const SearchConfig& cfg) {
    DirectionalSearch<S> forward, backward;
    parallel_for(2, [&](std::size_t dir) {
        if (dir == 0)
            forward = best_triple<S>(a, b, cfg);
        else
            backward = best_triple<S>(b, a, cfg);
    });

    DistanceCertificate<S> cert;
    cert.value = forward.value < backward.value ? backward.value : forward.value;
    cert.optimal = forward.optimal && backward.optimal;
    cert.nodes_forward = forward.nodes;
    cert.nodes_backward = backward.nodes;
    cert.witness_forward = std::move(forward.witness);
    cert.witness_backward = std::move(backward.witness);
    return cert;
}

template <class S>
RepairResult<S> basepoint_repair(const SpaceT<S>& dom, const SpaceT<S>& cod,
                                 const std::vector<int>& f, int target_pre, int target) {
    if (target_pre < 0 || static_cast<std::size_t>(target_pre) >= dom.size())
        throw StructuralError("target_pre out of range");
    if (target < 0 || static_cast<std::size_t>(target) >= cod.size())
        throw StructuralError("target out of range");

    const MapOrder<S> original = map_order(dom, cod, f);
    const S epsilon = original.order();
    const S& gap = cod.d(f[target_pre], target);
    if (!leq_tol(gap, epsilon))
        throw PreconditionError("target is not epsilon-close to the current image: gap " +
                                std::to_string(scalar_traits<S>::to_double(gap)) +
                                " exceeds epsilon " +
                                std::to_string(scalar_traits<S>::to_double(epsilon)));

    RepairResult<S> r;
    r.repaired = f;
    r.repaired[target_pre] = target;
    r.original_order = epsilon;
    r.measured = map_order(dom, cod, r.repaired);

    S upper{}, lower{};
    for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = a + 1; b < dom.size(); ++b) {
            const S& img = cod.d(r.repaired[a], r.repaired[b]);
            const S& src = dom.d(a, b);
            if (src < img && upper < img - src) upper = img - src;
            if (img < src && lower < src - img) lower = src - img;
        }
    const S ceiling = S(2) * epsilon;
    r.upper_spread = make_check<S>("repaired_upper_spread", upper, ceiling);
    r.lower_spread = make_check<S>("repaired_lower_spread", lower, ceiling);
    r.order = make_check<S>("repaired_order", r.measured.order(), ceiling);
    return r;
}

template <class S>
Group pullback_action(const Group& group, const std::vector<int>& theta_inv,
                      const Group& target_group, const SpaceT<S>& target_space) {
    const std::size_t m = group.order();
    if (theta_inv.size() != m)
        throw StructuralError("theta_inv has " + std::to_string(theta_inv.size()) +
                              " entries, expected " + std::to_string(m));
    if (target_group.order() != m)
        throw StructuralError("groups have different orders: " + std::to_string(m) + " vs " +
                              std::to_string(target_group.order()));
    if (target_group.degree() != target_space.size())
        throw StructuralError("target group does not act on the target space");

    std::vector<bool> hit(m, false);
    for (int v : theta_inv) {
        if (v < 0 || static_cast<std::size_t>(v) >= m)
            throw StructuralError("theta_inv entry " + std::to_string(v) + " out of range");
        if (hit[v]) throw StructuralError("theta_inv is not injective at value " + std::to_string(v));
        hit[v] = true;
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (target_group.mul(theta_inv[a], theta_inv[b]) !=
                theta_inv[group.mul(a, b)])
                throw StructuralError("theta_inv does not respect the product of elements " +
                                      std::to_string(a) + " and " + std::to_string(b));

    Group action;
    action.elements.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        action.elements.push_back(target_group.elements[theta_inv[i]]);
    action.mul = group.mul;
    action.inv = group.inv;
    action.identity = group.identity;
    for (std::size_t i = 0; i < m; ++i)
        if (!preserves_distances(action.elements[i], target_space))
            throw StructuralError("pulled-back element " + std::to_string(i) +
                                  " does not act by isometries");
    return action;
}

#define EGH_SOLVER_INSTANTIATE(S)                                                                  \
    template struct GroupMapFit<S>;                                                                \
    template GroupMapFit<S> fit_group_maps<S>(const ActionPairT<S>&, const ActionPairT<S>&,        \
                                              const std::vector<int>&);                            \
    template std::vector<int> best_theta_for_f<S>(const ActionPairT<S>&, const ActionPairT<S>&,    \
                                                  const std::vector<int>&);                        \
    template struct DirectionalSearch<S>;                                                          \
    template DirectionalSearch<S> best_triple<S>(PairPtr<S>, PairPtr<S>, const SearchConfig&);     \
    template struct DistanceCertificate<S>;                                                        \
    template DistanceCertificate<S> egh_distance<S>(PairPtr<S>, PairPtr<S>, const SearchConfig&);  \
    template struct RepairResult<S>;                                                               \
    template RepairResult<S> basepoint_repair<S>(const SpaceT<S>&, const SpaceT<S>&,               \
                                                 const std::vector<int>&, int, int);               \
    template Group pullback_action<S>(const Group&, const std::vector<int>&, const Group&,         \
                                      const SpaceT<S>&);

EGH_SOLVER_INSTANTIATE(double)
EGH_SOLVER_INSTANTIATE(Rational)
#undef EGH_SOLVER_INSTANTIATE

} // namespace egh
