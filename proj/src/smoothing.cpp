#include "egh/smoothing.hpp"

#include "egh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace egh {

EmbeddedGroup default_embedding(const ActionPairT<double>& pair) {
    const std::size_t n = pair.space.size();
    const std::size_t m = pair.group.order();

    EmbeddedGroup emb;
    emb.coords.reserve(m);
    for (std::size_t g = 0; g < m; ++g) {
        const Perm& perm = pair.group.elements[g];
        std::vector<double> v;
        v.reserve(n + n * n);
        for (std::size_t x = 0; x < n; ++x) v.push_back(pair.space.d(perm[x], x));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                v.push_back(perm[x] == static_cast<int>(y) ? 1.0 : 0.0);
        emb.coords.push_back(std::move(v));
    }

    bool any = false;
    double low = 0.0, up = 0.0;
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = g + 1; h < m; ++h) {
            double sq = 0.0;
            for (std::size_t k = 0; k < emb.coords[g].size(); ++k) {
                const double diff = emb.coords[g][k] - emb.coords[h][k];
                sq += diff * diff;
            }
            const double euclid = std::sqrt(sq);
            const double uniform = pair.unif(g, h);
            if (uniform <= 0.0)
                throw InternalCheckError("distinct group elements at uniform distance 0");
            const double ratio = euclid / uniform;
            if (!any) {
                low = up = ratio;
                any = true;
            } else {
                low = std::min(low, ratio);
                up = std::max(up, ratio);
            }
        }
    emb.lip_low = any ? low : 1.0;
    emb.lip_up = any ? up : 1.0;
    return emb;
}

NetSpec greedy_net(const ActionPairT<double>& pair, double radius) {
    if (!(radius > 0.0)) throw PreconditionError("net radius must be positive");
    const std::size_t m = pair.group.order();

    NetSpec net;
    net.radius = radius;
    net.centers.push_back(0);
    std::vector<double> nearest(m);
    for (std::size_t g = 0; g < m; ++g) nearest[g] = pair.unif(0, g);
    for (;;) {
        std::size_t farthest = 0;
        for (std::size_t g = 1; g < m; ++g)
            if (nearest[g] > nearest[farthest]) farthest = g;
        if (nearest[farthest] <= radius) break;
        net.centers.push_back(static_cast<int>(farthest));
        for (std::size_t g = 0; g < m; ++g)
            nearest[g] = std::min(nearest[g], pair.unif(farthest, g));
    }

    for (std::size_t g = 0; g < m; ++g) {
        double best = pair.unif(net.centers[0], g);
        for (int c : net.centers) best = std::min(best, pair.unif(c, g));
        if (best > radius)
            throw InternalCheckError("greedy net left element " + std::to_string(g) + " uncovered");
    }
    return net;
}

NetSpec all_elements_net(const Group& group) {
    NetSpec net;
    net.radius = 0.0;
    net.centers.resize(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) net.centers[g] = static_cast<int>(g);
    return net;
}

BumpProfile bump_profile_from_name(const std::string& name) {
    if (name == "tent") return BumpProfile::tent;
    if (name == "indicator") return BumpProfile::indicator;
    throw StructuralError("unknown bump profile '" + name + "'");
}

std::string bump_profile_name(BumpProfile p) {
    return p == BumpProfile::tent ? "tent" : "indicator";
}

double BumpSpec::weight(double s) const {
    if (s >= cutoff) return 0.0;
    switch (profile) {
    case BumpProfile::tent: return 1.0 - s / cutoff;
    case BumpProfile::indicator: return 1.0;
    }
    return 0.0;
}

SmoothResult smooth_theta(const TripleT<double>& t, const EmbeddedGroup& emb, const NetSpec& net,
                          const BumpSpec& bump) {
    const Group& gk = t.dom->group;
    const UniformMetricT<double>& unif_k = t.dom->unif;
    const Group& g = t.cod->group;
    const UniformMetricT<double>& unif = t.cod->unif;

    if (!(bump.cutoff > 0.0)) throw PreconditionError("bump cutoff must be positive");
    if (!(net.radius <= bump.cutoff / 2.0))
        throw PreconditionError("net radius must be at most half the bump cutoff");
    if (emb.coords.size() != g.order())
        throw StructuralError("embedding does not match the codomain group");
    if (net.centers.empty()) throw StructuralError("net has no centers");
    for (int c : net.centers)
        if (c < 0 || static_cast<std::size_t>(c) >= gk.order())
            throw StructuralError("net center " + std::to_string(c) + " out of range");

    const std::size_t q = emb.dimension();
    SmoothResult result;
    result.epsilon = t.order();
    result.theta2.assign(gk.order(), 0);

    std::vector<double> average(q);
    for (std::size_t gi = 0; gi < gk.order(); ++gi) {
        std::fill(average.begin(), average.end(), 0.0);
        double total = 0.0;
        for (int c : net.centers) {
            const double w = bump.weight(unif_k(gi, c));
            if (w <= 0.0) continue;
            total += w;
            const auto& point = emb.coords[t.theta[c]];
            for (std::size_t k = 0; k < q; ++k) average[k] += w * point[k];
        }
        if (total <= 0.0)
            throw PreconditionError("element " + std::to_string(gi) +
                                    " has no net point inside the bump support");
        for (std::size_t k = 0; k < q; ++k) average[k] /= total;

        // nearest-point retraction onto φ(G), lowest index on ties
        std::size_t arg = 0;
        double arg_sq = 0.0;
        for (std::size_t cand = 0; cand < g.order(); ++cand) {
            double sq = 0.0;
            for (std::size_t k = 0; k < q; ++k) {
                const double diff = emb.coords[cand][k] - average[k];
                sq += diff * diff;
            }
            if (cand == 0 || sq < arg_sq) {
                arg = cand;
                arg_sq = sq;
            }
        }
        result.theta2[gi] = static_cast<int>(arg);
    }

    result.measured_distance = group_map_distance(unif, t.theta, result.theta2);
    const double ceiling =
        (emb.lip_up / emb.lip_low) * 2.0 * (bump.cutoff + 5.0 * result.epsilon);
    result.ceiling = make_check<double>("smoothed_theta_distance", result.measured_distance, ceiling);
    result.recertifiable = leq_tol(result.measured_distance, result.epsilon);
    if (result.recertifiable)
        result.recertification = perturb_theta(t, result.theta2);
    return result;
}

} // namespace egh
