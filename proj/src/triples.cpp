#include "egh/triples.hpp"

#include "egh/errors.hpp"

#include <string>
#include <utility>

namespace egh {

namespace {

void check_index_map(const std::vector<int>& map, std::size_t domain, std::size_t codomain,
                     const std::string& name) {
    if (map.size() != domain)
        throw StructuralError(name + " has " + std::to_string(map.size()) +
                              " entries, expected " + std::to_string(domain));
    for (int v : map)
        if (v < 0 || static_cast<std::size_t>(v) >= codomain)
            throw StructuralError(name + " entry " + std::to_string(v) + " out of range [0," +
                                  std::to_string(codomain) + ")");
}

} // namespace

template <class S>
BoundCheck<S> make_check(std::string name, const S& measured, const S& ceiling) {
    BoundCheck<S> c;
    c.name = std::move(name);
    c.measured = measured;
    c.ceiling = ceiling;
    c.pass = leq_tol(measured, ceiling);
    return c;
}

template <class S>
bool all_pass(const std::vector<BoundCheck<S>>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

template <class S>
S diagram_defect(const SpaceT<S>& X, const SpaceT<S>& Y, const DiagramSpec& spec) {
    check_index_map(spec.f, X.size(), Y.size(), "f");
    check_index_map(spec.k, X.size(), X.size(), "k");
    check_index_map(spec.g, Y.size(), Y.size(), "g");
    check_index_map(spec.h, X.size(), Y.size(), "h");
    S worst{};
    for (std::size_t x = 0; x < X.size(); ++x) {
        const S& d = Y.d(spec.g[spec.f[x]], spec.h[spec.k[x]]);
        if (worst < d) worst = d;
    }
    return worst;
}

template <class S>
MapOrder<S> map_order(const SpaceT<S>& X, const SpaceT<S>& Y, const std::vector<int>& f) {
    check_index_map(f, X.size(), Y.size(), "f");
    MapOrder<S> r;
    for (std::size_t a = 0; a < X.size(); ++a)
        for (std::size_t b = a + 1; b < X.size(); ++b) {
            const S gap = abs_diff(Y.d(f[a], f[b]), X.d(a, b));
            if (r.distortion < gap) r.distortion = gap;
        }
    for (std::size_t y = 0; y < Y.size(); ++y) {
        S nearest = Y.d(f[0], y);
        for (std::size_t a = 1; a < X.size(); ++a) {
            const S& d = Y.d(f[a], y);
            if (d < nearest) nearest = d;
        }
        if (r.covering < nearest) r.covering = nearest;
    }
    return r;
}

template <class S>
TripleScore<S> score_triple(const ActionPairT<S>& dom, const ActionPairT<S>& cod,
                            const std::vector<int>& f, const std::vector<int>& theta,
                            const std::vector<int>& psi) {
    check_index_map(f, dom.space.size(), cod.space.size(), "f");
    check_index_map(theta, dom.group.order(), cod.group.order(), "theta");
    check_index_map(psi, cod.group.order(), dom.group.order(), "psi");

    TripleScore<S> score;
    const MapOrder<S> mo = map_order(dom.space, cod.space, f);
    score.distortion = mo.distortion;
    score.covering = mo.covering;

    for (std::size_t g = 0; g < dom.group.order(); ++g) {
        const Perm& gx = dom.group.elements[g];
        const Perm& ty = cod.group.elements[theta[g]];
        for (std::size_t x = 0; x < dom.space.size(); ++x) {
            const S& d = cod.space.d(ty[f[x]], f[gx[x]]);
            if (score.theta_defect < d) score.theta_defect = d;
        }
    }
    for (std::size_t l = 0; l < cod.group.order(); ++l) {
        const Perm& ly = cod.group.elements[l];
        const Perm& px = dom.group.elements[psi[l]];
        for (std::size_t x = 0; x < dom.space.size(); ++x) {
            const S& d = cod.space.d(ly[f[x]], f[px[x]]);
            if (score.psi_defect < d) score.psi_defect = d;
        }
    }
    return score;
}

template <class S>
TripleT<S> make_triple(PairPtr<S> dom, PairPtr<S> cod, std::vector<int> f,
                       std::vector<int> theta, std::vector<int> psi) {
    if (!dom || !cod) throw StructuralError("triple needs both action pairs");
    TripleT<S> t;
    t.score = score_triple(*dom, *cod, f, theta, psi);
    t.dom = std::move(dom);
    t.cod = std::move(cod);
    t.f = std::move(f);
    t.theta = std::move(theta);
    t.psi = std::move(psi);
    return t;
}

template <class S>
TripleT<S> identity_triple(PairPtr<S> pair) {
    std::vector<int> f(pair->space.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<int>(i);
    std::vector<int> on_group(pair->group.order());
    for (std::size_t i = 0; i < on_group.size(); ++i) on_group[i] = static_cast<int>(i);
    return make_triple<S>(pair, pair, f, on_group, on_group);
}

template <class S>
S group_map_distance(const UniformMetricT<S>& cod_unif, const std::vector<int>& theta_a,
                     const std::vector<int>& theta_b) {
    if (theta_a.size() != theta_b.size())
        throw StructuralError("group maps have different domains");
    S worst{};
    for (std::size_t g = 0; g < theta_a.size(); ++g) {
        const S& d = cod_unif(theta_a[g], theta_b[g]);
        if (worst < d) worst = d;
    }
    return worst;
}

template <class S>
InverseResult<S> almost_inverse(const TripleT<S>& t) {
    const auto& X = t.dom->space;
    const auto& Y = t.cod->space;

    std::vector<int> back(Y.size(), 0);
    for (std::size_t y = 0; y < Y.size(); ++y) {
        int arg = 0;
        S best = Y.d(t.f[0], y);
        for (std::size_t x = 1; x < X.size(); ++x) {
            const S& d = Y.d(t.f[x], y);
            if (d < best) {
                best = d;
                arg = static_cast<int>(x);
            }
        }
        back[y] = arg;
    }

    InverseResult<S> r;
    r.epsilon = t.order();
    r.inverse = make_triple<S>(t.cod, t.dom, back, t.psi, t.theta);

    S roundtrip_cod{}; // d_Y(f(f̃ y), y)
    for (std::size_t y = 0; y < Y.size(); ++y) {
        const S& d = Y.d(t.f[back[y]], y);
        if (roundtrip_cod < d) roundtrip_cod = d;
    }
    S roundtrip_dom{}; // d_X(f̃(f x), x)
    for (std::size_t x = 0; x < X.size(); ++x) {
        const S& d = X.d(back[t.f[x]], x);
        if (roundtrip_dom < d) roundtrip_dom = d;
    }
    const MapOrder<S> back_order = map_order(Y, X, back);

    const S eps3 = S(3) * r.epsilon;
    const S eps4 = S(4) * r.epsilon;
    r.checks.push_back(make_check<S>("inverse_triple_order", r.inverse.order(), eps4));
    r.checks.push_back(make_check<S>("roundtrip_codomain", roundtrip_cod, eps3));
    r.checks.push_back(make_check<S>("roundtrip_domain", roundtrip_dom, eps3));
    r.checks.push_back(make_check<S>("inverse_map_order", back_order.order(), eps3));
    return r;
}

namespace {

// covering / upper / lower defects of a group map in the uniform metrics
template <class S>
struct GroupMapDefects {
    S covering{};
    S upper{};
    S lower{};
};

template <class S>
GroupMapDefects<S> theta_defects(const UniformMetricT<S>& dom_unif,
                                 const UniformMetricT<S>& cod_unif,
                                 const std::vector<int>& theta) {
    GroupMapDefects<S> d;
    const std::size_t nd = dom_unif.size();
    const std::size_t nc = cod_unif.size();
    for (std::size_t h = 0; h < nc; ++h) {
        S nearest = cod_unif(theta[0], h);
        for (std::size_t g = 1; g < nd; ++g) {
            const S& v = cod_unif(theta[g], h);
            if (v < nearest) nearest = v;
        }
        if (d.covering < nearest) d.covering = nearest;
    }
    for (std::size_t g = 0; g < nd; ++g)
        for (std::size_t h = g + 1; h < nd; ++h) {
            const S& img = cod_unif(theta[g], theta[h]);
            const S& src = dom_unif(g, h);
            if (src < img && d.upper < img - src) d.upper = img - src;
            if (img < src && d.lower < src - img) d.lower = src - img;
        }
    return d;
}

} // namespace

template <class S>
ThetaCertificate<S> theta_as_approximation(const TripleT<S>& t) {
    ThetaCertificate<S> cert;
    cert.epsilon = t.order();
    const auto d = theta_defects(t.dom->unif, t.cod->unif, t.theta);
    cert.covering = make_check<S>("theta_covering", d.covering, S(4) * cert.epsilon);
    cert.upper_distortion = make_check<S>("theta_upper_distortion", d.upper, S(5) * cert.epsilon);
    cert.lower_distortion = make_check<S>("theta_lower_distortion", d.lower, S(5) * cert.epsilon);
    return cert;
}

template <class S>
PerturbCertificate<S> perturb_theta(const TripleT<S>& t, const std::vector<int>& theta2) {
    check_index_map(theta2, t.dom->group.order(), t.cod->group.order(), "theta2");
    PerturbCertificate<S> cert;
    cert.epsilon = t.order();
    cert.theta_distance = group_map_distance(t.cod->unif, t.theta, theta2);
    if (!leq_tol(cert.theta_distance, cert.epsilon))
        throw PreconditionError(
            "theta2 is not epsilon-close to theta: measured distance " +
            std::to_string(scalar_traits<S>::to_double(cert.theta_distance)) + " exceeds epsilon " +
            std::to_string(scalar_traits<S>::to_double(cert.epsilon)));

    const TripleScore<S> swapped = score_triple(*t.dom, *t.cod, t.f, theta2, t.psi);
    cert.order = make_check<S>("perturbed_triple_order", swapped.order(), S(2) * cert.epsilon);

    const auto d = theta_defects(t.dom->unif, t.cod->unif, theta2);
    const S eps10 = S(10) * cert.epsilon;
    cert.covering = make_check<S>("theta2_covering", d.covering, eps10);
    cert.upper_distortion = make_check<S>("theta2_upper_distortion", d.upper, eps10);
    cert.lower_distortion = make_check<S>("theta2_lower_distortion", d.lower, eps10);
    return cert;
}

template <class S>
ComposeResult<S> compose_triples(const TripleT<S>& t1, const TripleT<S>& t2) {
    if (!(*t1.cod == *t2.dom))
        throw StructuralError("cannot compose: first codomain differs from second domain");

    std::vector<int> f(t1.f.size());
    for (std::size_t x = 0; x < f.size(); ++x) f[x] = t2.f[t1.f[x]];
    std::vector<int> theta(t1.theta.size());
    for (std::size_t g = 0; g < theta.size(); ++g) theta[g] = t2.theta[t1.theta[g]];
    std::vector<int> psi(t2.psi.size());
    for (std::size_t l = 0; l < psi.size(); ++l) psi[l] = t1.psi[t2.psi[l]];

    ComposeResult<S> r;
    r.composed = make_triple<S>(t1.dom, t2.cod, std::move(f), std::move(theta), std::move(psi));
    const S ceiling = t1.order() + S(2) * t2.order();
    r.order = make_check<S>("composed_order", r.composed.order(), ceiling);
    return r;
}

#define EGH_TRIPLES_INSTANTIATE(S)                                                                 \
    template BoundCheck<S> make_check<S>(std::string, const S&, const S&);                         \
    template bool all_pass<S>(const std::vector<BoundCheck<S>>&);                                  \
    template S diagram_defect<S>(const SpaceT<S>&, const SpaceT<S>&, const DiagramSpec&);          \
    template struct MapOrder<S>;                                                                   \
    template MapOrder<S> map_order<S>(const SpaceT<S>&, const SpaceT<S>&,                          \
                                      const std::vector<int>&);                                    \
    template struct TripleScore<S>;                                                                \
    template struct TripleT<S>;                                                                    \
    template TripleT<S> make_triple<S>(PairPtr<S>, PairPtr<S>, std::vector<int>,                   \
                                       std::vector<int>, std::vector<int>);                        \
    template TripleScore<S> score_triple<S>(const ActionPairT<S>&, const ActionPairT<S>&,          \
                                            const std::vector<int>&, const std::vector<int>&,      \
                                            const std::vector<int>&);                              \
    template TripleT<S> identity_triple<S>(PairPtr<S>);                                            \
    template S group_map_distance<S>(const UniformMetricT<S>&, const std::vector<int>&,            \
                                     const std::vector<int>&);                                     \
    template struct InverseResult<S>;                                                              \
    template InverseResult<S> almost_inverse<S>(const TripleT<S>&);                                \
    template struct ThetaCertificate<S>;                                                           \
    template ThetaCertificate<S> theta_as_approximation<S>(const TripleT<S>&);                     \
    template struct PerturbCertificate<S>;                                                         \
    template PerturbCertificate<S> perturb_theta<S>(const TripleT<S>&, const std::vector<int>&);   \
    template struct ComposeResult<S>;                                                              \
    template ComposeResult<S> compose_triples<S>(const TripleT<S>&, const TripleT<S>&);

EGH_TRIPLES_INSTANTIATE(double)
EGH_TRIPLES_INSTANTIATE(Rational)
#undef EGH_TRIPLES_INSTANTIATE

} // namespace egh
