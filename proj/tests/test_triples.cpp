#include "egh/errors.hpp"
#include "egh/triples.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace egh;

namespace {

PairPtr<double> two_point_full(double d = 1.0) {
    return make_action_pair_full(fixtures::two_point<double>(d));
}

PairPtr<double> two_point_trivial(double d = 1.0) {
    return make_action_pair_trivial(fixtures::two_point<double>(d));
}

} // namespace

TEST_CASE("diagram defect of a genuinely commuting square is zero") {
    const auto X = fixtures::two_point<double>(1.0);
    DiagramSpec spec;
    spec.f = {0, 1};
    spec.k = {0, 1};
    spec.g = {0, 1};
    spec.h = {0, 1};
    CHECK(diagram_defect(X, X, spec) == 0.0);
}

TEST_CASE("diagram defect sees the swapped leg on the two-point space") {
    const auto X = fixtures::two_point<double>(1.0);
    DiagramSpec spec;
    spec.f = {0, 1};
    spec.k = {0, 1};
    spec.g = {1, 0}; // swap after f
    spec.h = {0, 1};
    CHECK(diagram_defect(X, X, spec) == 1.0);
}

TEST_CASE("diagram defect on a single point is the distance of the two images") {
    const auto X = fixtures::point_space<double>();
    const auto Y = fixtures::two_point<double>(1.0);
    DiagramSpec spec;
    spec.f = {0};
    spec.k = {0};
    spec.g = {1, 0};
    spec.h = {0};
    CHECK(diagram_defect(X, Y, spec) == 1.0); // g(f(x)) = 1, h(k(x)) = 0
}

TEST_CASE("map order of an identity map is (0, 0)") {
    const auto X = fixtures::two_point<double>(1.0);
    const auto mo = map_order(X, X, {0, 1});
    CHECK(mo.distortion == 0.0);
    CHECK(mo.covering == 0.0);
}

TEST_CASE("map order of the stretching bijection is (0.2, 0)") {
    const auto X = fixtures::two_point<double>(1.0);
    const auto Y = fixtures::two_point<double>(1.2);
    const auto mo = map_order(X, Y, {0, 1});
    CHECK(mo.distortion == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(mo.covering == 0.0);
}

TEST_CASE("map order of a constant map onto the two-point space is (1, 1)") {
    const auto X = fixtures::two_point<double>(1.0);
    const auto mo = map_order(X, X, {0, 0});
    CHECK(mo.distortion == 1.0);
    CHECK(mo.covering == 1.0);
}

TEST_CASE("identity triple scores zero") {
    const auto pair = two_point_full();
    CHECK(identity_triple(pair).order() == 0.0);
}

TEST_CASE("genuinely equivariant identity triple on the order-2 group scores zero") {
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 1}, {0, 1});
    CHECK(t.order() == 0.0);
}

TEST_CASE("sending the swap to the identity costs the full displacement") {
    const auto pair = two_point_full();
    // theta maps swap (index 1) to identity (index 0)
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 0}, {0, 1});
    CHECK(t.score.theta_defect == 1.0);
    CHECK(t.order() == 1.0);
}

TEST_CASE("triple order is exactly the max of its four components") {
    Rng rng(31337);
    for (int i = 0; i < 60; ++i) {
        auto dom = fixtures::random_pair<double>(rng, 5, 8);
        auto cod = fixtures::random_pair<double>(rng, 5, 8);
        const auto t = fixtures::random_triple<double>(rng, dom, cod,
                                                       static_cast<int>(rng.below(3)));
        double expected = t.score.distortion;
        expected = std::max(expected, t.score.covering);
        expected = std::max(expected, t.score.theta_defect);
        expected = std::max(expected, t.score.psi_defect);
        CHECK(t.order() == expected);

        // independent oracle recomputation
        const double reference =
            oracle::triple_order(t.dom->space, t.dom->group, t.cod->space, t.cod->group, t.f,
                                 t.theta, t.psi);
        CHECK(t.order() == doctest::Approx(reference).epsilon(1e-12));
    }
}

TEST_CASE("almost inverse of a genuine equivariant isometry is the inverse bijection") {
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {1, 0}, {0, 1}, {0, 1});
    REQUIRE(t.order() == 0.0);
    const auto inv = almost_inverse(t);
    CHECK(inv.inverse.f == std::vector<int>{1, 0});
    CHECK(inv.inverse.order() == 0.0);
    CHECK(inv.pass());
}

TEST_CASE("almost inverse of the stretching bijection stays within 4 epsilon") {
    const auto dom = two_point_trivial(1.0);
    const auto cod = two_point_trivial(1.2);
    const auto t = make_triple<double>(dom, cod, {0, 1}, {0}, {0});
    REQUIRE(t.order() == doctest::Approx(0.2));
    const auto inv = almost_inverse(t);
    CHECK(inv.inverse.f == std::vector<int>{0, 1});
    CHECK(inv.inverse.order() <= 0.8 + 1e-9);
    CHECK(inv.pass());
}

TEST_CASE("almost inverse of a constant map lands on the argmin point and satisfies 3 epsilon") {
    const auto pair = two_point_trivial(1.0);
    const auto t = make_triple<double>(pair, pair, {0, 0}, {0}, {0});
    REQUIRE(t.order() == 1.0);
    const auto inv = almost_inverse(t);
    // f̃(0) = 0 exactly, f̃(1) = 0 because f never reaches 1; tie-break keeps index 0
    CHECK(inv.inverse.f == std::vector<int>{0, 0});
    for (const auto& c : inv.checks) CHECK(c.pass);
    // round trips measured by hand: d(f(f̃y), y) ≤ 1, d(f̃(f x), x) ≤ 1
    CHECK(inv.checks[1].measured == 1.0);
    CHECK(inv.checks[2].measured == 1.0);
}

TEST_CASE("theta certificate of a genuine isometry measures zero everywhere") {
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 1}, {0, 1});
    const auto cert = theta_as_approximation(t);
    CHECK(cert.epsilon == 0.0);
    CHECK(cert.covering.measured == 0.0);
    CHECK(cert.upper_distortion.measured == 0.0);
    CHECK(cert.lower_distortion.measured == 0.0);
    CHECK(cert.pass());
}

TEST_CASE("theta ceilings hold across a random campaign") {
    Rng rng(4242);
    for (int i = 0; i < 120; ++i) {
        auto dom = fixtures::random_pair<double>(rng, 6, 8);
        auto cod = fixtures::random_pair<double>(rng, 6, 8);
        const auto t = fixtures::random_triple<double>(rng, dom, cod,
                                                       static_cast<int>(rng.below(3)));
        CHECK(theta_as_approximation(t).pass());
    }
}

TEST_CASE("perturbing theta by itself keeps the identical order") {
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 1}, {0, 1});
    const auto cert = perturb_theta(t, t.theta);
    CHECK(cert.theta_distance == 0.0);
    CHECK(cert.order.measured == t.order());
    CHECK(cert.pass());
}

TEST_CASE("perturbing theta within epsilon certifies the 2e and 10e ceilings") {
    // order-1 triple on the order-2 group: theta swapped within distance 1
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 0}, {0, 1});
    REQUIRE(t.order() == 1.0);
    const auto cert = perturb_theta(t, std::vector<int>{0, 1});
    CHECK(cert.theta_distance == 1.0);
    CHECK(cert.pass());
}

TEST_CASE("perturbing theta beyond epsilon is rejected with the measured gap") {
    const auto pair = two_point_full();
    const auto t = make_triple<double>(pair, pair, {0, 1}, {0, 1}, {0, 1});
    REQUIRE(t.order() == 0.0);
    CHECK_THROWS_AS(perturb_theta(t, std::vector<int>{1, 0}), PreconditionError);
    try {
        perturb_theta(t, std::vector<int>{1, 0});
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("1.0") != std::string::npos);
    }
}

TEST_CASE("composition of identity triples is the identity triple") {
    const auto pair = two_point_full();
    const auto id = identity_triple(pair);
    const auto composed = compose_triples(id, id);
    CHECK(composed.composed.order() == 0.0);
    CHECK(composed.pass());
}

TEST_CASE("composition with an order-0 triple keeps the other order") {
    const auto dom = two_point_trivial(1.0);
    const auto cod = two_point_trivial(1.2);
    const auto t = make_triple<double>(dom, cod, {0, 1}, {0}, {0});
    const auto id_dom = identity_triple(dom);
    const auto left = compose_triples(id_dom, t);
    CHECK(left.composed.order() == doctest::Approx(t.order()));
    CHECK(left.pass());
    const auto id_cod = identity_triple(cod);
    const auto right = compose_triples(t, id_cod);
    CHECK(right.composed.order() == doctest::Approx(t.order()));
    CHECK(right.pass());
}

TEST_CASE("composition ceiling epsilon1 + 2 epsilon2 holds across a random campaign") {
    Rng rng(99);
    for (int i = 0; i < 80; ++i) {
        auto a = fixtures::random_pair<double>(rng, 4, 6);
        auto b = fixtures::random_pair<double>(rng, 4, 6);
        auto c = fixtures::random_pair<double>(rng, 4, 6);
        const auto t1 = fixtures::random_triple<double>(rng, a, b, static_cast<int>(rng.below(3)));
        const auto t2 = fixtures::random_triple<double>(rng, b, c, static_cast<int>(rng.below(3)));
        const auto composed = compose_triples(t1, t2);
        CHECK(composed.pass());
    }
}

TEST_CASE("composing through mismatched middle pairs is rejected") {
    Rng rng(7);
    const auto a = two_point_full();
    const auto b = two_point_trivial();
    const auto t1 = fixtures::random_triple<double>(rng, a, a, 1);
    const auto t2 = fixtures::random_triple<double>(rng, b, b, 1);
    CHECK_THROWS_AS(compose_triples(t1, t2), StructuralError);
}

TEST_CASE("group map distance uses the codomain uniform metric") {
    const auto pair = two_point_full();
    CHECK(group_map_distance(pair->unif, {0, 1}, {0, 1}) == 0.0);
    CHECK(group_map_distance(pair->unif, {0, 1}, {1, 1}) == 1.0);
}

TEST_CASE("triples work identically in rational mode") {
    const auto dom = make_action_pair_trivial(fixtures::two_point<Rational>(Rational(1)));
    const auto cod = make_action_pair_trivial(fixtures::two_point<Rational>(Rational(6, 5)));
    const auto t = make_triple<Rational>(dom, cod, {0, 1}, {0}, {0});
    CHECK(t.order() == Rational(1, 5));
    const auto inv = almost_inverse(t);
    CHECK(inv.inverse.order() == Rational(1, 5));
    CHECK(inv.pass());
}
