#include "egh/errors.hpp"
#include "egh/group.hpp"
#include "egh/metric_space.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace egh;

TEST_CASE("one-point and two-point spaces are valid") {
    CHECK(validate_space(fixtures::point_space<double>()).valid());
    CHECK(validate_space(fixtures::two_point<double>(1.0)).valid());
}

TEST_CASE("triangle violation is reported with its witnessing triple") {
    SquareTable<double> t(3, 0.0);
    t(0, 1) = t(1, 0) = 1.0;
    t(1, 2) = t(2, 1) = 1.0;
    t(0, 2) = t(2, 0) = 3.0;
    const SpaceT<double> space{default_labels(3), t};
    const auto report = validate_space(space);
    REQUIRE_FALSE(report.valid());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].axiom == Axiom::triangle);
    CHECK(report.violations[0].i == 0);
    CHECK(report.violations[0].j == 2);
    CHECK(report.violations[0].via == 1);
}

TEST_CASE("every violated axiom is listed") {
    SquareTable<double> t(2, 0.0);
    t(0, 0) = 0.5;        // diagonal
    t(0, 1) = 1.0;
    t(1, 0) = 2.0;        // symmetry
    const SpaceT<double> space{default_labels(2), t};
    const auto report = validate_space(space);
    auto has = [&](Axiom a) {
        return std::any_of(report.violations.begin(), report.violations.end(),
                           [&](const AxiomViolation& v) { return v.axiom == a; });
    };
    CHECK(has(Axiom::diagonal));
    CHECK(has(Axiom::symmetry));
}

TEST_CASE("dimension mismatch is a structural error, not an axiom violation") {
    SpaceT<double> space;
    space.labels = {"a", "b", "c"};
    space.dist = SquareTable<double>(2, 0.0);
    space.dist(0, 1) = space.dist(1, 0) = 1.0;
    CHECK_THROWS_AS(validate_space(space), StructuralError);
    CHECK_THROWS_AS(validate_space(SpaceT<double>{}), StructuralError);
}

TEST_CASE("exact mode flags nonpositive distances that float tolerance forgives") {
    SquareTable<Rational> t(2, Rational(0));
    t(0, 1) = t(1, 0) = Rational(1, 2'000'000'000);
    const SpaceT<Rational> space{default_labels(2), t};
    CHECK(validate_space(space).valid());

    SquareTable<double> tf(2, 0.0);
    tf(0, 1) = tf(1, 0) = 5e-10; // below the declared float tolerance
    const SpaceT<double> fspace{default_labels(2), tf};
    CHECK_FALSE(validate_space(fspace).valid());
}

TEST_CASE("isometry group of the two-point space is identity plus swap") {
    const auto group = isometry_group(fixtures::two_point<double>(1.0));
    REQUIRE(group.order() == 2);
    CHECK(group.elements[0] == Perm{0, 1});
    CHECK(group.elements[1] == Perm{1, 0});
    CHECK(group.identity == 0);
}

TEST_CASE("isometry group of three equidistant points is all six permutations") {
    const auto space = fixtures::equilateral<double>(3, 1.0);
    const auto group = isometry_group(space);
    REQUIRE(group.order() == 6);
    // independent route: every permutation preserves an equilateral table
    std::vector<Perm> expected;
    Perm p{0, 1, 2};
    do {
        if (oracle::map_distortion(space, space, p) == 0.0) expected.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(expected.size() == 6);
    CHECK(group.elements == expected); // lexicographic in both cases
}

TEST_CASE("space with all distinct distances has a trivial isometry group") {
    const auto space = fixtures::from_rows<double>(
        {{0.0, 1.0, 2.0}, {1.0, 0.0, 2.5}, {2.0, 2.5, 0.0}});
    const auto group = isometry_group(space);
    REQUIRE(group.order() == 1);
    CHECK(group.elements[0] == Perm{0, 1, 2});
}

TEST_CASE("isometry group elements come out lexicographically sorted") {
    const auto space = fixtures::cycle<double>(4, 1.0);
    const auto group = isometry_group(space);
    REQUIRE(group.order() == 8); // dihedral
    CHECK(std::is_sorted(group.elements.begin(), group.elements.end()));
}

TEST_CASE("group tables satisfy the group axioms exhaustively") {
    for (std::size_t n : {3u, 4u, 5u}) {
        const auto space = fixtures::cycle<double>(n, 1.0);
        const auto g = isometry_group(space);
        for (std::size_t a = 0; a < g.order(); ++a) {
            CHECK(g.mul(a, g.identity) == static_cast<int>(a));
            CHECK(g.mul(g.identity, a) == static_cast<int>(a));
            CHECK(g.mul(a, g.inv[a]) == g.identity);
            for (std::size_t b = 0; b < g.order(); ++b) {
                CHECK(g.elements[g.mul(a, b)] == compose(g.elements[a], g.elements[b]));
                for (std::size_t c = 0; c < g.order(); ++c)
                    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            }
        }
    }
}

TEST_CASE("uniform metric matches the brute-force displacement maximum") {
    const auto space = fixtures::cycle<double>(4, 1.0);
    const auto group = isometry_group(space);
    const auto unif = uniform_metric(group, space);
    for (std::size_t g = 0; g < group.order(); ++g) {
        CHECK(unif(g, g) == 0.0);
        for (std::size_t h = 0; h < group.order(); ++h)
            CHECK(unif(g, h) ==
                  oracle::uniform_entry(space, group.elements[g], group.elements[h]));
    }

    // frozen: one-step rotation displaces every vertex by exactly one edge
    const int rot = group.index_of(Perm{1, 2, 3, 0});
    REQUIRE(rot >= 0);
    CHECK(unif(group.identity, rot) == 1.0);
}

TEST_CASE("uniform entry between swap and identity on the two-point space is the diameter") {
    const auto space = fixtures::two_point<double>(1.0);
    const auto group = isometry_group(space);
    const auto unif = uniform_metric(group, space);
    CHECK(unif(0, 1) == 1.0);
}

TEST_CASE("uniform metric satisfies the metric axioms on every corpus group") {
    for (const auto& pair : fixtures::small_pair_corpus<double>(24)) {
        const auto& u = pair->unif.table;
        if (u.size() <= 1) continue;
        SpaceT<double> as_space{default_labels(u.size(), "g"), u};
        CHECK(validate_space(as_space).valid());
    }
    // a full dihedral group of order 8 as well
    const auto square = fixtures::cycle<double>(4, 1.0);
    const auto pair = make_action_pair_full(square);
    SpaceT<double> as_space{default_labels(pair->group.order(), "g"), pair->unif.table};
    CHECK(validate_space(as_space).valid());
}

TEST_CASE("uniform metric is invariant under right translation by group elements") {
    const auto space = fixtures::cycle<double>(5, 1.0);
    const auto pair = make_action_pair_full(space);
    const auto& g = pair->group;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (std::size_t h = 0; h < g.order(); ++h) {
                CHECK(pair->unif(g.mul(a, h), g.mul(b, h)) == pair->unif(a, b));
                CHECK(pair->unif(g.mul(h, a), g.mul(h, b)) == pair->unif(a, b));
            }
}

TEST_CASE("subgroup closure of the identity is trivial") {
    const auto group = isometry_group(fixtures::two_point<double>(1.0));
    const auto sub = subgroup_closure(group, {group.identity});
    CHECK(sub.order() == 1);
}

TEST_CASE("subgroup closure of the swap recovers the whole order-2 group") {
    const auto group = isometry_group(fixtures::two_point<double>(1.0));
    const int swap = group.index_of(Perm{1, 0});
    REQUIRE(swap >= 0);
    CHECK(subgroup_closure(group, {swap}).order() == 2);
}

TEST_CASE("a 3-cycle generates the order-3 subgroup of S3") {
    const auto group = isometry_group(fixtures::equilateral<double>(3, 1.0));
    const int three_cycle = group.index_of(Perm{1, 2, 0});
    REQUIRE(three_cycle >= 0);
    const auto sub = subgroup_closure(group, {three_cycle});
    REQUIRE(sub.order() == 3);
    CHECK(sub.index_of(Perm{2, 0, 1}) >= 0);
}

TEST_CASE("group/space mismatch is rejected") {
    const auto group = isometry_group(fixtures::two_point<double>(1.0));
    const auto other = fixtures::equilateral<double>(3, 1.0);
    CHECK_THROWS_AS(uniform_metric(group, other), StructuralError);
}

TEST_CASE("non-isometric permutations are rejected when pairing") {
    auto space = fixtures::from_rows<double>(
        {{0.0, 1.0, 2.0}, {1.0, 0.0, 2.5}, {2.0, 2.5, 0.0}});
    Group bogus = group_closure({Perm{1, 0, 2}}, 3);
    CHECK_THROWS_AS(make_action_pair(std::move(space), std::move(bogus)), StructuralError);
}

TEST_CASE("isometry groups agree between float and rational modes") {
    const auto fspace = fixtures::cycle<double>(4, 1.0);
    const auto rspace = fixtures::cycle<Rational>(4, Rational(1));
    CHECK(isometry_group(fspace).elements == isometry_group(rspace).elements);
}
