#include "doctest.h"

#include "antimagic/constructions.hpp"
#include "oracle.hpp"
#include "printed_formulas.hpp"

using namespace antimagic;

namespace {

const DistanceSet k01{0, 1};
const DistanceSet k02{0, 2};
const DistanceSet k012{0, 1, 2};

void check_labeled(const OrientedGraph& g, const Construction& c, const DistanceSet& D) {
    REQUIRE(c.outcome == Outcome::Labeled);
    REQUIRE(c.labeling);
    auto report = verify_labeling(g, *c.labeling, D);
    CHECK(report.antimagic);
    CHECK(report.collisions.empty());
    CHECK(report.admissible);
}

}  // namespace

TEST_CASE("star characterization examples") {
    CHECK_FALSE(characterize_star(3, 1, {1}).antimagic);
    auto five = characterize_star(5, 2, k02);
    CHECK(five.antimagic);
    CHECK(five.witness);
    auto source = characterize_star(4, 0, k02);
    CHECK_FALSE(source.antimagic);
    CHECK(source.reason == Reason::CenterSourceOrSink);
    CHECK(characterize_star(2, 0, {1}).reason == Reason::TwoSinkLeaves);
    CHECK(characterize_star(5, 1, {1}).reason == Reason::NExceedsBound);
    CHECK(characterize_star(1, 0, {1}).antimagic);
    CHECK(characterize_star(2, 1, {1, 2}).antimagic);
    CHECK_FALSE(characterize_star(3, 1, {1, 2}).antimagic);
    CHECK_FALSE(characterize_star(4, 2, {2}).antimagic);
    CHECK_THROWS_AS(characterize_star(3, 1, {0, 3}), UnsupportedDistanceSet);
    CHECK_THROWS_AS(characterize_star(3, 4, {0}), InputError);
}

TEST_CASE("star labelings follow the closed forms") {
    auto alpha = construct_star_labeling(5, 2, k01);
    CHECK(alpha.rule == "alpha");
    CHECK(alpha.labeling->values() == std::vector<int>{6, 1, 2, 3, 4, 5});
    auto star = build_star({5, 2});
    auto w = verify_labeling(star.graph, *alpha.labeling, k01).weights;
    CHECK(w == std::vector<std::int64_t>{18, 7, 8, 3, 4, 5});

    auto beta = construct_star_labeling(5, 2, k02);
    CHECK(beta.rule == "beta");
    CHECK(beta.labeling->values() == std::vector<int>{3, 1, 2, 4, 5, 6});
    w = verify_labeling(star.graph, *beta.labeling, k02).weights;
    CHECK(w == std::vector<std::int64_t>{3, 16, 17, 4, 5, 6});

    CHECK(construct_star_labeling(4, 1, {0}).rule == "identity");
    CHECK(construct_star_labeling(2, 1, {1}).rule == "oracle");
    CHECK(construct_star_labeling(4, 1, {2}).outcome == Outcome::NotAntimagic);
}

TEST_CASE("every bijection separates the two-leaf path star for {1,2}") {
    auto star = build_star({2, 1});
    std::vector<int> labels{1, 2, 3};
    do {
        CHECK(verify_labeling(star.graph, Labeling(labels), {1, 2}).antimagic);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST_CASE("star characterization agrees with brute force on small stars") {
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t <= n; ++t)
            for (const auto& D : star_distance_sets()) {
                auto arcs = oracle::star_arcs(n, t);
                auto d = oracle::distances(n + 1, arcs);
                const std::set<int> members(D.members().begin(), D.members().end());
                const bool expected =
                    D.max() <= oracle::diameter(d) && oracle::count_antimagic(n + 1, arcs, members) > 0;
                CAPTURE(n);
                CAPTURE(t);
                CAPTURE(D.to_string());
                auto decision = characterize_star(n, t, D);
                CHECK(decision.antimagic == expected);
                if (decision.antimagic) check_labeled(build_star({n, t}).graph, construct_star_labeling(n, t, D), D);
            }
}

TEST_CASE("homogeneous forest rules") {
    CHECK(construct_homogeneous_forest_labeling(3, 4, 0, k01).rule == "h1");
    CHECK(construct_homogeneous_forest_labeling(3, 5, 2, k01).rule == "h2");
    CHECK(construct_homogeneous_forest_labeling(3, 3, 2, k01).rule == "h2-single-sink");
    CHECK(construct_homogeneous_forest_labeling(3, 4, 4, k01).rule == "h3");
    CHECK(construct_homogeneous_forest_labeling(3, 4, 2, k02).rule == "g2");
    auto gap = construct_homogeneous_forest_labeling(2, 3, 1, k01);
    CHECK(gap.outcome == Outcome::SearchFallback);
    CHECK(gap.reason == Reason::ProofGap);
    CHECK(construct_homogeneous_forest_labeling(2, 3, 0, k02).reason == Reason::CenterSourceOrSink);
    CHECK(construct_homogeneous_forest_labeling(2, 3, 1, {2}).reason == Reason::MinDPositive);
    CHECK(construct_homogeneous_forest_labeling(2, 3, 1, {1, 2}).reason == Reason::MinDPositive);
    CHECK_THROWS_AS(construct_homogeneous_forest_labeling(1, 3, 1, k01), InputError);

    auto h2 = construct_homogeneous_forest_labeling(3, 5, 2, k01);
    check_labeled(build_homogeneous_forest(3, {5, 2}).graph, h2, k01);
}

TEST_CASE("homogeneous forest labelings verify across parameters") {
    for (int m = 2; m <= 5; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int t = 0; t <= n; ++t) {
                auto g = build_homogeneous_forest(m, {n, t}).graph;
                for (const auto& D : {DistanceSet{0}, k01, k02, k012}) {
                    if (D.max() > finite_diameter(g)) continue;
                    auto c = construct_homogeneous_forest_labeling(m, n, t, D);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(t);
                    CAPTURE(D.to_string());
                    if (c.outcome == Outcome::Labeled) check_labeled(g, c, D);
                    else CHECK((c.outcome == Outcome::SearchFallback && t == 1 && D == k01));
                }
            }
}

TEST_CASE("the search fallback settles small t=1 instances") {
    for (int n = 2; n <= 4; ++n) {
        auto r = resolve_search_fallback(2, n, 1, k01);
        CHECK(r.status == SearchStatus::Found);
        CHECK(verify_labeling(build_homogeneous_forest(2, {n, 1}).graph, *r.witness, k01).antimagic);
    }
}

TEST_CASE("printed homogeneous formulas are caught") {
    auto h2 = printed::h2(3, 5, 2);
    CHECK(Labeling::bijectivity_problem(h2).has_value());
    CHECK_THROWS_AS(Labeling{h2}, InputError);

    auto h3 = printed::h3(2, 2);
    REQUIRE_FALSE(Labeling::bijectivity_problem(h3).has_value());
    auto report = verify_labeling(build_homogeneous_forest(2, {2, 2}).graph, Labeling(h3), k01);
    CHECK_FALSE(report.antimagic);
    CHECK_FALSE(report.collisions.empty());

    // The corrected forms at the same parameters.
    check_labeled(build_homogeneous_forest(2, {2, 2}).graph, construct_homogeneous_forest_labeling(2, 2, 2, k01), k01);
    check_labeled(build_homogeneous_forest(3, {5, 2}).graph, construct_homogeneous_forest_labeling(3, 5, 2, k01), k01);
}

TEST_CASE("Pi forest labelings") {
    for (std::string text : {"3x3,2x4,1x5", "2x2", "1x2,1x3", "1x1,2x3", "2x1,1x2", "3x4,1x2", "2x5,1x1,2x3"}) {
        auto spec = ForestSpec::parse(text);
        auto g = build_forest_pi(spec).graph;
        for (const auto& D : {DistanceSet{0}, k01, k02, k012}) {
            CAPTURE(text);
            CAPTURE(D.to_string());
            auto c = construct_pi_forest_labeling(spec, D);
            check_labeled(g, c, D);
        }
    }
    auto arcs = ForestSpec::parse("3x1");
    CHECK(construct_pi_forest_labeling(arcs, k02).reason == Reason::DistanceExceedsDiameter);
    CHECK(construct_pi_forest_labeling(arcs, k01).outcome == Outcome::Labeled);
    CHECK(construct_pi_forest_labeling(ForestSpec::parse("2x3"), {1}).reason == Reason::MinDPositive);
    CHECK_THROWS_AS(construct_pi_forest_labeling(ForestSpec::parse("2x3@0"), k01), InputError);
    CHECK(construct_pi_forest_labeling(ForestSpec::parse("2x3"), {0, 3}).reason == Reason::DistanceExceedsDiameter);
}

TEST_CASE("distance zero is necessary on a forest") {
    CHECK(star_forest_necessary_condition(k01));
    CHECK_FALSE(star_forest_necessary_condition({1, 2}));
    // brute force on two copies of the two-leaf path star
    auto arcs = oracle::star_arcs(2, 1);
    for (auto a : oracle::star_arcs(2, 1, 3)) arcs.push_back(a);
    CHECK(oracle::count_antimagic(6, arcs, {1, 2}) == 0);
}
