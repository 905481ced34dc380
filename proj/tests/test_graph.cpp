#include "doctest.h"

#include <random>

#include "antimagic/graph.hpp"
#include "antimagic/star_forms.hpp"
#include "oracle.hpp"

using namespace antimagic;

namespace {

OrientedGraph from_arcs(int n, const oracle::Arcs& arcs) {
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
    std::vector<std::pair<std::size_t, std::size_t>> index_arcs(arcs.begin(), arcs.end());
    return OrientedGraph(names, index_arcs);
}

std::set<int> as_set(const DistanceSet& D) { return {D.members().begin(), D.members().end()}; }

std::vector<int> shuffled_labels(int n, std::mt19937& rng) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

VertexId id(const StarForest& f, const std::string& name) { return f.graph.find(name); }

}  // namespace

TEST_CASE("distances in a two-leaf star") {
    auto star = build_star({2, 1});
    CHECK(shortest_distance(star.graph, id(star, "v_1"), id(star, "v_2")) == Distance::finite(2));
    CHECK_FALSE(shortest_distance(star.graph, id(star, "v_2"), id(star, "v_1")).is_finite());
    CHECK(shortest_distance(star.graph, id(star, "v"), id(star, "v")) == Distance::finite(0));
    CHECK_THROWS_AS(shortest_distance(star.graph, id(star, "v"), VertexId{7}), InputError);
    CHECK_THROWS_AS(Distance::unreachable().length(), std::logic_error);
}

TEST_CASE("neighborhoods in a five-leaf star") {
    auto star = build_star({5, 2});
    auto names = [&](const std::vector<VertexId>& ids) {
        std::vector<std::string> out;
        for (auto v : ids) out.push_back(star.graph.name(v));
        return out;
    };
    CHECK(names(d_neighborhood(star.graph, id(star, "v"), {1})) == std::vector<std::string>{"v_3", "v_4", "v_5"});
    CHECK(names(d_neighborhood(star.graph, id(star, "v_1"), {2})) == std::vector<std::string>{"v_3", "v_4", "v_5"});
    for (std::size_t v = 0; v < star.graph.vertex_count(); ++v) {
        CHECK(d_neighborhood(star.graph, VertexId{v}, {0}) == std::vector<VertexId>{VertexId{v}});
    }
}

TEST_CASE("weights of the five-leaf star under the first-two-leaves-in labeling") {
    auto star = build_star({5, 2});
    // leaves get i, center gets 6
    Labeling L(std::vector<int>{6, 1, 2, 3, 4, 5});
    CHECK(d_weight(star.graph, L, id(star, "v"), {0, 1}) == 6 + 3 + 4 + 5);
    CHECK(d_weight(star.graph, L, id(star, "v_5"), {1}) == 0);
    for (std::size_t v = 0; v < 6; ++v) CHECK(d_weight(star.graph, L, VertexId{v}, {0}) == L[VertexId{v}]);
}

TEST_CASE("labelings must be bijections onto 1..n") {
    CHECK_THROWS_AS(Labeling(std::vector<int>{1, 1, 3}), InputError);
    CHECK_THROWS_AS(Labeling(std::vector<int>{1, 2, 4}), InputError);
    CHECK_THROWS_AS(Labeling(std::vector<int>{0, 1, 2}), InputError);
    CHECK(Labeling::bijectivity_problem(std::vector<int>{2, 3, 1}) == std::nullopt);
    auto problem = Labeling::bijectivity_problem(std::vector<int>{1, 2, 2});
    REQUIRE(problem);
    CHECK(problem->find('2') != std::string::npos);
    auto star = build_star({2, 0});
    CHECK_THROWS_AS(verify_labeling(star.graph, Labeling::identity(2), {0}), InputError);
}

TEST_CASE("verify_labeling reports collisions") {
    auto star = build_star({2, 0});
    auto report = verify_labeling(star.graph, Labeling(std::vector<int>{3, 1, 2}), {1});
    CHECK_FALSE(report.antimagic);
    REQUIRE(report.collisions.size() == 1);
    CHECK(star.graph.name(report.collisions[0].first) == "v_1");
    CHECK(star.graph.name(report.collisions[0].second) == "v_2");

    auto forest = build_homogeneous_forest(3, {5, 2});
    CHECK(verify_labeling(forest.graph, Labeling::identity(18), {0}).antimagic);
}

TEST_CASE("diameter and vertex classes") {
    CHECK(finite_diameter(build_star({2, 1}).graph) == 2);
    CHECK(finite_diameter(OrientedGraph({"a"}, std::vector<std::pair<std::size_t, std::size_t>>{})) == 0);
    CHECK(finite_diameter(build_star({3, 3}).graph) == 1);
    CHECK(is_admissible(build_star({3, 1}).graph, {0, 2}));
    CHECK_FALSE(is_admissible(build_star({3, 3}).graph, {0, 2}));

    for (int n = 1; n <= 4; ++n) {
        auto center = [&](int t) { return classify_vertex(build_star({n, t}).graph, VertexId{0}).kind; };
        CHECK(center(0) == VertexKind::Source);
        CHECK(center(n) == VertexKind::Sink);
        for (int t = 1; t < n; ++t) CHECK(center(t) == VertexKind::Internal);
    }
    CHECK(classify_vertex(OrientedGraph({"a"}, std::vector<std::pair<std::size_t, std::size_t>>{}), VertexId{0}).kind ==
          VertexKind::Isolated);
}

TEST_CASE("graph construction rejects malformed input") {
    using Named = std::vector<std::pair<std::string, std::string>>;
    CHECK_THROWS_AS(OrientedGraph({"a", "b"}, Named{{"a", "a"}}), InputError);
    CHECK_THROWS_AS(OrientedGraph({"a", "b"}, Named{{"a", "b"}, {"a", "b"}}), InputError);
    CHECK_THROWS_AS(OrientedGraph({"a", "b"}, Named{{"a", "b"}, {"b", "a"}}), InputError);
    CHECK_THROWS_AS(OrientedGraph({"a", "a"}, Named{}), InputError);
    CHECK_THROWS_AS(OrientedGraph({"a", "b"}, Named{{"a", "c"}}), InputError);
    CHECK_THROWS_AS(DistanceSet::parse("0,x"), InputError);
    CHECK_THROWS_AS(DistanceSet::parse(""), InputError);
    CHECK(DistanceSet::parse("{2,0}") == DistanceSet{0, 2});
    CHECK(DistanceSet::parse("0,1,2").to_string() == "{0,1,2}");
}

TEST_CASE("property: distances match Floyd-Warshall and path enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 7;
        auto arcs = oracle::random_arcs(n, 0.45, rng);
        auto g = from_arcs(n, arcs);
        auto fw = oracle::distances(n, arcs);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                Distance d = shortest_distance(g, VertexId(u), VertexId(v));
                const int expected = fw[u][v];
                CHECK(expected == oracle::path_distance(n, arcs, u, v));
                if (expected == oracle::kInf) CHECK_FALSE(d.is_finite());
                else CHECK(d == Distance::finite(expected));
            }
        CHECK(finite_diameter(g) == oracle::diameter(fw));
    }
}

TEST_CASE("property: weights and verdicts match the reference computation") {
    std::mt19937 rng(5);
    const std::vector<DistanceSet> sets = {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}, {1, 3}, {0, 2, 3}};
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + trial % 8;
        auto arcs = oracle::random_arcs(n, 0.4, rng);
        auto g = from_arcs(n, arcs);
        auto fw = oracle::distances(n, arcs);
        auto labels = shuffled_labels(n, rng);
        Labeling L(labels);
        for (const auto& D : sets) {
            auto expected = oracle::weights(fw, labels, as_set(D));
            auto report = verify_labeling(g, L, D);
            CHECK(report.weights == expected);
            CHECK(report.antimagic == oracle::distinct(expected));
            CHECK(report.antimagic == report.collisions.empty());
            CHECK(report.admissible == (D.max() <= oracle::diameter(fw)));
        }
    }
}

TEST_CASE("property: weights are additive over disjoint distance sets") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 6;
        auto g = from_arcs(n, oracle::random_arcs(n, 0.5, rng));
        Labeling L(shuffled_labels(n, rng));
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            const VertexId v{u};
            CHECK(d_weight(g, L, v, {0, 1, 2}) ==
                  d_weight(g, L, v, {0}) + d_weight(g, L, v, {1}) + d_weight(g, L, v, {2}));
            CHECK(d_weight(g, L, v, {1, 3}) == d_weight(g, L, v, {1}) + d_weight(g, L, v, {3}));
        }
    }
}

TEST_CASE("property: every oriented graph is antimagic for distance zero under any bijection") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 9;
        auto g = from_arcs(n, oracle::random_arcs(n, 0.5, rng));
        CHECK(verify_labeling(g, Labeling(shuffled_labels(n, rng)), {0}).antimagic);
    }
}

TEST_CASE("property: relabeling vertices by a permutation permutes the weights") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 6;
        auto arcs = oracle::random_arcs(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        oracle::Arcs moved;
        for (auto [a, b] : arcs) moved.emplace_back(perm[a], perm[b]);
        auto labels = shuffled_labels(n, rng);
        std::vector<int> moved_labels(n);
        for (int v = 0; v < n; ++v) moved_labels[perm[v]] = labels[v];
        auto g = from_arcs(n, arcs);
        auto h = from_arcs(n, moved);
        for (const DistanceSet& D : star_distance_sets()) {
            auto a = verify_labeling(g, Labeling(labels), D);
            auto b = verify_labeling(h, Labeling(moved_labels), D);
            for (int v = 0; v < n; ++v) CHECK(a.weights[v] == b.weights[perm[v]]);
            CHECK(a.antimagic == b.antimagic);
        }
    }
}
