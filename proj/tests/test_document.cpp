#include "doctest.h"

#include <regex>
#include <set>
#include <sstream>

#include "antimagic/constructions.hpp"
#include "antimagic/document.hpp"

using namespace antimagic;

namespace {

struct DotSummary {
    bool balanced = false;
    std::map<std::string, std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    int clusters = 0;
};

// Minimal reader for the subset of DOT that render_dot emits.
DotSummary read_dot(const std::string& text) {
    DotSummary s;
    int depth = 0;
    bool ok = true;
    static const std::regex node(R"re(^\s*"([^"]+)" \[label="([^"]*)"\];$)re");
    static const std::regex edge(R"re(^\s*"([^"]+)" -> "([^"]+)";$)re");
    std::istringstream in(text);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        for (char c : line) {
            if (c == '{' && line.find("//") == std::string::npos) ++depth;
            if (c == '}' && line.find("//") == std::string::npos) --depth;
            ok = ok && depth >= 0;
        }
        if (line.find("subgraph cluster_") != std::string::npos) ++s.clusters;
        if (std::regex_match(line, m, node)) s.labels[m[1]] = m[2];
        if (std::regex_match(line, m, edge)) s.edges.emplace_back(m[1], m[2]);
    }
    s.balanced = ok && depth == 0;
    return s;
}

}  // namespace

TEST_CASE("document round trip") {
    auto forest = build_homogeneous_forest(3, {5, 2});
    auto c = construct_homogeneous_forest_labeling(3, 5, 2, {0, 1});
    auto doc = GraphDocument::from_graph(forest.graph, c.labeling);
    doc.metadata = Json{{"family", "mstar"}};
    auto again = GraphDocument::parse(doc.serialize());
    CHECK(again == doc);
    CHECK(again.to_graph() == forest.graph);
    CHECK(again.to_labeling(again.to_graph()) == *c.labeling);

    auto json = doc.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : json.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"vertices", "arcs", "labeling", "metadata"});
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(GraphDocument::parse("{"), InputError);
    CHECK_THROWS_AS(GraphDocument::parse("[]"), InputError);
    CHECK_THROWS_AS(GraphDocument::parse(R"({"vertices":["a"]})"), InputError);
    CHECK_THROWS_AS(GraphDocument::parse(R"({"vertices":["a","b"],"arcs":[["a"]]})"), InputError);
    auto doc = GraphDocument::parse(R"({"vertices":["a","b"],"arcs":[["a","c"]]})");
    CHECK_THROWS_AS(doc.to_graph(), InputError);
    auto partial = GraphDocument::parse(R"({"vertices":["a","b"],"arcs":[["a","b"]],"labeling":{"a":1}})");
    CHECK_THROWS_AS(partial.to_labeling(partial.to_graph()), InputError);
    auto duplicate = GraphDocument::parse(R"({"vertices":["a","b"],"arcs":[],"labeling":{"a":1,"b":1}})");
    CHECK_THROWS_AS(duplicate.to_labeling(duplicate.to_graph()), InputError);
}

TEST_CASE("inline labelings") {
    CHECK(parse_inline_labeling("a=1,b=2") == std::map<std::string, int>{{"a", 1}, {"b", 2}});
    CHECK(parse_inline_labeling(R"({"a": 2, "b": 1})") == std::map<std::string, int>{{"a", 2}, {"b", 1}});
    CHECK_THROWS_AS(parse_inline_labeling("a=1,b"), InputError);
    CHECK_THROWS_AS(parse_inline_labeling("a=x"), InputError);
    CHECK_THROWS_AS(parse_inline_labeling("a=1,a=2"), InputError);
}

TEST_CASE("weight report json") {
    auto star = build_star({2, 0});
    auto j = to_json(star.graph, verify_labeling(star.graph, Labeling(std::vector<int>{3, 1, 2}), {1}));
    CHECK(j["antimagic"] == false);
    CHECK(j["collisions"] == Json::parse(R"([["v_1","v_2"]])"));
    CHECK(j["weights"]["v"] == 3);
}

TEST_CASE("dot output is well formed and carries labels and weights") {
    auto spec = ForestSpec::parse("3x3,2x4,1x5");
    auto forest = build_forest_pi(spec);
    auto L = *construct_pi_forest_labeling(spec, {0, 1}).labeling;
    const std::vector<DistanceSet> Ds = {{0, 1}, {0, 2}, {0, 1, 2}};
    auto text = render_dot(forest.graph, L, Ds, "pi forest");
    auto dot = read_dot(text);
    CHECK(dot.balanced);
    CHECK(dot.clusters == 6);
    CHECK(dot.labels.size() == forest.graph.vertex_count());
    CHECK(dot.edges.size() == forest.graph.arcs().size());
    std::vector<WeightReport> reports;
    for (const auto& D : Ds) reports.push_back(verify_labeling(forest.graph, L, D));
    for (std::size_t v = 0; v < forest.graph.vertex_count(); ++v) {
        std::string expected = std::to_string(L[VertexId{v}]) + " ";
        for (const auto& r : reports) expected += "[" + std::to_string(r.weights[v]) + "]";
        CHECK(dot.labels[forest.graph.names()[v]] == expected);
    }
    for (const auto& [tail, head] : dot.edges) {
        CHECK(dot.labels.count(tail));
        CHECK(dot.labels.count(head));
    }
}
