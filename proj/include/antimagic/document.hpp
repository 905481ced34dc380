#ifndef ANTIMAGIC_DOCUMENT_HPP
#define ANTIMAGIC_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "antimagic/graph.hpp"
#include "antimagic/search.hpp"

namespace antimagic {

using Json = nlohmann::ordered_json;

// Serialized graph with an optional labeling. Key order on output is fixed:
// vertices, arcs, labeling, metadata.
struct GraphDocument {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::optional<std::map<std::string, int>> labeling;
    std::optional<Json> metadata;

    static GraphDocument from_graph(const OrientedGraph& g, const std::optional<Labeling>& labeling = std::nullopt);

    OrientedGraph to_graph() const;
    // Labeling in the vertex order of to_graph(). Throws InputError when absent or incomplete.
    Labeling to_labeling(const OrientedGraph& g) const;

    Json to_json() const;
    // Throws InputError on schema violations.
    static GraphDocument from_json(const Json& json);

    std::string serialize() const;
    static GraphDocument parse(const std::string& text);

    bool operator==(const GraphDocument&) const = default;
};

// Reads a labeling given either as a JSON object {"vertex": label, ...} or as inline
// "name=label,name=label" text.
std::map<std::string, int> parse_inline_labeling(const std::string& text);
Labeling labeling_from_map(const OrientedGraph& g, const std::map<std::string, int>& labels);

Json to_json(const OrientedGraph& g, const WeightReport& report);
Json to_json(const OrientedGraph& g, const SearchResult& result, const DistanceSet& D);

// One digraph; each connected component sits in its own cluster. Vertex labels read
// "<label> [w_D1][w_D2]..." in the order of Ds.
std::string render_dot(const OrientedGraph& g, const Labeling& labeling, const std::vector<DistanceSet>& Ds,
                       const std::string& title = "G");

}  // namespace antimagic

#endif  // ANTIMAGIC_DOCUMENT_HPP
