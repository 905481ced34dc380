#include "antimagic/document.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace antimagic {

GraphDocument GraphDocument::from_graph(const OrientedGraph& g, const std::optional<Labeling>& labeling) {
    GraphDocument doc;
    doc.vertices = g.names();
    for (const auto& [tail, head] : g.arcs()) doc.arcs.emplace_back(g.name(tail), g.name(head));
    if (labeling) {
        if (labeling->size() != g.vertex_count()) throw InputError("labeling size does not match the graph");
        std::map<std::string, int> labels;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) labels[g.names()[v]] = (*labeling)[VertexId(v)];
        doc.labeling = std::move(labels);
    }
    return doc;
}

OrientedGraph GraphDocument::to_graph() const { return OrientedGraph(vertices, arcs); }

Labeling labeling_from_map(const OrientedGraph& g, const std::map<std::string, int>& labels) {
    std::vector<int> values(g.vertex_count(), 0);
    for (const auto& [name, label] : labels) values[g.find(name).value] = label;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (labels.find(g.names()[v]) == labels.end()) throw InputError("no label for vertex '" + g.names()[v] + "'");
    }
    return Labeling(std::move(values));
}

Labeling GraphDocument::to_labeling(const OrientedGraph& g) const {
    if (!labeling) throw InputError("document carries no labeling");
    return labeling_from_map(g, *labeling);
}

Json GraphDocument::to_json() const {
    Json out = Json::object();
    out["vertices"] = vertices;
    Json arcs_json = Json::array();
    for (const auto& [tail, head] : arcs) arcs_json.push_back(Json::array({tail, head}));
    out["arcs"] = std::move(arcs_json);
    if (labeling) {
        Json labels = Json::object();
        // Vertex order reads better than name order; parse() does not depend on it.
        for (const auto& name : vertices) {
            auto it = labeling->find(name);
            if (it != labeling->end()) labels[name] = it->second;
        }
        for (const auto& [name, label] : *labeling) {
            if (!labels.contains(name)) labels[name] = label;
        }
        out["labeling"] = std::move(labels);
    }
    if (metadata) out["metadata"] = *metadata;
    return out;
}

GraphDocument GraphDocument::from_json(const Json& json) {
    try {
        if (!json.is_object()) throw InputError("graph document must be a JSON object");
        GraphDocument doc;
        for (const auto& v : json.at("vertices")) doc.vertices.push_back(v.get<std::string>());
        for (const auto& arc : json.at("arcs")) {
            if (!arc.is_array() || arc.size() != 2) throw InputError("each arc must be a [tail, head] pair");
            doc.arcs.emplace_back(arc[0].get<std::string>(), arc[1].get<std::string>());
        }
        if (json.contains("labeling")) {
            std::map<std::string, int> labels;
            for (const auto& [name, label] : json.at("labeling").items()) labels[name] = label.get<int>();
            doc.labeling = std::move(labels);
        }
        if (json.contains("metadata")) doc.metadata = json.at("metadata");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph document: ") + e.what());
    }
}

std::string GraphDocument::serialize() const { return to_json().dump(2) + "\n"; }

GraphDocument GraphDocument::parse(const std::string& text) {
    Json json;
    try {
        json = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(json);
}

std::map<std::string, int> parse_inline_labeling(const std::string& text) {
    std::string_view rest(text);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (!rest.empty() && rest.front() == '{') {
        try {
            std::map<std::string, int> labels;
            const Json parsed = Json::parse(text);
            for (const auto& [name, label] : parsed.items()) labels[name] = label.get<int>();
            return labels;
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed labeling: ") + e.what());
        }
    }
    std::map<std::string, int> labels;
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        auto eq = item.rfind('=');
        if (eq == std::string::npos) throw InputError("labeling item '" + item + "' is not name=label");
        int value = 0;
        auto digits = std::string_view(item).substr(eq + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw InputError("labeling item '" + item + "' has a non-integer label");
        }
        if (!labels.emplace(item.substr(0, eq), value).second) {
            throw InputError("vertex '" + item.substr(0, eq) + "' labeled twice");
        }
    }
    return labels;
}

Json to_json(const OrientedGraph& g, const WeightReport& report) {
    Json out = Json::object();
    out["distance_set"] = report.distances.to_string();
    Json weights = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) weights[g.names()[v]] = report.weights[v];
    out["weights"] = std::move(weights);
    Json collisions = Json::array();
    for (const auto& [a, b] : report.collisions) {
        collisions.push_back(Json::array({g.name(a), g.name(b)}));
    }
    out["collisions"] = std::move(collisions);
    out["antimagic"] = report.antimagic;
    out["admissible"] = report.admissible;
    return out;
}

Json to_json(const OrientedGraph& g, const SearchResult& result, const DistanceSet& D) {
    Json out = Json::object();
    out["distance_set"] = D.to_string();
    out["status"] = std::string(to_string(result.status));
    out["nodes_explored"] = result.nodes_explored;
    if (result.count) {
        // count is the full number of labelings; orbit_count is what the reduced search enumerated
        out["count"] = *result.count * result.symmetry_order;
        out["orbit_count"] = *result.count;
    }
    out["symmetry_reduced"] = result.symmetry_reduced;
    out["symmetry_order"] = result.symmetry_order;
    Json classes = Json::array();
    for (const auto& c : result.symmetry_classes) {
        Json members = Json::array();
        for (VertexId v : c) members.push_back(g.name(v));
        classes.push_back(std::move(members));
    }
    out["symmetry_classes"] = std::move(classes);
    if (result.witness) {
        Json labels = Json::object();
        for (std::size_t v = 0; v < g.vertex_count(); ++v) labels[g.names()[v]] = (*result.witness)[VertexId(v)];
        out["witness"] = std::move(labels);
    }
    if (!result.labelings.empty()) {
        Json all = Json::array();
        for (const auto& L : result.labelings) all.push_back(L.values());
        out["labelings"] = std::move(all);
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Weakly connected components, each listed in increasing vertex order.
std::vector<std::vector<std::size_t>> components(const OrientedGraph& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [tail, head] : g.arcs()) parent[root(tail.value)] = root(head.value);
    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) grouped[root(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, members] : grouped) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string render_dot(const OrientedGraph& g, const Labeling& labeling, const std::vector<DistanceSet>& Ds,
                       const std::string& title) {
    std::vector<WeightReport> reports;
    for (const auto& D : Ds) reports.push_back(verify_labeling(g, labeling, D));

    std::ostringstream out;
    out << "digraph " << quoted(title) << " {\n";
    if (!Ds.empty()) {
        out << "  // brackets:";
        for (const auto& D : Ds) out << " [" << D.to_string() << "-weight]";
        out << "\n";
    }
    out << "  node [shape=circle];\n";
    std::size_t k = 0;
    for (const auto& component : components(g)) {
        out << "  subgraph cluster_" << k++ << " {\n";
        out << "    style=invis;\n";
        for (std::size_t v : component) {
            std::string text = std::to_string(labeling[VertexId(v)]);
            if (!reports.empty()) text += " ";
            for (const auto& r : reports) text += "[" + std::to_string(r.weights[v]) + "]";
            out << "    " << quoted(g.names()[v]) << " [label=" << quoted(text) << "];\n";
        }
        out << "  }\n";
    }
    for (const auto& [tail, head] : g.arcs()) {
        out << "  " << quoted(g.name(tail)) << " -> " << quoted(g.name(head)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace antimagic
