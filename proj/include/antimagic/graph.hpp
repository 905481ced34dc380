#ifndef ANTIMAGIC_GRAPH_HPP
#define ANTIMAGIC_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace antimagic {

// Raised for malformed caller input: unknown vertices, bad arcs, non-bijective labelings.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Index of a vertex inside its OrientedGraph.
struct VertexId {
    std::size_t value = 0;

    constexpr VertexId() = default;
    constexpr explicit VertexId(std::size_t v) : value(v) {}
    constexpr auto operator<=>(const VertexId&) const = default;
};

// Directed shortest-path length, or "unreachable".
class Distance {
public:
    static constexpr Distance finite(int length) { return Distance(length); }
    static constexpr Distance unreachable() { return Distance(); }

    constexpr bool is_finite() const { return length_.has_value(); }
    // Throws std::logic_error on an unreachable distance.
    int length() const;

    constexpr bool operator==(const Distance&) const = default;

private:
    constexpr Distance() = default;
    constexpr explicit Distance(int length) : length_(length) {}

    std::optional<int> length_;
};

// Nonempty set of nonnegative distances, kept sorted and unique.
class DistanceSet {
public:
    DistanceSet(std::initializer_list<int> members);
    explicit DistanceSet(std::vector<int> members);

    // Parses "0,1,2" (whitespace tolerated, braces optional).
    static DistanceSet parse(std::string_view text);

    const std::vector<int>& members() const { return members_; }
    bool contains(int d) const;
    int min() const { return members_.front(); }
    int max() const { return members_.back(); }

    // "{0,1,2}"
    std::string to_string() const;
    // "0,1,2", the command-line form
    std::string to_list() const;

    bool operator==(const DistanceSet&) const = default;
    auto operator<=>(const DistanceSet&) const = default;

private:
    std::vector<int> members_;
};

// The seven distance sets with max(D) <= 2, in the order used for reports.
const std::vector<DistanceSet>& star_distance_sets();

// Orientation of a simple graph: no loops, no parallel arcs, no 2-cycles.
// All-pairs distances are computed once at construction.
class OrientedGraph {
public:
    using Arc = std::pair<VertexId, VertexId>;

    OrientedGraph(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& arcs);
    OrientedGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& named_arcs);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexId v) const;
    VertexId find(std::string_view name) const;
    bool contains(VertexId v) const { return v.value < names_.size(); }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<VertexId>& out_neighbors(VertexId v) const;
    std::size_t out_degree(VertexId v) const;
    std::size_t in_degree(VertexId v) const;
    bool has_arc(VertexId tail, VertexId head) const;

    Distance distance(VertexId from, VertexId to) const;

    // Throws InputError when v is not a vertex of this graph.
    void require_vertex(VertexId v) const;

    bool operator==(const OrientedGraph& other) const;

private:
    void build(const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::size_t> in_degree_;
    // Row-major; -1 marks unreachable internally, never exposed.
    std::vector<int> dist_;
};

// Bijection V -> {1..|V|}, indexed by VertexId.
class Labeling {
public:
    // Throws InputError naming a duplicated, out-of-range, or missing label.
    explicit Labeling(std::vector<int> labels);

    static Labeling identity(std::size_t n);

    // Empty when labels form a bijection onto 1..labels.size(); otherwise a description
    // of the first duplicate, out-of-range, or missing value.
    static std::optional<std::string> bijectivity_problem(std::span<const int> labels);

    int operator[](VertexId v) const { return labels_.at(v.value); }
    std::size_t size() const { return labels_.size(); }
    const std::vector<int>& values() const { return labels_; }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<int> labels_;
};

struct WeightReport {
    DistanceSet distances{0};
    std::vector<std::int64_t> weights;
    // Every unordered pair (a, b), a < b, with equal weight.
    std::vector<std::pair<VertexId, VertexId>> collisions;
    bool antimagic = false;
    // Whether every member of D is at most the finite diameter of the graph.
    bool admissible = false;
};

enum class VertexKind { Source, Sink, Internal, Isolated };

struct VertexClass {
    VertexKind kind = VertexKind::Isolated;
    std::size_t out_degree = 0;
    std::size_t in_degree = 0;
};

std::string_view to_string(VertexKind kind);

Distance shortest_distance(const OrientedGraph& g, VertexId u, VertexId v);

// Vertices at a directed distance in D from u, in increasing id order.
std::vector<VertexId> d_neighborhood(const OrientedGraph& g, VertexId u, const DistanceSet& D);

std::int64_t d_weight(const OrientedGraph& g, const Labeling& L, VertexId u, const DistanceSet& D);

WeightReport verify_labeling(const OrientedGraph& g, const Labeling& L, const DistanceSet& D);

// Largest finite directed distance over ordered pairs; 0 for arcless graphs.
int finite_diameter(const OrientedGraph& g);

// D is a legal distance set for g when max(D) does not exceed the finite diameter.
bool is_admissible(const OrientedGraph& g, const DistanceSet& D);

VertexClass classify_vertex(const OrientedGraph& g, VertexId u);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_HPP
