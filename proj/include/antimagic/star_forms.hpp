#ifndef ANTIMAGIC_STAR_FORMS_HPP
#define ANTIMAGIC_STAR_FORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Orientation class of K_{1,n}: leaves 1..t point into the center, leaves t+1..n are
// pointed to by it.
struct StarShape {
    int leaves = 1;
    int sources = 0;

    void validate() const;
    bool operator==(const StarShape&) const = default;
    auto operator<=>(const StarShape&) const = default;
};

// One "m x n" term of a forest, with an optional source-leaf count shared by all m copies.
struct ForestComponent {
    int multiplicity = 1;
    int leaves = 1;
    std::optional<int> sources;

    bool operator==(const ForestComponent&) const = default;
};

// Parametric star forest. Grammar: comma-separated "m x n" terms, each optionally "@t",
// e.g. "3x5@2" or "3x3,2x4,1x5".
struct ForestSpec {
    std::vector<ForestComponent> components;

    static ForestSpec parse(std::string_view text);
    std::string to_string() const;

    int star_count() const;
    int vertex_count() const;
    // Throws InputError unless every term is well formed and, when require_forest is set,
    // there are at least two stars.
    void validate(bool require_forest = true) const;
    bool all_oriented() const;
    // True when leaf counts strictly increase across terms (the heterogeneous family).
    bool strictly_increasing() const;

    bool operator==(const ForestSpec&) const = default;
};

// Per-copy orientation of a star forest, in vertex-layout order.
using ForestOrientation = std::vector<StarShape>;

std::string to_string(const ForestOrientation& orientation);

// Vertex layout of one star inside a built graph. `group` and `copy` are 1-based indices:
// group j is the j-th term of the spec, copy s the s-th star of that term.
struct StarComponent {
    int group = 1;
    int copy = 1;
    StarShape shape;
    VertexId center;
    std::vector<VertexId> leaves;  // leaves[i-1] is leaf i
};

struct StarForest {
    OrientedGraph graph;
    std::vector<StarComponent> stars;

    ForestOrientation orientation() const;
};

StarForest build_star(const StarShape& shape);
StarForest build_homogeneous_forest(int m, const StarShape& shape);
// Pi orientation: leaves 1..n-1 of every star point into the center, the center points to leaf n.
StarForest build_forest_pi(const ForestSpec& spec);
// Every term must carry an explicit source count.
StarForest build_forest(const ForestSpec& spec);
// One star per entry; all entries form group 1 when called with a flat orientation.
StarForest build_forest(const ForestOrientation& orientation);

// Pi orientation expressed as per-star source counts (t = n - 1).
ForestOrientation pi_orientation(const ForestSpec& spec);

std::vector<StarShape> enumerate_star_orientations(int n);

// Canonical classes: copies of the same K_{1,n} are interchangeable, so each class is a
// nondecreasing t-sequence per leaf count. Groups are ordered by leaf count; output order is
// lexicographic in that layout.
std::vector<ForestOrientation> enumerate_forest_orientations(const ForestSpec& spec);

// Product over leaf-count groups of C(n + m, m).
std::uint64_t count_forest_orientation_classes(const ForestSpec& spec);

}  // namespace antimagic

#endif  // ANTIMAGIC_STAR_FORMS_HPP
