#include "antimagic/star_forms.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace antimagic {

namespace {

int parse_int(std::string_view text, std::string_view what) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "' in forest spec");
    }
    return value;
}

std::string star_center_name(int group, int copy, bool single_index) {
    if (single_index) return "v^" + std::to_string(group);
    return "v_" + std::to_string(copy) + "^" + std::to_string(group);
}

std::string star_leaf_name(int group, int copy, int leaf, bool single_index) {
    if (single_index) return "v_" + std::to_string(leaf) + "^" + std::to_string(group);
    return "v_{" + std::to_string(leaf) + "," + std::to_string(copy) + "}^" + std::to_string(group);
}

struct Placement {
    int group;
    int copy;
    StarShape shape;
};

enum class Naming { Star, Homogeneous, Grouped };

StarForest assemble(const std::vector<Placement>& placements, Naming naming) {
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    std::vector<StarComponent> stars;
    for (const Placement& p : placements) {
        p.shape.validate();
        StarComponent star;
        star.group = p.group;
        star.copy = p.copy;
        star.shape = p.shape;
        star.center = VertexId(names.size());
        switch (naming) {
            case Naming::Star: names.emplace_back("v"); break;
            case Naming::Homogeneous: names.push_back(star_center_name(p.group, p.copy, true)); break;
            case Naming::Grouped: names.push_back(star_center_name(p.group, p.copy, false)); break;
        }
        for (int i = 1; i <= p.shape.leaves; ++i) {
            VertexId leaf(names.size());
            star.leaves.push_back(leaf);
            switch (naming) {
                case Naming::Star: names.push_back("v_" + std::to_string(i)); break;
                case Naming::Homogeneous: names.push_back(star_leaf_name(p.group, p.copy, i, true)); break;
                case Naming::Grouped: names.push_back(star_leaf_name(p.group, p.copy, i, false)); break;
            }
            if (i <= p.shape.sources) {
                arcs.emplace_back(leaf.value, star.center.value);
            } else {
                arcs.emplace_back(star.center.value, leaf.value);
            }
        }
        stars.push_back(std::move(star));
    }
    return StarForest{OrientedGraph(std::move(names), arcs), std::move(stars)};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

void StarShape::validate() const {
    if (leaves < 1) throw InputError("a star needs at least one leaf, got n=" + std::to_string(leaves));
    if (sources < 0 || sources > leaves) {
        throw InputError("source count t=" + std::to_string(sources) + " outside 0.." + std::to_string(leaves));
    }
}

ForestSpec ForestSpec::parse(std::string_view text) {
    ForestSpec spec;
    while (true) {
        auto comma = text.find(',');
        std::string_view term = text.substr(0, comma);
        ForestComponent c;
        auto at = term.find('@');
        std::string_view size_part = term.substr(0, at);
        auto x = size_part.find_first_of("xX");
        if (x == std::string_view::npos) {
            throw InputError("forest term '" + std::string(term) + "' is not of the form MxN[@T]");
        }
        c.multiplicity = parse_int(size_part.substr(0, x), "multiplicity");
        c.leaves = parse_int(size_part.substr(x + 1), "leaf count");
        if (at != std::string_view::npos) c.sources = parse_int(term.substr(at + 1), "source count");
        spec.components.push_back(c);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    spec.validate(false);
    return spec;
}

std::string ForestSpec::to_string() const {
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += ',';
        out += std::to_string(c.multiplicity) + "x" + std::to_string(c.leaves);
        if (c.sources) out += "@" + std::to_string(*c.sources);
    }
    return out;
}

int ForestSpec::star_count() const {
    int total = 0;
    for (const auto& c : components) total += c.multiplicity;
    return total;
}

int ForestSpec::vertex_count() const {
    int total = 0;
    for (const auto& c : components) total += c.multiplicity * (c.leaves + 1);
    return total;
}

void ForestSpec::validate(bool require_forest) const {
    if (components.empty()) throw InputError("forest spec has no terms");
    for (const auto& c : components) {
        if (c.multiplicity < 1) throw InputError("multiplicity must be at least 1");
        StarShape{c.leaves, c.sources.value_or(0)}.validate();
    }
    if (require_forest && star_count() < 2) {
        throw InputError("a star forest needs at least two stars, spec '" + to_string() + "' has " +
                         std::to_string(star_count()));
    }
}

bool ForestSpec::all_oriented() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.sources.has_value(); });
}

bool ForestSpec::strictly_increasing() const {
    for (std::size_t k = 1; k < components.size(); ++k) {
        if (components[k].leaves <= components[k - 1].leaves) return false;
    }
    return true;
}

std::string to_string(const ForestOrientation& orientation) {
    std::string out;
    for (const auto& s : orientation) {
        if (!out.empty()) out += ' ';
        out += "K1," + std::to_string(s.leaves) + "@" + std::to_string(s.sources);
    }
    return out;
}

ForestOrientation StarForest::orientation() const {
    ForestOrientation result;
    for (const auto& s : stars) result.push_back(s.shape);
    return result;
}

StarForest build_star(const StarShape& shape) { return assemble({{1, 1, shape}}, Naming::Star); }

StarForest build_homogeneous_forest(int m, const StarShape& shape) {
    if (m < 2) throw InputError("a homogeneous star forest needs m >= 2, got m=" + std::to_string(m));
    std::vector<Placement> placements;
    for (int j = 1; j <= m; ++j) placements.push_back({j, 1, shape});
    return assemble(placements, Naming::Homogeneous);
}

ForestOrientation pi_orientation(const ForestSpec& spec) {
    spec.validate();
    ForestOrientation result;
    for (const auto& c : spec.components) {
        for (int s = 0; s < c.multiplicity; ++s) result.push_back({c.leaves, c.leaves - 1});
    }
    return result;
}

StarForest build_forest_pi(const ForestSpec& spec) {
    spec.validate();
    std::vector<Placement> placements;
    for (std::size_t j = 0; j < spec.components.size(); ++j) {
        const auto& c = spec.components[j];
        for (int s = 1; s <= c.multiplicity; ++s) {
            placements.push_back({static_cast<int>(j + 1), s, StarShape{c.leaves, c.leaves - 1}});
        }
    }
    return assemble(placements, Naming::Grouped);
}

StarForest build_forest(const ForestSpec& spec) {
    spec.validate();
    if (!spec.all_oriented()) throw InputError("every term needs an explicit @t source count");
    std::vector<Placement> placements;
    for (std::size_t j = 0; j < spec.components.size(); ++j) {
        const auto& c = spec.components[j];
        for (int s = 1; s <= c.multiplicity; ++s) {
            placements.push_back({static_cast<int>(j + 1), s, StarShape{c.leaves, *c.sources}});
        }
    }
    return assemble(placements, Naming::Grouped);
}

StarForest build_forest(const ForestOrientation& orientation) {
    if (orientation.size() < 2) throw InputError("a star forest needs at least two stars");
    std::vector<Placement> placements;
    int group = 0;
    int copy = 0;
    for (std::size_t k = 0; k < orientation.size(); ++k) {
        if (k == 0 || orientation[k].leaves != orientation[k - 1].leaves) {
            ++group;
            copy = 0;
        }
        placements.push_back({group, ++copy, orientation[k]});
    }
    return assemble(placements, Naming::Grouped);
}

std::vector<StarShape> enumerate_star_orientations(int n) {
    if (n < 1) throw InputError("a star needs at least one leaf");
    std::vector<StarShape> shapes;
    for (int t = 0; t <= n; ++t) shapes.push_back({n, t});
    return shapes;
}

namespace {

std::map<int, int> group_by_leaves(const ForestSpec& spec) {
    spec.validate(false);
    std::map<int, int> groups;
    for (const auto& c : spec.components) groups[c.leaves] += c.multiplicity;
    return groups;
}

// Appends every nondecreasing sequence of `length` values in [low, high] to prefix.
void extend_multisets(int leaves, int length, int low, ForestOrientation& prefix,
                      const std::vector<std::pair<int, int>>& rest, std::size_t next_group,
                      std::vector<ForestOrientation>& out);

void enumerate_groups(const std::vector<std::pair<int, int>>& groups, std::size_t k, ForestOrientation& prefix,
                      std::vector<ForestOrientation>& out) {
    if (k == groups.size()) {
        out.push_back(prefix);
        return;
    }
    extend_multisets(groups[k].first, groups[k].second, 0, prefix, groups, k + 1, out);
}

void extend_multisets(int leaves, int length, int low, ForestOrientation& prefix,
                      const std::vector<std::pair<int, int>>& rest, std::size_t next_group,
                      std::vector<ForestOrientation>& out) {
    if (length == 0) {
        enumerate_groups(rest, next_group, prefix, out);
        return;
    }
    for (int t = low; t <= leaves; ++t) {
        prefix.push_back({leaves, t});
        extend_multisets(leaves, length - 1, t, prefix, rest, next_group, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ForestOrientation> enumerate_forest_orientations(const ForestSpec& spec) {
    auto grouped = group_by_leaves(spec);
    std::vector<std::pair<int, int>> groups(grouped.begin(), grouped.end());
    std::vector<ForestOrientation> out;
    ForestOrientation prefix;
    enumerate_groups(groups, 0, prefix, out);
    return out;
}

std::uint64_t count_forest_orientation_classes(const ForestSpec& spec) {
    std::uint64_t total = 1;
    for (const auto& [n, m] : group_by_leaves(spec)) {
        total *= binomial(static_cast<std::uint64_t>(n + m), static_cast<std::uint64_t>(m));
    }
    return total;
}

}  // namespace antimagic
