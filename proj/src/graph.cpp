#include "antimagic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace antimagic {

namespace {

constexpr int kUnreachable = -1;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

int Distance::length() const {
    if (!length_) throw std::logic_error("length() of an unreachable distance");
    return *length_;
}

DistanceSet::DistanceSet(std::initializer_list<int> members) : DistanceSet(std::vector<int>(members)) {}

DistanceSet::DistanceSet(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw InputError("distance set must be nonempty");
    for (int d : members_) {
        if (d < 0) throw InputError("distance set members must be nonnegative, got " + std::to_string(d));
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

DistanceSet DistanceSet::parse(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    std::vector<int> members;
    while (true) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw InputError("malformed distance set '" + std::string(text) + "'");
        }
        members.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return DistanceSet(std::move(members));
}

bool DistanceSet::contains(int d) const {
    return std::binary_search(members_.begin(), members_.end(), d);
}

std::string DistanceSet::to_list() const {
    std::string out;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(members_[k]);
    }
    return out;
}

std::string DistanceSet::to_string() const { return "{" + to_list() + "}"; }

const std::vector<DistanceSet>& star_distance_sets() {
    static const std::vector<DistanceSet> sets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    return sets;
}

OrientedGraph::OrientedGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::size_t, std::size_t>>& arcs)
    : names_(std::move(names)) {
    build(arcs);
}

OrientedGraph::OrientedGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& named_arcs)
    : names_(std::move(names)) {
    // index_ is needed before arcs can be resolved; build() refills it identically.
    for (std::size_t k = 0; k < names_.size(); ++k) index_.emplace(names_[k], k);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    arcs.reserve(named_arcs.size());
    for (const auto& [tail, head] : named_arcs) {
        auto t = index_.find(tail);
        auto h = index_.find(head);
        if (t == index_.end()) throw InputError("arc tail '" + tail + "' is not a declared vertex");
        if (h == index_.end()) throw InputError("arc head '" + head + "' is not a declared vertex");
        arcs.emplace_back(t->second, h->second);
    }
    build(arcs);
}

void OrientedGraph::build(const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    const std::size_t n = names_.size();
    index_.clear();
    for (std::size_t k = 0; k < n; ++k) {
        if (!index_.emplace(names_[k], k).second) throw InputError("duplicate vertex name '" + names_[k] + "'");
    }
    out_.assign(n, {});
    in_degree_.assign(n, 0);
    std::vector<char> adjacent(n * n, 0);
    for (const auto& [tail, head] : arcs) {
        if (tail >= n || head >= n) throw InputError("arc endpoint out of range");
        if (tail == head) throw InputError("self-loop at '" + names_[tail] + "'");
        if (adjacent[tail * n + head]) {
            throw InputError("duplicate arc " + names_[tail] + "->" + names_[head]);
        }
        if (adjacent[head * n + tail]) {
            throw InputError("arcs in both directions between '" + names_[tail] + "' and '" + names_[head] + "'");
        }
        adjacent[tail * n + head] = 1;
        arcs_.emplace_back(VertexId(tail), VertexId(head));
        out_[tail].emplace_back(head);
        ++in_degree_[head];
    }

    dist_.assign(n * n, kUnreachable);
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        int* row = dist_.data() + s * n;
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (VertexId y : out_[x]) {
                if (row[y.value] == kUnreachable) {
                    row[y.value] = row[x] + 1;
                    queue.push_back(y.value);
                }
            }
        }
    }
}

void OrientedGraph::require_vertex(VertexId v) const {
    if (!contains(v)) {
        throw InputError("vertex index " + std::to_string(v.value) + " is not in a graph of " +
                         std::to_string(names_.size()) + " vertices");
    }
}

const std::string& OrientedGraph::name(VertexId v) const {
    require_vertex(v);
    return names_[v.value];
}

VertexId OrientedGraph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw InputError("unknown vertex '" + std::string(name) + "'");
    return VertexId(it->second);
}

const std::vector<VertexId>& OrientedGraph::out_neighbors(VertexId v) const {
    require_vertex(v);
    return out_[v.value];
}

std::size_t OrientedGraph::out_degree(VertexId v) const { return out_neighbors(v).size(); }

std::size_t OrientedGraph::in_degree(VertexId v) const {
    require_vertex(v);
    return in_degree_[v.value];
}

bool OrientedGraph::has_arc(VertexId tail, VertexId head) const {
    require_vertex(head);
    const auto& outs = out_neighbors(tail);
    return std::find(outs.begin(), outs.end(), head) != outs.end();
}

Distance OrientedGraph::distance(VertexId from, VertexId to) const {
    require_vertex(from);
    require_vertex(to);
    int d = dist_[from.value * names_.size() + to.value];
    return d == kUnreachable ? Distance::unreachable() : Distance::finite(d);
}

bool OrientedGraph::operator==(const OrientedGraph& other) const {
    return names_ == other.names_ && arcs_ == other.arcs_;
}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    if (auto problem = bijectivity_problem(labels_)) throw InputError("labeling is not a bijection: " + *problem);
}

Labeling Labeling::identity(std::size_t n) {
    std::vector<int> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = static_cast<int>(k + 1);
    return Labeling(std::move(labels));
}

std::optional<std::string> Labeling::bijectivity_problem(std::span<const int> labels) {
    const std::size_t n = labels.size();
    std::vector<std::size_t> first_seen(n + 1, n);
    for (std::size_t k = 0; k < n; ++k) {
        int x = labels[k];
        if (x < 1 || static_cast<std::size_t>(x) > n) {
            return "label " + std::to_string(x) + " at position " + std::to_string(k) + " is outside 1.." +
                   std::to_string(n);
        }
        if (first_seen[x] != n) {
            return "duplicate label " + std::to_string(x) + " at positions " + std::to_string(first_seen[x]) +
                   " and " + std::to_string(k);
        }
        first_seen[x] = k;
    }
    // n values in 1..n without duplicates cover the range; nothing can be missing.
    return std::nullopt;
}

std::string_view to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Source: return "source";
        case VertexKind::Sink: return "sink";
        case VertexKind::Internal: return "internal";
        case VertexKind::Isolated: return "isolated";
    }
    return "?";
}

Distance shortest_distance(const OrientedGraph& g, VertexId u, VertexId v) { return g.distance(u, v); }

std::vector<VertexId> d_neighborhood(const OrientedGraph& g, VertexId u, const DistanceSet& D) {
    g.require_vertex(u);
    std::vector<VertexId> result;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        Distance d = g.distance(u, VertexId(x));
        if (d.is_finite() && D.contains(d.length())) result.emplace_back(x);
    }
    return result;
}

namespace {

void require_labeling_fits(const OrientedGraph& g, const Labeling& L) {
    if (L.size() != g.vertex_count()) {
        throw InputError("labeling has " + std::to_string(L.size()) + " labels for a graph of " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace

std::int64_t d_weight(const OrientedGraph& g, const Labeling& L, VertexId u, const DistanceSet& D) {
    require_labeling_fits(g, L);
    std::int64_t sum = 0;
    for (VertexId x : d_neighborhood(g, u, D)) sum += L[x];
    return sum;
}

WeightReport verify_labeling(const OrientedGraph& g, const Labeling& L, const DistanceSet& D) {
    require_labeling_fits(g, L);
    WeightReport report;
    report.distances = D;
    const std::size_t n = g.vertex_count();
    report.weights.reserve(n);
    for (std::size_t u = 0; u < n; ++u) report.weights.push_back(d_weight(g, L, VertexId(u), D));

    std::map<std::int64_t, std::vector<std::size_t>> by_weight;
    for (std::size_t u = 0; u < n; ++u) by_weight[report.weights[u]].push_back(u);
    for (const auto& [weight, members] : by_weight) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                report.collisions.emplace_back(VertexId(members[a]), VertexId(members[b]));
            }
        }
    }
    std::sort(report.collisions.begin(), report.collisions.end());
    report.antimagic = report.collisions.empty();
    report.admissible = is_admissible(g, D);
    return report;
}

int finite_diameter(const OrientedGraph& g) {
    int best = 0;
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            Distance d = g.distance(VertexId(u), VertexId(v));
            if (d.is_finite()) best = std::max(best, d.length());
        }
    }
    return best;
}

bool is_admissible(const OrientedGraph& g, const DistanceSet& D) { return D.max() <= finite_diameter(g); }

VertexClass classify_vertex(const OrientedGraph& g, VertexId u) {
    VertexClass c;
    c.out_degree = g.out_degree(u);
    c.in_degree = g.in_degree(u);
    if (c.in_degree == 0 && c.out_degree == 0) {
        c.kind = VertexKind::Isolated;
    } else if (c.in_degree == 0) {
        c.kind = VertexKind::Source;
    } else if (c.out_degree == 0) {
        c.kind = VertexKind::Sink;
    } else {
        c.kind = VertexKind::Internal;
    }
    return c;
}

}  // namespace antimagic
