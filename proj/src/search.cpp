#include "antimagic/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include "antimagic/constructions.hpp"

namespace antimagic {

std::string_view to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::First: return "first";
        case SearchMode::All: return "all";
        case SearchMode::Count: return "count";
    }
    return "?";
}

std::string_view to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ExhaustedNone: return "exhausted-none";
        case SearchStatus::AbortedBudget: return "aborted-budget";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Antimagic: return "true";
        case Verdict::NotAntimagic: return "false";
        case Verdict::Aborted: return "aborted";
    }
    return "?";
}

std::string_view to_string(Evidence evidence) {
    switch (evidence) {
        case Evidence::Construction: return "construction";
        case Evidence::SearchWitness: return "search-witness";
        case Evidence::SearchExhausted: return "search-exhausted";
        case Evidence::DistanceExceedsDiameter: return "distance-exceeds-diameter";
        case Evidence::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::size_t vertex_cap_from_environment() {
    const char* raw = std::getenv("ANTIMAGIC_NODE_CAP");
    if (raw == nullptr) return kDefaultVertexCap;
    char* end = nullptr;
    unsigned long value = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) return kDefaultVertexCap;
    return value;
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxVertices = 64;

std::vector<Mask> neighborhood_masks(const OrientedGraph& g, const DistanceSet& D) {
    std::vector<Mask> masks(g.vertex_count(), 0);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (VertexId x : d_neighborhood(g, VertexId(u), D)) masks[u] |= Mask{1} << x.value;
    }
    return masks;
}

bool same_bits(Mask m, std::size_t x, std::size_t y) { return ((m >> x) & 1U) == ((m >> y) & 1U); }

Mask swap_bits(Mask m, std::size_t x, std::size_t y) {
    if (same_bits(m, x, y)) return m;
    return m ^ ((Mask{1} << x) | (Mask{1} << y));
}

bool interchangeable(const std::vector<Mask>& masks, std::size_t x, std::size_t y) {
    for (std::size_t u = 0; u < masks.size(); ++u) {
        if (u != x && u != y && !same_bits(masks[u], x, y)) return false;
    }
    return swap_bits(masks[x], x, y) == masks[y];
}

std::vector<std::vector<std::size_t>> symmetry_classes(const std::vector<Mask>& masks) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < masks.size(); ++v) {
        bool placed = false;
        for (auto& c : classes) {
            if (interchangeable(masks, c.front(), v)) {
                c.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({v});
    }
    return classes;
}

// Static plan shared read-only by every worker.
struct Plan {
    std::size_t n = 0;
    std::vector<Mask> masks;
    std::vector<std::size_t> order;
    // determined_at[d]: vertices whose whole neighborhood is labeled once order[0..d] is.
    std::vector<std::vector<std::size_t>> determined_at;
    // Previous member of the same symmetry class in placement order, or n when none.
    std::vector<std::size_t> symmetry_prev;
    bool empty_neighborhood_at_root = false;
    std::int64_t max_weight = 0;
    SearchMode mode = SearchMode::First;
};

Plan make_plan(const std::vector<Mask>& masks, const SearchOptions& options,
               const std::vector<std::vector<std::size_t>>& classes) {
    Plan plan;
    plan.n = masks.size();
    plan.masks = masks;
    plan.mode = options.mode;
    const std::size_t n = plan.n;

    std::vector<std::size_t> membership(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t x = 0; x < n; ++x) {
            if ((masks[u] >> x) & 1U) ++membership[x];
        }
    }
    plan.order.resize(n);
    std::iota(plan.order.begin(), plan.order.end(), std::size_t{0});
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](std::size_t a, std::size_t b) { return membership[a] > membership[b]; });

    std::vector<std::size_t> position(n);
    for (std::size_t d = 0; d < n; ++d) position[plan.order[d]] = d;

    plan.determined_at.assign(n, {});
    for (std::size_t u = 0; u < n; ++u) {
        if (!options.prune) {
            plan.determined_at[n - 1].push_back(u);
            continue;
        }
        if (masks[u] == 0) {
            plan.empty_neighborhood_at_root = true;
            continue;
        }
        std::size_t last = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if ((masks[u] >> x) & 1U) last = std::max(last, position[x]);
        }
        plan.determined_at[last].push_back(u);
    }

    plan.symmetry_prev.assign(n, n);
    for (const auto& c : classes) {
        std::vector<std::size_t> members = c;
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
        for (std::size_t k = 1; k < members.size(); ++k) plan.symmetry_prev[members[k]] = members[k - 1];
    }
    plan.max_weight = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n + 1) / 2;
    return plan;
}

struct SubtreeResult {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    std::vector<int> witness;
    std::vector<std::vector<int>> labelings;
};

class Searcher {
public:
    Searcher(const Plan& plan, std::uint64_t budget, const std::atomic<std::size_t>* cancel_above,
             std::size_t subtree_index)
        : plan_(plan),
          budget_(budget),
          cancel_above_(cancel_above),
          subtree_index_(subtree_index),
          labels_(plan.n, 0),
          occupancy_(static_cast<std::size_t>(plan.max_weight) + 1, 0) {
        if (plan.empty_neighborhood_at_root) occupancy_[0] = 1;
    }

    // Places `first_label` on order[0] and searches below it.
    SubtreeResult run(int first_label) {
        place(0, first_label);
        return std::move(result_);
    }

private:
    bool cancelled() const {
        return cancel_above_ != nullptr && cancel_above_->load(std::memory_order_relaxed) < subtree_index_;
    }

    // Returns false to unwind the whole subtree (found in First mode, budget, cancellation).
    bool place(std::size_t depth, int label) {
        if (result_.nodes >= budget_) {
            result_.status = SearchStatus::AbortedBudget;
            return false;
        }
        if ((result_.nodes & 0xFFFU) == 0 && cancelled()) {
            result_.status = SearchStatus::AbortedBudget;
            return false;
        }
        ++result_.nodes;

        const std::size_t v = plan_.order[depth];
        labels_[v] = label;
        used_ |= Mask{1} << label;

        bool keep_going = true;
        std::size_t committed = 0;
        const auto& now_determined = plan_.determined_at[depth];
        bool clash = false;
        for (; committed < now_determined.size(); ++committed) {
            std::int64_t w = weight_of(now_determined[committed]);
            if (occupancy_[static_cast<std::size_t>(w)]) {
                clash = true;
                break;
            }
            occupancy_[static_cast<std::size_t>(w)] = 1;
        }

        if (!clash) {
            if (depth + 1 == plan_.n) {
                keep_going = record_solution();
            } else {
                keep_going = descend(depth + 1);
            }
        }

        for (std::size_t k = 0; k < committed; ++k) occupancy_[static_cast<std::size_t>(weight_of(now_determined[k]))] = 0;
        used_ &= ~(Mask{1} << label);
        labels_[v] = 0;
        return keep_going;
    }

    bool descend(std::size_t depth) {
        const std::size_t v = plan_.order[depth];
        int lowest = 1;
        if (plan_.symmetry_prev[v] != plan_.n) lowest = labels_[plan_.symmetry_prev[v]] + 1;
        for (int label = lowest; label <= static_cast<int>(plan_.n); ++label) {
            if ((used_ >> label) & 1U) continue;
            if (!place(depth, label)) return false;
        }
        return true;
    }

    bool record_solution() {
        ++result_.count;
        switch (plan_.mode) {
            case SearchMode::First:
                result_.status = SearchStatus::Found;
                result_.witness = labels_;
                return false;
            case SearchMode::All:
                result_.labelings.push_back(labels_);
                return true;
            case SearchMode::Count:
                return true;
        }
        return true;
    }

    std::int64_t weight_of(std::size_t u) const {
        std::int64_t sum = 0;
        for (Mask m = plan_.masks[u]; m != 0; m &= m - 1) sum += labels_[static_cast<std::size_t>(std::countr_zero(m))];
        return sum;
    }

    const Plan& plan_;
    std::uint64_t budget_;
    const std::atomic<std::size_t>* cancel_above_;
    std::size_t subtree_index_;
    std::vector<int> labels_;
    std::vector<std::uint8_t> occupancy_;
    Mask used_ = 0;
    SubtreeResult result_;
};

// First-level label choices that survive symmetry reduction (order[0] has no predecessor).
std::vector<int> first_labels(const Plan& plan) {
    std::vector<int> labels(plan.n);
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

}  // namespace

std::vector<std::vector<VertexId>> interchangeable_classes(const OrientedGraph& g, const DistanceSet& D) {
    if (g.vertex_count() > kMaxVertices) throw InputError("graphs above 64 vertices are not supported");
    std::vector<std::vector<VertexId>> result;
    for (const auto& c : symmetry_classes(neighborhood_masks(g, D))) {
        if (c.size() < 2) continue;
        std::vector<VertexId> ids;
        for (std::size_t v : c) ids.emplace_back(v);
        result.push_back(std::move(ids));
    }
    return result;
}

SearchResult search_labeling(const OrientedGraph& g, const DistanceSet& D, const SearchOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxVertices) throw InputError("search supports at most 64 vertices, graph has " + std::to_string(n));
    if (options.mode != SearchMode::First && n > options.vertex_cap) {
        throw InputError("exhaustive " + std::string(to_string(options.mode)) + " search on " + std::to_string(n) +
                         " vertices exceeds the vertex cap of " + std::to_string(options.vertex_cap));
    }
    if (options.node_budget == 0) throw InputError("node budget must be positive");

    const auto masks = neighborhood_masks(g, D);
    SearchResult result;
    std::vector<std::vector<std::size_t>> classes;
    if (options.symmetry_reduction) {
        for (auto& c : symmetry_classes(masks)) {
            if (c.size() < 2) continue;
            std::uint64_t f = 1;
            for (std::uint64_t k = 2; k <= c.size(); ++k) f *= k;
            result.symmetry_order *= f;
            std::vector<VertexId> ids;
            for (std::size_t v : c) ids.emplace_back(v);
            result.symmetry_classes.push_back(std::move(ids));
            classes.push_back(std::move(c));
        }
        result.symmetry_reduced = !classes.empty();
    }

    result.nodes_explored = 1;
    if (options.mode != SearchMode::First) result.count = 0;

    if (n == 0) {
        result.status = SearchStatus::Found;
        result.witness = Labeling(std::vector<int>{});
        if (result.count) *result.count = 1;
        return result;
    }

    if (options.prune) {
        // Two vertices with the same D-neighborhood always carry the same D-weight.
        auto sorted = masks;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            result.status = SearchStatus::ExhaustedNone;
            return result;
        }
    }

    const Plan plan = make_plan(masks, options, classes);
    const std::vector<int> firsts = first_labels(plan);
    std::vector<SubtreeResult> subtrees(firsts.size());
    const std::uint64_t below_root = options.node_budget - 1;

    const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(firsts.size())));
    if (workers == 1) {
        std::uint64_t spent = 1;
        for (std::size_t k = 0; k < firsts.size(); ++k) {
            Searcher searcher(plan, options.node_budget - spent, nullptr, k);
            subtrees[k] = searcher.run(firsts[k]);
            spent += subtrees[k].nodes;
            if (subtrees[k].status == SearchStatus::AbortedBudget) break;
            if (options.mode == SearchMode::First && subtrees[k].status == SearchStatus::Found) break;
        }
    } else {
        // Every subtree gets the full remaining budget; the ordered merge below reproduces the
        // serial accounting exactly. Subtrees past the first found one are cancelled.
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
        auto worker = [&] {
            for (std::size_t k = next.fetch_add(1); k < firsts.size(); k = next.fetch_add(1)) {
                if (first_found.load() < k) continue;
                Searcher searcher(plan, below_root, options.mode == SearchMode::First ? &first_found : nullptr, k);
                subtrees[k] = searcher.run(firsts[k]);
                if (options.mode == SearchMode::First && subtrees[k].status == SearchStatus::Found) {
                    std::size_t seen = first_found.load();
                    while (k < seen && !first_found.compare_exchange_weak(seen, k)) {
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    std::uint64_t spent = 1;
    std::uint64_t count = 0;
    result.status = SearchStatus::ExhaustedNone;
    for (auto& sub : subtrees) {
        if (sub.status == SearchStatus::AbortedBudget || spent + sub.nodes > options.node_budget) {
            result.status = SearchStatus::AbortedBudget;
            spent = options.node_budget;
            break;
        }
        spent += sub.nodes;
        count += sub.count;
        for (auto& labels : sub.labelings) result.labelings.emplace_back(std::move(labels));
        if (options.mode == SearchMode::First && sub.status == SearchStatus::Found) {
            result.status = SearchStatus::Found;
            result.witness = Labeling(std::move(sub.witness));
            break;
        }
    }
    result.nodes_explored = spent;
    if (options.mode != SearchMode::First) {
        result.count = count;
        if (result.status != SearchStatus::AbortedBudget) {
            result.status = count > 0 ? SearchStatus::Found : SearchStatus::ExhaustedNone;
        }
        if (!result.labelings.empty()) result.witness = result.labelings.front();
    }
    if (result.witness && !verify_labeling(g, *result.witness, D).antimagic) {
        throw std::logic_error("search produced a labeling the verifier rejects");
    }
    return result;
}

SearchResult refute_antimagic(const OrientedGraph& g, const DistanceSet& D, SearchOptions options) {
    if (g.vertex_count() > options.vertex_cap) {
        throw InputError("refutation on " + std::to_string(g.vertex_count()) + " vertices exceeds the vertex cap of " +
                         std::to_string(options.vertex_cap));
    }
    options.mode = SearchMode::First;
    return search_labeling(g, D, options);
}

namespace {

bool is_homogeneous(const ForestOrientation& orientation) {
    return std::all_of(orientation.begin(), orientation.end(),
                       [&](const StarShape& s) { return s == orientation.front(); });
}

bool is_pi(const ForestOrientation& orientation) {
    return std::all_of(orientation.begin(), orientation.end(),
                       [](const StarShape& s) { return s.sources == s.leaves - 1; });
}

// Pi spec whose build_forest_pi layout matches build_forest(orientation) vertex for vertex.
ForestSpec pi_spec_of(const ForestOrientation& orientation) {
    ForestSpec spec;
    for (const auto& s : orientation) {
        if (!spec.components.empty() && spec.components.back().leaves == s.leaves) {
            ++spec.components.back().multiplicity;
        } else {
            spec.components.push_back({1, s.leaves, std::nullopt});
        }
    }
    return spec;
}

std::optional<Construction> known_construction(const ForestOrientation& orientation, const DistanceSet& D) {
    if (is_pi(orientation) && D.min() == 0) {
        Construction c = construct_pi_forest_labeling(pi_spec_of(orientation), D);
        if (c.outcome == Outcome::Labeled) return c;
    }
    if (is_homogeneous(orientation) && D.max() <= 2) {
        const StarShape& s = orientation.front();
        Construction c =
            construct_homogeneous_forest_labeling(static_cast<int>(orientation.size()), s.leaves, s.sources, D);
        if (c.outcome == Outcome::Labeled) return c;
    }
    return std::nullopt;
}

}  // namespace

std::vector<ScanRow> scan_orientations(const ForestSpec& spec, const std::vector<DistanceSet>& Ds,
                                       const ScanOptions& options) {
    spec.validate();
    if (Ds.empty()) throw InputError("scan needs at least one distance set");
    SearchOptions search = options.search;
    search.mode = SearchMode::First;

    std::vector<ScanRow> rows;
    for (const ForestOrientation& orientation : enumerate_forest_orientations(spec)) {
        const StarForest forest = build_forest(orientation);
        ScanRow row;
        row.orientation = orientation;
        row.is_pi = is_pi(orientation);
        for (const DistanceSet& D : Ds) {
            ScanCell cell;
            cell.distances = D;
            if (!is_admissible(forest.graph, D)) {
                cell.verdict = Verdict::NotAntimagic;
                cell.evidence = Evidence::DistanceExceedsDiameter;
                row.cells.push_back(std::move(cell));
                continue;
            }
            if (options.use_constructions) {
                if (auto c = known_construction(orientation, D)) {
                    cell.verdict = Verdict::Antimagic;
                    cell.evidence = Evidence::Construction;
                    cell.construction = c->rule;
                    cell.witness = c->labeling;
                    row.cells.push_back(std::move(cell));
                    continue;
                }
            }
            SearchResult r = search_labeling(forest.graph, D, search);
            cell.nodes_explored = r.nodes_explored;
            switch (r.status) {
                case SearchStatus::Found:
                    cell.verdict = Verdict::Antimagic;
                    cell.evidence = Evidence::SearchWitness;
                    cell.witness = std::move(r.witness);
                    break;
                case SearchStatus::ExhaustedNone:
                    cell.verdict = Verdict::NotAntimagic;
                    cell.evidence = Evidence::SearchExhausted;
                    break;
                case SearchStatus::AbortedBudget:
                    cell.verdict = Verdict::Aborted;
                    cell.evidence = Evidence::BudgetExhausted;
                    break;
            }
            row.cells.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace antimagic
