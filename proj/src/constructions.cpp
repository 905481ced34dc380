#include "antimagic/constructions.hpp"

namespace antimagic {

std::string_view to_string(Reason reason) {
    switch (reason) {
        case Reason::ConstructionExists: return "CONSTRUCTION_EXISTS";
        case Reason::OracleWitness: return "ORACLE_WITNESS";
        case Reason::CenterSourceOrSink: return "CENTER_SOURCE_OR_SINK";
        case Reason::TwoSinkLeaves: return "TWO_SINK_LEAVES";
        case Reason::TwoSourceLeaves: return "TWO_SOURCE_LEAVES";
        case Reason::NExceedsBound: return "N_EXCEEDS_BOUND";
        case Reason::CenterSinkTie: return "CENTER_SINK_TIE";
        case Reason::MinDPositive: return "MIN_D_POSITIVE";
        case Reason::DistanceExceedsDiameter: return "DISTANCE_EXCEEDS_DIAMETER";
        case Reason::ProofGap: return "PROOF_GAP";
    }
    return "?";
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Labeled: return "labeled";
        case Outcome::NotAntimagic: return "not-antimagic";
        case Outcome::SearchFallback: return "search-fallback";
    }
    return "?";
}

namespace {

const DistanceSet kZero{0};
const DistanceSet kOne{1};
const DistanceSet kTwo{2};
const DistanceSet kZeroOne{0, 1};
const DistanceSet kZeroTwo{0, 2};
const DistanceSet kOneTwo{1, 2};
const DistanceSet kZeroOneTwo{0, 1, 2};

void require_star_distances(const DistanceSet& D) {
    if (D.max() > 2) {
        throw UnsupportedDistanceSet("distance set " + D.to_string() +
                                     " exceeds 2, the largest distance in any oriented star");
    }
}

struct StarVerdict {
    bool antimagic;
    Reason reason;
};

StarVerdict star_verdict(int n, int t, const DistanceSet& D) {
    StarShape{n, t}.validate();
    require_star_distances(D);
    if (D == kZero || D == kZeroOne) return {true, Reason::ConstructionExists};
    if (D == kOne) {
        if (n == 1) return {true, Reason::OracleWitness};
        if (n == 2) {
            if (t == 1) return {true, Reason::OracleWitness};
            return {false, t == 0 ? Reason::TwoSinkLeaves : Reason::TwoSourceLeaves};
        }
        return {false, Reason::NExceedsBound};
    }
    // Every remaining set contains 2, which is only realized when the center is internal.
    if (t == 0 || t == n) return {false, Reason::CenterSourceOrSink};
    if (D == kTwo) return {false, Reason::CenterSinkTie};
    if (D == kOneTwo) {
        if (n == 2) return {true, Reason::OracleWitness};
        return {false, Reason::NExceedsBound};
    }
    return {true, Reason::ConstructionExists};
}

Labeling emit(const OrientedGraph& g, std::vector<int> labels, const DistanceSet& D, std::string_view rule) {
    if (auto problem = Labeling::bijectivity_problem(labels)) {
        throw std::logic_error("rule " + std::string(rule) + " is not bijective: " + *problem);
    }
    Labeling labeling(std::move(labels));
    WeightReport report = verify_labeling(g, labeling, D);
    if (!report.antimagic || !report.admissible) {
        throw std::logic_error("rule " + std::string(rule) + " failed verification for D=" + D.to_string());
    }
    return labeling;
}

Construction labeled(Labeling labeling, std::string rule, Reason reason = Reason::ConstructionExists) {
    return Construction{Outcome::Labeled, reason, std::move(labeling), std::move(rule)};
}

Construction not_antimagic(Reason reason) { return Construction{Outcome::NotAntimagic, reason, std::nullopt, {}}; }

}  // namespace

Decision characterize_star(int n, int t, const DistanceSet& D) {
    StarVerdict v = star_verdict(n, t, D);
    Decision decision{v.antimagic, v.reason, std::nullopt};
    if (v.antimagic) decision.witness = construct_star_labeling(n, t, D).labeling;
    return decision;
}

Construction construct_star_labeling(int n, int t, const DistanceSet& D) {
    StarVerdict v = star_verdict(n, t, D);
    if (!v.antimagic) return not_antimagic(v.reason);

    const StarForest star = build_star({n, t});
    const auto& s = star.stars.front();
    std::vector<int> labels(star.graph.vertex_count());

    if (D == kZero) return labeled(emit(star.graph, Labeling::identity(labels.size()).values(), D, "identity"), "identity");

    if (D == kZeroOne) {
        labels[s.center.value] = n + 1;
        for (int i = 1; i <= n; ++i) labels[s.leaves[i - 1].value] = i;
        return labeled(emit(star.graph, std::move(labels), D, "alpha"), "alpha");
    }

    if (D == kZeroTwo || D == kZeroOneTwo) {
        labels[s.center.value] = t + 1;
        for (int i = 1; i <= n; ++i) labels[s.leaves[i - 1].value] = i <= t ? i : i + 1;
        return labeled(emit(star.graph, std::move(labels), D, "beta"), "beta");
    }

    // {1} and {1,2}: the remaining positive cases are tiny, so the oracle supplies the labeling.
    SearchResult r = search_labeling(star.graph, D);
    if (r.status != SearchStatus::Found) {
        throw std::logic_error("oracle found no labeling for a case characterized as antimagic");
    }
    return labeled(emit(star.graph, r.witness->values(), D, "oracle"), "oracle", Reason::OracleWitness);
}

Construction construct_homogeneous_forest_labeling(int m, int n, int t, const DistanceSet& D) {
    const StarForest forest = build_homogeneous_forest(m, {n, t});
    require_star_distances(D);
    if (!star_forest_necessary_condition(D)) return not_antimagic(Reason::MinDPositive);

    const OrientedGraph& g = forest.graph;
    std::vector<int> labels(g.vertex_count());
    auto center = [&](int j) -> int& { return labels[forest.stars[j - 1].center.value]; };
    auto leaf = [&](int j, int i) -> int& { return labels[forest.stars[j - 1].leaves[i - 1].value]; };

    if (D == kZero) return labeled(emit(g, Labeling::identity(labels.size()).values(), D, "identity"), "identity");

    if (D == kZeroOne) {
        std::string rule;
        if (t == 0 || (t == n - 1 && t != 1)) {
            // Leaves numbered star by star, centers on top. For t = n-1 each center's weight takes
            // the slot its single sink would have had as a source.
            rule = t == 0 ? "h1" : "h2-single-sink";
            for (int j = 1; j <= m; ++j) {
                center(j) = m * n + j;
                for (int i = 1; i <= n; ++i) leaf(j, i) = n * (j - 1) + i;
            }
        } else if (t == n) {
            rule = "h3";
            for (int j = 1; j <= m; ++j) {
                center(j) = j;
                for (int i = 1; i <= n; ++i) leaf(j, i) = m + (j - 1) * n + i;
            }
        } else if (t == 1) {
            return Construction{Outcome::SearchFallback, Reason::ProofGap, std::nullopt, {}};
        } else {
            rule = "h2";
            for (int j = 1; j <= m; ++j) {
                center(j) = m * n + j;
                for (int i = 1; i <= t; ++i) leaf(j, i) = i + (j - 1) * t;
                for (int i = t + 1; i <= n; ++i) leaf(j, i) = m * (i - 1) + j;
            }
        }
        return labeled(emit(g, std::move(labels), D, rule), rule);
    }

    // D is {0,2} or {0,1,2}.
    if (t == 0 || t == n) return not_antimagic(Reason::CenterSourceOrSink);
    for (int j = 1; j <= m; ++j) {
        center(j) = m * (n - t) + j;
        for (int i = 1; i <= t; ++i) leaf(j, i) = m * (n - t + 1) + t * (j - 1) + i;
        for (int i = t + 1; i <= n; ++i) leaf(j, i) = m * (i - t - 1) + j;
    }
    return labeled(emit(g, std::move(labels), D, "g2"), "g2");
}

SearchResult resolve_search_fallback(int m, int n, int t, const DistanceSet& D, const SearchOptions& options) {
    const StarForest forest = build_homogeneous_forest(m, {n, t});
    SearchOptions first = options;
    first.mode = SearchMode::First;
    return search_labeling(forest.graph, D, first);
}

Construction construct_pi_forest_labeling(const ForestSpec& spec, const DistanceSet& D) {
    spec.validate();
    for (const auto& c : spec.components) {
        if (c.sources && *c.sources != c.leaves - 1) {
            throw InputError("term " + std::to_string(c.multiplicity) + "x" + std::to_string(c.leaves) + "@" +
                             std::to_string(*c.sources) + " is not Pi-oriented (expects @" +
                             std::to_string(c.leaves - 1) + ")");
        }
    }
    const StarForest forest = build_forest_pi(spec);
    const OrientedGraph& g = forest.graph;
    if (!star_forest_necessary_condition(D)) return not_antimagic(Reason::MinDPositive);
    if (!is_admissible(g, D)) return not_antimagic(Reason::DistanceExceedsDiameter);

    std::vector<int> labels(g.vertex_count());
    if (D == kZero) return labeled(emit(g, Labeling::identity(labels.size()).values(), D, "identity"), "identity");
    if (!(D == kZeroOne || D == kZeroTwo || D == kZeroOneTwo)) {
        throw UnsupportedDistanceSet("Pi labeling covers {0}, {0,1}, {0,2} and {0,1,2}, not " + D.to_string());
    }

    const int total = spec.star_count();
    int earlier_stars = 0;         // sum of m_p over earlier terms
    int earlier_inner_leaves = 0;  // sum of m_p (n_p - 1) over earlier terms
    std::size_t star_index = 0;
    for (const auto& c : spec.components) {
        for (int s = 1; s <= c.multiplicity; ++s, ++star_index) {
            const StarComponent& star = forest.stars[star_index];
            labels[star.leaves.back().value] = earlier_stars + s;
            labels[star.center.value] = total + earlier_stars + s;
            for (int i = 1; i <= c.leaves - 1; ++i) {
                labels[star.leaves[i - 1].value] = 2 * total + earlier_inner_leaves + (s - 1) * (c.leaves - 1) + i;
            }
        }
        earlier_stars += c.multiplicity;
        earlier_inner_leaves += c.multiplicity * (c.leaves - 1);
    }
    return labeled(emit(g, std::move(labels), D, "pi"), "pi");
}

bool star_forest_necessary_condition(const DistanceSet& D) { return D.min() == 0; }

}  // namespace antimagic
