#ifndef ANTIMAGIC_SEARCH_HPP
#define ANTIMAGIC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/star_forms.hpp"

namespace antimagic {

enum class SearchMode { First, All, Count };
enum class SearchStatus { Found, ExhaustedNone, AbortedBudget };

std::string_view to_string(SearchMode mode);
std::string_view to_string(SearchStatus status);

// Default vertex cap for exhaustive modes (All/Count and refutation).
inline constexpr std::size_t kDefaultVertexCap = 10;

// Cap taken from ANTIMAGIC_NODE_CAP when set to a positive integer, else kDefaultVertexCap.
std::size_t vertex_cap_from_environment();

struct SearchOptions {
    SearchMode mode = SearchMode::First;
    // Maximum number of label placements; the search reports AbortedBudget past it.
    std::uint64_t node_budget = 200'000'000;
    bool prune = true;
    bool symmetry_reduction = true;
    unsigned workers = 1;
    std::size_t vertex_cap = kDefaultVertexCap;
};

struct SearchResult {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<Labeling> witness;
    // Valid labelings counted (All/Count); with symmetry reduction this counts one labeling
    // per orbit, and count * symmetry_order is the unreduced total.
    std::optional<std::uint64_t> count;
    std::vector<Labeling> labelings;
    std::uint64_t nodes_explored = 0;
    bool symmetry_reduced = false;
    std::uint64_t symmetry_order = 1;
    // Classes of interchangeable vertices used for the reduction (singletons omitted).
    std::vector<std::vector<VertexId>> symmetry_classes;
};

// Vertices whose transposition maps every D-neighborhood onto a D-neighborhood. Any two
// members of a class may trade labels without changing the multiset of D-weights.
std::vector<std::vector<VertexId>> interchangeable_classes(const OrientedGraph& g, const DistanceSet& D);

// Backtracking over label assignments. Vertices are placed in decreasing order of the number
// of D-neighborhoods they belong to; labels are tried ascending, so the First witness is the
// lexicographically smallest valid labeling in that order.
SearchResult search_labeling(const OrientedGraph& g, const DistanceSet& D, const SearchOptions& options = {});

// Exhaustive First-mode search; requires |V| <= options.vertex_cap.
SearchResult refute_antimagic(const OrientedGraph& g, const DistanceSet& D, SearchOptions options = {});

enum class Verdict { Antimagic, NotAntimagic, Aborted };
std::string_view to_string(Verdict verdict);

enum class Evidence { Construction, SearchWitness, SearchExhausted, DistanceExceedsDiameter, BudgetExhausted };
std::string_view to_string(Evidence evidence);

struct ScanCell {
    DistanceSet distances{0};
    Verdict verdict = Verdict::Aborted;
    Evidence evidence = Evidence::BudgetExhausted;
    std::optional<Labeling> witness;
    // Construction name when evidence is Construction.
    std::string construction;
    std::uint64_t nodes_explored = 0;
};

struct ScanRow {
    ForestOrientation orientation;
    bool is_pi = false;
    std::vector<ScanCell> cells;
};

struct ScanOptions {
    SearchOptions search;
    // Use the closed-form labelings when a row is Pi-oriented or homogeneous.
    bool use_constructions = true;
};

// One row per canonical orientation class of the spec. Results are empirical per row; they
// do not characterize the family.
std::vector<ScanRow> scan_orientations(const ForestSpec& spec, const std::vector<DistanceSet>& Ds,
                                       const ScanOptions& options = {});

}  // namespace antimagic

#endif  // ANTIMAGIC_SEARCH_HPP
