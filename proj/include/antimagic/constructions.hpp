#ifndef ANTIMAGIC_CONSTRUCTIONS_HPP
#define ANTIMAGIC_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "antimagic/graph.hpp"
#include "antimagic/search.hpp"
#include "antimagic/star_forms.hpp"

namespace antimagic {

// Raised when a star problem is posed with max(D) > 2, beyond the diameter of any star.
class UnsupportedDistanceSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Reason {
    ConstructionExists,
    OracleWitness,
    CenterSourceOrSink,
    TwoSinkLeaves,
    TwoSourceLeaves,
    NExceedsBound,
    CenterSinkTie,
    MinDPositive,
    DistanceExceedsDiameter,
    ProofGap,
};

// Stable upper-snake names, e.g. "CENTER_SOURCE_OR_SINK".
std::string_view to_string(Reason reason);

struct Decision {
    bool antimagic = false;
    Reason reason = Reason::ConstructionExists;
    std::optional<Labeling> witness;
};

enum class Outcome { Labeled, NotAntimagic, SearchFallback };

std::string_view to_string(Outcome outcome);

struct Construction {
    Outcome outcome = Outcome::NotAntimagic;
    Reason reason = Reason::ConstructionExists;
    std::optional<Labeling> labeling;
    // Which labeling rule produced `labeling`: "identity", "alpha", "beta", "oracle", "h1",
    // "h2", "h2-single-sink", "h3", "g2", "pi".
    std::string rule;
};

Decision characterize_star(int n, int t, const DistanceSet& D);

// Labels are indexed by the layout of build_star({n, t}).
Construction construct_star_labeling(int n, int t, const DistanceSet& D);

// Labels are indexed by the layout of build_homogeneous_forest(m, {n, t}).
Construction construct_homogeneous_forest_labeling(int m, int n, int t, const DistanceSet& D);

// Runs the oracle for a SearchFallback instance. A Found result carries a verified witness.
SearchResult resolve_search_fallback(int m, int n, int t, const DistanceSet& D, const SearchOptions& options = {});

// Labels are indexed by the layout of build_forest_pi(spec). Supports {0}, {0,1}, {0,2}, {0,1,2}.
Construction construct_pi_forest_labeling(const ForestSpec& spec, const DistanceSet& D);

// A star forest can only be D-antimagic when min(D) = 0: every star has a sink, and two
// sinks have D-weight zero otherwise.
bool star_forest_necessary_condition(const DistanceSet& D);

}  // namespace antimagic

#endif  // ANTIMAGIC_CONSTRUCTIONS_HPP
