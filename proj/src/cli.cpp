#include "antimagic/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "antimagic/constructions.hpp"
#include "antimagic/document.hpp"
#include "antimagic/search.hpp"

namespace antimagic::cli {

namespace {

// Malformed files or data as opposed to malformed command-line parameters.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FamilyArgs {
    std::string family;
    int n = -1;
    int t = -1;
    int m = -1;
    std::string spec;
};

void add_family_options(CLI::App& cmd, FamilyArgs& args, bool required) {
    auto* family = cmd.add_option("--family", args.family, "star | mstar | forest-pi | forest")
                       ->check(CLI::IsMember({"star", "mstar", "forest-pi", "forest"}));
    if (required) family->required();
    cmd.add_option("--n", args.n, "leaves per star");
    cmd.add_option("--t", args.t, "source leaves per star");
    cmd.add_option("--m", args.m, "number of stars (mstar)");
    cmd.add_option("--spec", args.spec, "forest spec, e.g. 3x3,2x4,1x5 or 2x3@1,2x4@3");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InputError(message);
}

StarForest build_family(const FamilyArgs& a) {
    if (a.family == "star") {
        require(a.n >= 0 && a.t >= 0, "--family star needs --n and --t");
        return build_star({a.n, a.t});
    }
    if (a.family == "mstar") {
        require(a.m >= 0 && a.n >= 0 && a.t >= 0, "--family mstar needs --m, --n and --t");
        return build_homogeneous_forest(a.m, {a.n, a.t});
    }
    require(!a.spec.empty(), "--family " + a.family + " needs --spec");
    ForestSpec spec = ForestSpec::parse(a.spec);
    if (a.family == "forest-pi") return build_forest_pi(spec);
    return build_forest(spec);
}

Json family_metadata(const FamilyArgs& a) {
    Json meta = Json::object();
    meta["family"] = a.family;
    if (a.family == "star" || a.family == "mstar") {
        if (a.family == "mstar") meta["m"] = a.m;
        meta["n"] = a.n;
        meta["t"] = a.t;
    } else {
        meta["spec"] = a.spec;
    }
    return meta;
}

std::vector<DistanceSet> parse_distance_sets(const std::vector<std::string>& raw) {
    std::vector<DistanceSet> sets;
    for (const auto& text : raw) sets.push_back(DistanceSet::parse(text));
    return sets;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GraphDocument load_document(const std::string& path) {
    try {
        return GraphDocument::parse(read_file(path));
    } catch (const InputError& e) {
        throw DataError(path + ": " + e.what());
    }
}

// Single item as itself, several as an array.
Json one_or_many(std::vector<Json> items) {
    if (items.size() == 1) return std::move(items.front());
    Json array = Json::array();
    for (auto& item : items) array.push_back(std::move(item));
    return array;
}

struct Attempt {
    DistanceSet distances;
    Outcome outcome = Outcome::NotAntimagic;
    Reason reason = Reason::ConstructionExists;
    std::string rule;
    std::optional<Labeling> labeling;
    bool aborted = false;
    std::uint64_t nodes = 0;
};

bool homogeneous_spec(const ForestSpec& spec) {
    return std::all_of(spec.components.begin(), spec.components.end(), [&](const ForestComponent& c) {
        return c.leaves == spec.components.front().leaves && c.sources == spec.components.front().sources;
    });
}

bool pi_spec(const ForestSpec& spec) {
    return std::all_of(spec.components.begin(), spec.components.end(),
                       [](const ForestComponent& c) { return c.sources && *c.sources == c.leaves - 1; });
}

Attempt from_search(Attempt a, const SearchResult& r) {
    a.nodes = r.nodes_explored;
    switch (r.status) {
        case SearchStatus::Found:
            a.outcome = Outcome::Labeled;
            a.reason = Reason::OracleWitness;
            a.rule = "oracle";
            a.labeling = r.witness;
            break;
        case SearchStatus::ExhaustedNone:
            a.outcome = Outcome::NotAntimagic;
            a.reason = Reason::OracleWitness;
            a.rule = "oracle-exhausted";
            break;
        case SearchStatus::AbortedBudget: a.aborted = true; break;
    }
    return a;
}

Attempt attempt_construction(const FamilyArgs& args, const StarForest& forest, const DistanceSet& D,
                             const SearchOptions& search) {
    Attempt a{D};
    Construction c;
    if (args.family == "star") {
        c = construct_star_labeling(args.n, args.t, D);
    } else if (args.family == "mstar") {
        c = construct_homogeneous_forest_labeling(args.m, args.n, args.t, D);
        if (c.outcome == Outcome::SearchFallback) {
            return from_search(a, resolve_search_fallback(args.m, args.n, args.t, D, search));
        }
    } else {
        ForestSpec spec = ForestSpec::parse(args.spec);
        if (args.family == "forest-pi" || pi_spec(spec)) {
            ForestSpec plain = spec;
            for (auto& term : plain.components) term.sources.reset();
            c = construct_pi_forest_labeling(plain, D);
        } else if (homogeneous_spec(spec)) {
            const auto& term = spec.components.front();
            c = construct_homogeneous_forest_labeling(spec.star_count(), term.leaves, *term.sources, D);
        } else {
            c.outcome = Outcome::SearchFallback;
        }
        if (c.outcome == Outcome::SearchFallback) {
            SearchOptions first = search;
            first.mode = SearchMode::First;
            return from_search(a, search_labeling(forest.graph, D, first));
        }
    }
    a.outcome = c.outcome;
    a.reason = c.reason;
    a.rule = c.rule;
    a.labeling = c.labeling;
    return a;
}

int cmd_construct(const FamilyArgs& args, const std::vector<std::string>& raw_d, const std::string& format,
                  const SearchOptions& search, std::ostream& out) {
    StarForest forest = build_family(args);
    std::vector<DistanceSet> Ds = parse_distance_sets(raw_d);
    for (const auto& D : Ds) {
        if (D.max() > 2) throw UnsupportedDistanceSet("distance set " + D.to_string() + " exceeds 2 on a star forest");
    }

    std::vector<Attempt> attempts;
    for (const auto& D : Ds) attempts.push_back(attempt_construction(args, forest, D, search));

    const bool refused = std::any_of(attempts.begin(), attempts.end(), [](const Attempt& a) {
        return !a.aborted && a.outcome != Outcome::Labeled;
    });
    const bool aborted = std::any_of(attempts.begin(), attempts.end(), [](const Attempt& a) { return a.aborted; });
    if (refused || aborted) {
        std::vector<Json> items;
        for (const auto& a : attempts) {
            Json j = family_metadata(args);
            j["distance_set"] = a.distances.to_string();
            if (a.aborted) {
                j["status"] = "aborted-budget";
                j["nodes_explored"] = a.nodes;
            } else {
                j["antimagic"] = a.outcome == Outcome::Labeled;
                j["reason"] = std::string(to_string(a.reason));
                if (!a.rule.empty()) j["rule"] = a.rule;
            }
            items.push_back(std::move(j));
        }
        out << one_or_many(std::move(items)).dump(2) << "\n";
        return refused ? kProvenNonexistent : kBudgetExhausted;
    }

    // Distance sets sharing one labeling are reported together.
    std::vector<std::pair<Labeling, std::vector<const Attempt*>>> groups;
    for (const auto& a : attempts) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == *a.labeling; });
        if (it == groups.end()) {
            groups.push_back({*a.labeling, {&a}});
        } else {
            it->second.push_back(&a);
        }
    }

    if (format == "dot") {
        for (const auto& [labeling, members] : groups) {
            std::vector<DistanceSet> sets;
            std::string title;
            for (const Attempt* a : members) {
                sets.push_back(a->distances);
                title += (title.empty() ? "" : " ") + a->distances.to_string();
            }
            out << render_dot(forest.graph, labeling, sets, title);
        }
        return kSuccess;
    }

    std::vector<Json> documents;
    for (const auto& [labeling, members] : groups) {
        GraphDocument doc = GraphDocument::from_graph(forest.graph, labeling);
        Json meta = family_metadata(args);
        Json weights = Json::object();
        Json rules = Json::object();
        Json sets = Json::array();
        for (const Attempt* a : members) {
            const std::string key = a->distances.to_string();
            sets.push_back(key);
            rules[key] = a->rule;
            Json w = Json::object();
            WeightReport report = verify_labeling(forest.graph, labeling, a->distances);
            for (std::size_t v = 0; v < forest.graph.vertex_count(); ++v) w[forest.graph.names()[v]] = report.weights[v];
            weights[key] = std::move(w);
        }
        meta["distance_sets"] = std::move(sets);
        meta["rules"] = std::move(rules);
        meta["weights"] = std::move(weights);
        doc.metadata = std::move(meta);
        documents.push_back(doc.to_json());
    }
    out << one_or_many(std::move(documents)).dump(2) << "\n";
    return kSuccess;
}

int cmd_verify(const std::string& graph_path, const std::string& labeling_arg, const std::vector<std::string>& raw_d,
               std::ostream& out) {
    GraphDocument doc = load_document(graph_path);
    std::vector<DistanceSet> Ds = parse_distance_sets(raw_d);
    OrientedGraph g = [&] {
        try {
            return doc.to_graph();
        } catch (const InputError& e) {
            throw DataError(graph_path + ": " + e.what());
        }
    }();
    Labeling labeling = [&] {
        try {
            if (labeling_arg.empty()) return doc.to_labeling(g);
            std::string text = labeling_arg;
            if (std::filesystem::exists(labeling_arg)) {
                text = read_file(labeling_arg);
                // A full graph document is accepted as a labeling file as well.
                Json parsed = Json::parse(text, nullptr, false);
                if (parsed.is_object() && parsed.contains("labeling")) return GraphDocument::from_json(parsed).to_labeling(g);
            }
            return labeling_from_map(g, parse_inline_labeling(text));
        } catch (const InputError& e) {
            throw DataError(e.what());
        }
    }();

    bool all_good = true;
    std::vector<Json> reports;
    for (const auto& D : Ds) {
        WeightReport report = verify_labeling(g, labeling, D);
        all_good = all_good && report.antimagic && report.admissible;
        reports.push_back(to_json(g, report));
    }
    out << one_or_many(std::move(reports)).dump(2) << "\n";
    return all_good ? kSuccess : kNotAntimagic;
}

int cmd_search(const FamilyArgs& args, const std::string& graph_path, const std::string& raw_d,
               const SearchOptions& options, std::ostream& out) {
    require(args.family.empty() != graph_path.empty(), "search needs exactly one of --graph or --family");
    DistanceSet D = DistanceSet::parse(raw_d);
    OrientedGraph g = [&] {
        if (!args.family.empty()) return build_family(args).graph;
        try {
            return load_document(graph_path).to_graph();
        } catch (const InputError& e) {
            throw DataError(graph_path + ": " + e.what());
        }
    }();
    SearchResult r = search_labeling(g, D, options);
    Json j = to_json(g, r, D);
    j["admissible"] = is_admissible(g, D);
    out << j.dump(2) << "\n";
    switch (r.status) {
        case SearchStatus::Found: return kSuccess;
        case SearchStatus::ExhaustedNone: return kProvenNonexistent;
        case SearchStatus::AbortedBudget: return kBudgetExhausted;
    }
    return kSuccess;
}

std::string t_values(const ForestOrientation& orientation) {
    std::string out;
    for (const auto& s : orientation) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.leaves) + "@" + std::to_string(s.sources);
    }
    return out;
}

int cmd_scan(const std::string& spec_text, const std::vector<std::string>& raw_d, const std::string& out_path,
             const std::string& witness_dir, const ScanOptions& options, std::ostream& out) {
    ForestSpec spec = ForestSpec::parse(spec_text);
    std::vector<DistanceSet> Ds = parse_distance_sets(raw_d);
    std::vector<ScanRow> rows = scan_orientations(spec, Ds, options);

    if (!witness_dir.empty()) std::filesystem::create_directories(witness_dir);

    Json table = Json::object();
    table["spec"] = spec.to_string();
    table["empirical"] = true;
    Json sets = Json::array();
    for (const auto& D : Ds) sets.push_back(D.to_string());
    table["distance_sets"] = std::move(sets);
    Json rows_json = Json::array();
    bool any_aborted = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const ScanRow& row = rows[r];
        Json row_json = Json::object();
        row_json["orientation"] = t_values(row.orientation);
        row_json["pi"] = row.is_pi;
        Json cells = Json::array();
        const StarForest forest = build_forest(row.orientation);
        for (const ScanCell& cell : row.cells) {
            any_aborted = any_aborted || cell.verdict == Verdict::Aborted;
            Json c = Json::object();
            c["distance_set"] = cell.distances.to_string();
            c["verdict"] = std::string(to_string(cell.verdict));
            c["evidence"] = std::string(to_string(cell.evidence));
            if (!cell.construction.empty()) c["construction"] = cell.construction;
            c["nodes_explored"] = cell.nodes_explored;
            if (cell.witness) {
                GraphDocument doc = GraphDocument::from_graph(forest.graph, cell.witness);
                if (!witness_dir.empty()) {
                    std::string name = "row" + std::to_string(r) + "_d" + cell.distances.to_list() + ".json";
                    std::replace(name.begin(), name.end(), ',', '-');
                    auto path = std::filesystem::path(witness_dir) / name;
                    std::ofstream(path) << doc.serialize();
                    c["witness_file"] = path.string();
                } else {
                    c["witness"] = doc.to_json()["labeling"];
                }
            }
            cells.push_back(std::move(c));
        }
        row_json["cells"] = std::move(cells);
        rows_json.push_back(std::move(row_json));
    }
    table["rows"] = std::move(rows_json);

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw DataError("cannot write '" + out_path + "'");
        file << table.dump(2) << "\n";
    }

    std::size_t width = 11;
    for (const auto& row : rows) width = std::max(width, t_values(row.orientation).size());
    out << "# empirical orientation scan of " << spec.to_string() << " (" << rows.size()
        << " canonical classes; each verdict is backed by a verified witness or an exhaustive search)\n";
    out << std::left << std::setw(5) << "row" << std::setw(static_cast<int>(width) + 2) << "orientation"
        << std::setw(4) << "pi";
    for (const auto& D : Ds) out << std::setw(14) << D.to_string();
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << std::setw(5) << r << std::setw(static_cast<int>(width) + 2) << t_values(rows[r].orientation)
            << std::setw(4) << (rows[r].is_pi ? "*" : "");
        for (const auto& cell : rows[r].cells) out << std::setw(14) << to_string(cell.verdict);
        out << "\n";
    }
    return any_aborted ? kBudgetExhausted : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and search D-antimagic labelings of oriented stars and star forests",
                 "antimagic"};
    app.require_subcommand(1);

    FamilyArgs construct_family;
    std::vector<std::string> construct_d;
    std::string format = "json";
    std::uint64_t construct_budget = SearchOptions{}.node_budget;
    auto* construct = app.add_subcommand("construct", "emit a labeling from the closed-form constructions");
    add_family_options(*construct, construct_family, true);
    construct->add_option("--d", construct_d, "distance set, e.g. 0,1,2 (repeatable)")->required();
    construct->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    construct->add_option("--budget", construct_budget, "node budget when the oracle is consulted");

    std::string verify_graph;
    std::string verify_labeling_arg;
    std::vector<std::string> verify_d;
    auto* verify = app.add_subcommand("verify", "report D-weights and collisions of a labeling");
    verify->add_option("--graph", verify_graph, "graph document (JSON)")->required();
    verify->add_option("--labeling", verify_labeling_arg, "labeling file, JSON object, or name=label,...");
    verify->add_option("--d", verify_d, "distance set (repeatable)")->required();

    FamilyArgs search_family;
    std::string search_graph;
    std::string search_d;
    std::string mode = "first";
    SearchOptions search_options;
    search_options.vertex_cap = vertex_cap_from_environment();
    bool no_prune = false;
    bool no_symmetry = false;
    auto* search = app.add_subcommand("search", "backtracking search for a labeling");
    add_family_options(*search, search_family, false);
    search->add_option("--graph", search_graph, "graph document (JSON)");
    search->add_option("--d", search_d, "distance set")->required();
    search->add_option("--mode", mode, "first | all | count")->check(CLI::IsMember({"first", "all", "count"}));
    search->add_option("--budget", search_options.node_budget, "node budget");
    search->add_option("--workers", search_options.workers, "parallel workers");
    search->add_flag("--no-prune", no_prune, "check weights only on complete labelings");
    search->add_flag("--no-symmetry", no_symmetry, "disable interchangeable-vertex reduction");

    std::string scan_spec;
    std::vector<std::string> scan_d;
    std::string scan_out;
    std::string witness_dir;
    ScanOptions scan_options;
    scan_options.search.vertex_cap = vertex_cap_from_environment();
    bool no_constructions = false;
    auto* scan = app.add_subcommand("scan", "scan every canonical orientation of a star forest");
    scan->add_option("--spec", scan_spec, "forest spec, e.g. 2x3,2x4")->required();
    scan->add_option("--d", scan_d, "distance set (repeatable)")->required();
    scan->add_option("--out", scan_out, "write the JSON table here");
    scan->add_option("--witness-dir", witness_dir, "write each witness as a graph document here");
    scan->add_option("--budget", scan_options.search.node_budget, "node budget per cell");
    scan->add_option("--workers", scan_options.search.workers, "parallel workers per search");
    scan->add_flag("--no-constructions", no_constructions, "search every cell instead of using closed forms");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kUsage;
    }

    try {
        if (construct->parsed()) {
            SearchOptions options;
            options.node_budget = construct_budget;
            return cmd_construct(construct_family, construct_d, format, options, out);
        }
        if (verify->parsed()) return cmd_verify(verify_graph, verify_labeling_arg, verify_d, out);
        if (search->parsed()) {
            search_options.mode = mode == "all" ? SearchMode::All : mode == "count" ? SearchMode::Count : SearchMode::First;
            search_options.prune = !no_prune;
            search_options.symmetry_reduction = !no_symmetry;
            return cmd_search(search_family, search_graph, search_d, search_options, out);
        }
        if (scan->parsed()) {
            scan_options.use_constructions = !no_constructions;
            return cmd_scan(scan_spec, scan_d, scan_out, witness_dir, scan_options, out);
        }
    } catch (const UnsupportedDistanceSet& e) {
        err << "unsupported distance set: " << e.what() << "\n";
        return kBadInput;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    return kUsage;
}

}  // namespace antimagic::cli
