#ifndef RZK_CLI_HPP
#define RZK_CLI_HPP

#include "rzk/cellular.hpp"
#include "rzk/complex_io.hpp"
#include "rzk/hochster.hpp"
#include "rzk/ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace rzk::cli {

enum ExitCode : int { ok = 0, mismatch = 1, input_error = 2, size_limit = 3 };

inline const std::set<std::string>& commands()
{
    static const std::set<std::string> names{"validate", "betti", "cohomology", "hochster", "ring", "oracle", "compare"};
    return names;
}

struct RunConfig {
    std::string command;
    std::string input;
    std::string format = "json";  // json | table
    Route route = Route::hochster;
    unsigned workers = 1;
    Limits limits{};
    std::uint64_t seed = 0;
    bool check = false;  // run compare after the command
    bool dump = false;   // oracle: include the cellular cochain complex
};

/// Cap and worker defaults from RZK_MAX_VERTICES, RZK_MAX_CELLS, RZK_WORKERS
/// and RZK_SEED. Command-line flags are applied afterwards and win.
inline void apply_environment(RunConfig& cfg, const std::function<const char*(const char*)>& getenv_fn)
{
    const auto read = [&](const char* name, auto& dst) {
        if (const char* v = getenv_fn(name); v && *v) {
            try {
                std::size_t used = 0;
                const unsigned long long x = std::stoull(v, &used);
                if (used != std::string(v).size() || x == 0) throw std::invalid_argument(name);
                dst = static_cast<std::remove_reference_t<decltype(dst)>>(x);
            } catch (const std::exception&) {
                throw InvalidInput(std::string("environment variable ") + name + " must be a positive integer");
            }
        }
    };
    read("RZK_MAX_VERTICES", cfg.limits.max_vertices);
    read("RZK_MAX_CELLS", cfg.limits.max_cells);
    read("RZK_WORKERS", cfg.workers);
    if (const char* v = getenv_fn("RZK_SEED"); v && *v) cfg.seed = std::stoull(v);
}

inline int exit_code(const RingComparison& cmp) { return cmp.match() ? ok : mismatch; }

namespace detail {

inline nlohmann::json summaries_json(const std::vector<DegreeSummary>& s)
{
    nlohmann::json betti = nlohmann::json::array();
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& d : s) {
        betti.push_back(d.free_rank);
        torsion.push_back(integers_to_json(d.torsion));
    }
    return {{"betti", betti}, {"torsion", torsion}};
}

inline std::string scalar_text(const nlohmann::json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void render_table(const nlohmann::json& j, std::ostream& out, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        const bool rows = value.is_array() && !value.empty() &&
                          std::all_of(value.begin(), value.end(), [](const auto& x) { return x.is_object(); });
        if (rows) {
            std::vector<std::string> cols;
            for (const auto& row : value) {
                for (const auto& [k, v] : row.items()) {
                    if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
                }
            }
            std::vector<std::size_t> width(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                width[c] = cols[c].size();
                for (const auto& row : value) {
                    if (row.contains(cols[c])) width[c] = std::max(width[c], scalar_text(row[cols[c]]).size());
                }
            }
            out << pad << key << ":\n" << pad << "  ";
            for (std::size_t c = 0; c < cols.size(); ++c) out << std::left << std::setw(static_cast<int>(width[c]) + 2) << cols[c];
            out << '\n';
            for (const auto& row : value) {
                out << pad << "  ";
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    out << std::left << std::setw(static_cast<int>(width[c]) + 2)
                        << (row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
                }
                out << '\n';
            }
        } else if (value.is_object()) {
            out << pad << key << ":\n";
            render_table(value, out, indent + 2);
        } else {
            out << pad << key << ": " << scalar_text(value) << '\n';
        }
    }
}

inline nlohmann::json validate_json(const SimplicialComplex& k)
{
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : k.facets()) facets.push_back(f.labels());
    return {{"m", k.vertex_count()},
            {"simplices", k.size()},
            {"dimension", k.dimension()},
            {"f_vector", k.f_vector()},
            {"facets", facets},
            {"ghost_vertices", k.ghost_vertices().labels()},
            {"warnings", warnings(k)},
            {"euler_characteristic", euler_char_rz(k)},
            {"valid", true}};
}

inline nlohmann::json cohomology_json(const HochsterTable& table)
{
    const auto summary = betti_and_torsion(table);
    nlohmann::json degrees = nlohmann::json::array();
    for (std::size_t p = 0; p < summary.size(); ++p) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& e : table.entries) {
            if (e.p != static_cast<int>(p)) continue;
            for (std::size_t g = 0; g < e.generators.size(); ++g) {
                const auto& order = e.group.generators[g].order;
                gens.push_back({{"omega", e.omega.labels()},
                                {"order", order.is_small() ? nlohmann::json(order.to_int64()) : nlohmann::json(order.str())},
                                {"representative", to_string(e.generators[g])}});
            }
        }
        degrees.push_back({{"degree", p},
                           {"rank", summary[p].free_rank},
                           {"torsion", integers_to_json(summary[p].torsion)},
                           {"generators", gens}});
    }
    return {{"degrees", degrees}};
}

inline nlohmann::json oracle_json(const SimplicialComplex& k, const RunConfig& cfg)
{
    const CellularComplex cx = cellular_coboundary(k, cfg.limits);
    std::vector<CohomologyGroup> groups(cx.cells.size());
    parallel_for(groups.size(), cfg.workers, [&](std::size_t p) { groups[p] = oracle_cohomology(cx, static_cast<int>(p)); });
    std::vector<DegreeSummary> s;
    for (const auto& g : groups) s.push_back({g.free_rank, g.torsion});
    nlohmann::json out = summaries_json(s);
    std::vector<std::size_t> counts;
    for (const auto& c : cx.cells) counts.push_back(c.size());
    out["cells"] = counts;
    if (cfg.dump) out["complex"] = to_json(cx.cochains);
    return out;
}

inline RingComparison compare_routes(const SimplicialComplex& k, const RunConfig& cfg)
{
    const RingPresentation a = build_ring(k, Route::hochster, {cfg.workers, cfg.limits});
    const RingPresentation b = build_ring(k, Route::oracle, {cfg.workers, cfg.limits});
    return compare_rings(a, b);
}

} // namespace detail

/// Executes one command. JSON is the canonical report; the table format is
/// rendered from it. Errors go to `err` as a JSON object.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto fail = [&](const char* kind, const std::string& msg, int code) {
        err << nlohmann::json{{"error", kind}, {"message", msg}}.dump() << '\n';
        return code;
    };
    try {
        if (!commands().count(cfg.command)) throw InvalidInput("unknown command '" + cfg.command + "'");
        if (cfg.format != "json" && cfg.format != "table") throw InvalidInput("format must be json or table");
        if (cfg.workers == 0) throw InvalidInput("workers must be positive");
        const SimplicialComplex k = read_complex(cfg.input, cfg.limits);

        nlohmann::json report;
        int code = ok;
        if (cfg.command == "validate") {
            report = detail::validate_json(k);
        } else if (cfg.command == "betti") {
            report = detail::summaries_json(betti_and_torsion(hochster_table(k, {cfg.workers, cfg.limits})));
            report["euler_characteristic"] = euler_char_rz(k);
        } else if (cfg.command == "cohomology") {
            report = detail::cohomology_json(hochster_table(k, {cfg.workers, cfg.limits}));
        } else if (cfg.command == "hochster") {
            report = {{"table", to_json(hochster_table(k, {cfg.workers, cfg.limits}))}};
        } else if (cfg.command == "ring") {
            report = to_json(build_ring(k, cfg.route, {cfg.workers, cfg.limits}));
        } else if (cfg.command == "oracle") {
            report = detail::oracle_json(k, cfg);
        } else if (cfg.command == "compare") {
            const RingComparison cmp = detail::compare_routes(k, cfg);
            report = to_json(cmp);
            code = exit_code(cmp);
        }
        report["command"] = cfg.command;
        if (cfg.check && cfg.command != "compare") {
            const RingComparison cmp = detail::compare_routes(k, cfg);
            report["check"] = to_json(cmp);
            code = exit_code(cmp);
        }

        if (cfg.format == "json") {
            out << report.dump(2) << '\n';
        } else {
            detail::render_table(report, out);
        }
        return code;
    } catch (const InvalidInput& e) {
        return fail("invalid-input", e.what(), input_error);
    } catch (const SizeLimit& e) {
        return fail("size-limit", e.what(), size_limit);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), input_error);
    }
}

} // namespace rzk::cli

#endif // RZK_CLI_HPP
