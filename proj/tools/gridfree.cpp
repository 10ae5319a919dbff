// Command-line front end: builds the hypergraph constructions, runs the
// detectors and enumerators, and prints machine-readable JSON on stdout.
// Logs go to stderr so pipelines can consume stdout directly.
//
// Exit codes: 0 = success / claim holds, 1 = claim violated, 2 = usage error,
// 3 = search budget exhausted (indeterminate).

#include <cstdint>
#include <exception>
#include <map>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridfree/constructions.hpp"
#include "gridfree/cores.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/ffield.hpp"
#include "gridfree/io.hpp"
#include "gridfree/obstruction.hpp"
#include "gridfree/parallel.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace gridfree;

namespace {

ordered_json density_json(const DensityReport& r) {
    ordered_json j;
    j["vertices"] = r.v;
    j["edges"] = r.e;
    j["density"] = r.density;
    j["linear"] = r.linear;
    j["sixteenth"] = r.sixteenth;
    j["eighteenth"] = r.eighteenth;
    j["ratio_to_sixteenth"] = r.ratio_to_sixteenth;
    j["ratio_to_eighteenth"] = r.ratio_to_eighteenth;
    return j;
}

ordered_json witness_json(const TripartiteHypergraph& h, const Pattern& f,
                          const Embedding& emb) {
    ordered_json verts = ordered_json::array();
    for (int v = 0; v < f.n; ++v) {
        if (emb.vertex_image[v] == 0xffffffffu) continue;
        auto [part, value] = h.vertex_by_id(emb.vertex_image[v]);
        ordered_json entry;
        entry["pattern_vertex"] = v;
        entry["part"] = part_name(part);
        entry["value"] = value;
        verts.push_back(std::move(entry));
    }
    ordered_json edges = ordered_json::array();
    for (auto he : emb.edge_image) {
        const auto& e = h.edges()[he];
        edges.push_back({e.val[0], e.val[1], e.val[2]});
    }
    ordered_json j;
    j["vertices"] = std::move(verts);
    j["host_edges"] = std::move(edges);
    return j;
}

ordered_json solution_report_json(const SolutionReport& rep) {
    ordered_json j;
    j["equation"] = equation_name(rep.kind);
    j["p"] = rep.p;
    j["x_set"] = rep.x_set;
    j["a_set"] = rep.a_set;
    j["count"] = rep.count;
    j["exhaustive"] = rep.exhaustive;
    j["witness_cap"] = rep.witness_cap;
    ordered_json ws = ordered_json::array();
    for (const auto& w : rep.witnesses) {
        ordered_json t = ordered_json::array();
        for (int i = 0; i < w.arity; ++i) t.push_back(w.vals[i]);
        ws.push_back(std::move(t));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-free linear 3-uniform hypergraph constructions over "
                 "prime fields: builders, forbidden-configuration detection, "
                 "2-core enumeration, obstruction equations"};
    app.require_subcommand(1);
    int threads = default_thread_count();
    app.add_option("--threads", threads, "worker threads for searches")
        ->capture_default_str();

    // ---- build ----
    auto* build = app.add_subcommand("build", "build a construction and save it");
    std::string b_construction, b_xset, b_aset, b_out;
    std::uint64_t b_p = 0;
    bool b_text = false;
    build->add_option("--construction", b_construction)
        ->required()
        ->check(CLI::IsMember({"mult", "qr", "quadratic", "ap"}));
    build->add_option("--p", b_p, "odd prime modulus")->required();
    build->add_option("--x-set", b_xset, "set spec for X");
    build->add_option("--a-set", b_aset, "set spec for A");
    build->add_option("--out", b_out)->required();
    build->add_flag("--text", b_text, "write the plain-text edge list format");

    // ---- detect ----
    auto* detect = app.add_subcommand("detect", "search for a pattern copy");
    std::string d_pattern, d_in, d_mode = "first";
    bool d_expect_free = false;
    std::uint64_t d_budget = 0;
    detect->add_option("--pattern", d_pattern, "grid | triangle | pattern-v1 file")
        ->required();
    detect->add_option("--in", d_in)->required();
    detect->add_option("--mode", d_mode)
        ->check(CLI::IsMember({"first", "count", "all"}));
    detect->add_flag("--expect-free", d_expect_free,
                     "exit 1 if a copy is found");
    detect->add_option("--budget", d_budget, "max search nodes (0 = unlimited)");

    // ---- linearize ----
    auto* lin = app.add_subcommand("linearize",
                                   "delete one edge per conflicting pair");
    std::string l_in, l_out;
    lin->add_option("--in", l_in)->required();
    lin->add_option("--out", l_out)->required();

    // ---- enumerate-cores ----
    auto* enum_cores =
        app.add_subcommand("enumerate-cores", "catalog linear 2-cores");
    int e_maxv = 9;
    std::string e_out;
    enum_cores->add_option("--max-vertices", e_maxv)->required();
    enum_cores->add_option("--out", e_out, "catalog directory")->required();

    // ---- scan-cores ----
    auto* scan = app.add_subcommand("scan-cores",
                                    "scan a host against a core catalog");
    std::string s_in, s_catalog;
    std::uint64_t s_budget = 0;
    scan->add_option("--in", s_in)->required();
    scan->add_option("--catalog", s_catalog)->required();
    scan->add_option("--budget", s_budget, "max nodes per entry (0 = unlimited)");

    // ---- solve-obstruction ----
    auto* solve = app.add_subcommand("solve-obstruction",
                                     "count obstruction-equation solutions");
    std::string o_eq, o_xset = "nonzero", o_aset = "nonzero";
    std::uint64_t o_p = 0;
    std::size_t o_cap = 16;
    solve->add_option("--equation", o_eq)
        ->required()
        ->check(CLI::IsMember({"mult-triangle", "quad-triangle", "quad-grid"}));
    solve->add_option("--p", o_p)->required();
    solve->add_option("--x-set", o_xset);
    solve->add_option("--a-set", o_aset);
    solve->add_option("--witness-cap", o_cap);

    // ---- search-sets ----
    auto* search = app.add_subcommand("search-sets",
                                      "grow obstruction-free sets greedily");
    std::string g_eq, g_strategy = "greedy", g_candidates = "ascending";
    std::uint64_t g_p = 0, g_seed = 0;
    bool g_independent_x = false;
    search->add_option("--equation", g_eq)
        ->required()
        ->check(CLI::IsMember({"mult-triangle", "quad-triangle", "quad-grid"}));
    search->add_option("--p", g_p)->required();
    search->add_option("--strategy", g_strategy)
        ->check(CLI::IsMember({"greedy", "randomized-greedy"}));
    search->add_option("--seed", g_seed);
    search->add_option("--candidates", g_candidates)
        ->check(CLI::IsMember({"ascending", "interval"}));
    search->add_flag("--independent-x", g_independent_x,
                     "keep X at the full field instead of tying X = A");

    // ---- report ----
    auto* rep = app.add_subcommand("report", "density report for a saved host");
    std::string r_in;
    rep->add_option("--in", r_in)->required();

    // ---- partitions ----
    auto* parts = app.add_subcommand("partitions",
                                     "enumerate 3-partitions of a pattern");
    std::string p_pattern;
    parts->add_option("--pattern", p_pattern)->required();

    // Let per-subcommand invocations use the global flags too
    // (e.g. `gridfree scan-cores ... --threads 2`).
    for (CLI::App* sub : {build, detect, lin, enum_cores, scan, solve, search,
                          rep, parts})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            std::string xs = b_xset, as = b_aset;
            if (xs.empty()) xs = b_construction == "ap" ? "full" : "nonzero";
            if (as.empty()) as = b_construction == "ap" ? "full" : "nonzero";
            TripartiteHypergraph h = build_construction(
                b_construction, b_p, SetSpec::parse(xs), SetSpec::parse(as));
            save_trihyper(h, b_out, b_text);
            ordered_json j;
            j["command"] = "build";
            j["construction"] = h.provenance().construction;
            j["p"] = h.modulus();
            j["x_set"] = h.provenance().x_set;
            j["a_set"] = h.provenance().a_set;
            j["out"] = b_out;
            j["report"] = density_json(density_report(h));
            emit(j);
            return 0;
        }

        if (*detect) {
            TripartiteHypergraph h = load_trihyper(d_in);
            Pattern f = resolve_pattern(d_pattern);
            SearchOptions opts;
            opts.mode = d_mode == "first"  ? SearchMode::First
                        : d_mode == "count" ? SearchMode::Count
                                            : SearchMode::All;
            opts.max_nodes = d_budget;
            opts.threads = threads;
            SearchResult r = find_embeddings(h, f, opts);

            ordered_json j;
            j["command"] = "detect";
            j["pattern"] = f.name.empty() ? d_pattern : f.name;
            j["in"] = d_in;
            j["mode"] = d_mode;
            j["copies"] = r.copies;
            j["nodes"] = r.nodes;
            j["status"] = r.status == SearchStatus::BudgetExceeded
                              ? "budget-exceeded"
                              : "done";
            ordered_json ws = ordered_json::array();
            for (const auto& emb : r.embeddings) {
                if (!verify_embedding(h, f, emb))
                    throw std::logic_error("witness failed re-validation");
                ws.push_back(witness_json(h, f, emb));
            }
            j["witnesses"] = std::move(ws);
            emit(j);
            if (r.found()) return d_expect_free ? 1 : 0;
            if (r.status == SearchStatus::BudgetExceeded) return 3;
            return 0;
        }

        if (*lin) {
            TripartiteHypergraph h = load_trihyper(l_in);
            auto pairs = conflicting_pairs(h);
            TripartiteHypergraph out = linearize(h);
            save_trihyper(out, l_out, false);
            ordered_json j;
            j["command"] = "linearize";
            j["in"] = l_in;
            j["out"] = l_out;
            j["edges_before"] = h.edge_count();
            j["conflicting_pairs"] = pairs.size();
            j["edges_after"] = out.edge_count();
            j["linear"] = is_linear(out);
            j["report"] = density_json(density_report(out));
            emit(j);
            return 0;
        }

        if (*enum_cores) {
            CoreCatalog cat = enumerate_linear_2cores(e_maxv);
            save_catalog(cat, e_out);
            ordered_json j;
            j["command"] = "enumerate-cores";
            j["max_vertices"] = e_maxv;
            j["out"] = e_out;
            j["count"] = cat.entries.size();
            j["grid_present"] = cat.find_grid() != nullptr;
            std::map<std::string, int> by;
            for (const auto& entry : cat.entries) {
                std::string key = "v" + std::to_string(entry.pattern.n) + "_e" +
                                  std::to_string(entry.pattern.edges.size());
                ++by[key];
            }
            ordered_json byj;
            for (const auto& [k, v] : by) byj[k] = v;
            j["by_size"] = std::move(byj);
            emit(j);
            return 0;
        }

        if (*scan) {
            TripartiteHypergraph h = load_trihyper(s_in);
            CoreCatalog cat = load_catalog(s_catalog);
            auto verdicts = scan_for_cores(h, cat, s_budget, threads);
            ordered_json j;
            j["command"] = "scan-cores";
            j["in"] = s_in;
            j["catalog"] = s_catalog;
            std::size_t found = 0, notfound = 0, indet = 0;
            ordered_json vj = ordered_json::array();
            ordered_json non_grid = ordered_json::array();
            for (std::size_t i = 0; i < verdicts.size(); ++i) {
                const auto& v = verdicts[i];
                ordered_json e;
                e["entry"] = v.entry_name;
                e["is_grid"] = v.entry_is_grid;
                e["contains_grid"] = cat.entries[i].contains_grid;
                e["outcome"] = v.outcome == ScanOutcome::Found        ? "found"
                               : v.outcome == ScanOutcome::NotFound   ? "not-found"
                                                                      : "indeterminate";
                e["nodes"] = v.nodes;
                if (v.witness) {
                    if (!verify_embedding(h, cat.entries[i].pattern, *v.witness))
                        throw std::logic_error("witness failed re-validation");
                    e["witness"] = witness_json(h, cat.entries[i].pattern,
                                                *v.witness);
                }
                if (v.outcome == ScanOutcome::Found) {
                    ++found;
                    if (!v.entry_is_grid) {
                        ordered_json hit;
                        hit["entry"] = v.entry_name;
                        hit["contains_grid"] = cat.entries[i].contains_grid;
                        non_grid.push_back(std::move(hit));
                    }
                } else if (v.outcome == ScanOutcome::NotFound) {
                    ++notfound;
                } else {
                    ++indet;
                }
                vj.push_back(std::move(e));
            }
            j["verdicts"] = std::move(vj);
            j["summary"]["found"] = found;
            j["summary"]["not_found"] = notfound;
            j["summary"]["indeterminate"] = indet;
            j["summary"]["non_grid_found"] = std::move(non_grid);
            emit(j);
            return indet > 0 ? 3 : 0;
        }

        if (*solve) {
            SolutionReport r =
                count_solutions(parse_equation_kind(o_eq), o_p,
                                SetSpec::parse(o_xset), SetSpec::parse(o_aset),
                                o_cap, threads);
            ordered_json j = solution_report_json(r);
            j["command"] = "solve-obstruction";
            emit(j);
            return 0;
        }

        if (*search) {
            SetSearchOptions opts;
            opts.strategy = g_strategy == "greedy"
                                ? SearchStrategy::Greedy
                                : SearchStrategy::RandomizedGreedy;
            opts.seed = g_seed;
            opts.candidates = g_candidates == "interval" ? CandidateOrder::Interval
                                                         : CandidateOrder::Ascending;
            opts.tie_x = !g_independent_x;
            SetSearchResult r = search_sets(g_p, parse_equation_kind(g_eq), opts);
            ordered_json j;
            j["command"] = "search-sets";
            j["equation"] = g_eq;
            j["p"] = g_p;
            j["strategy"] = g_strategy;
            j["seed"] = g_seed;
            j["candidates"] = g_candidates;
            j["x_set"] = r.x_set;
            j["a_set"] = r.a_set;
            j["a_size"] = r.a_set.size();
            j["verification"] = solution_report_json(r.verification);
            emit(j);
            return 0;
        }

        if (*rep) {
            TripartiteHypergraph h = load_trihyper(r_in);
            ordered_json j;
            j["command"] = "report";
            j["in"] = r_in;
            j["construction"] = h.provenance().construction;
            j["p"] = h.modulus();
            j["report"] = density_json(density_report(h));
            emit(j);
            return 0;
        }

        if (*parts) {
            Pattern f = resolve_pattern(p_pattern);
            PartitionReport r = enumerate_3partitions(f);
            ordered_json j;
            j["command"] = "partitions";
            j["pattern"] = f.name.empty() ? p_pattern : f.name;
            j["count"] = r.partitions.size();
            j["all_equivalent"] = r.all_equivalent;
            j["automorphism_group_order"] = r.automorphism_order;
            ordered_json pj = ordered_json::array();
            for (const auto& part : r.partitions) {
                ordered_json classes = ordered_json::array();
                for (const auto& cls : part.classes) {
                    ordered_json c = ordered_json::array();
                    for (auto v : cls) c.push_back(static_cast<int>(v));
                    classes.push_back(std::move(c));
                }
                pj.push_back(std::move(classes));
            }
            j["partitions"] = std::move(pj);
            emit(j);
            return 0;
        }
    } catch (const BudgetExceededError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::length_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
