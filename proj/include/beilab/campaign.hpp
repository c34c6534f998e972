#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "beilab/closedness.hpp"
#include "beilab/edge_ideal.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph_enum.hpp"
#include "beilab/graph_io.hpp"
#include "beilab/regularity.hpp"

namespace beilab {

struct CampaignConfig {
    int n_max = 0;                    // 0 = campaign default
    std::vector<std::string> fields;  // subset of {"p32003", "p2", "Q"}; empty = campaign default
    int jobs = 1;
};

struct CampaignRow {
    std::string campaign;
    int n = 0;
    std::string canonical_id;
    int edges = 0;
    std::optional<bool> closed, chordal;
    std::optional<int> ell, r;
    std::optional<int> reg_jg_p32003, reg_injg_p32003, reg_jg_p2, reg_jg_q;
    std::optional<int> indmatch_h;
    bool pass = true;
    // wall time for this graph's pipeline; kept out of the CSV and JSON so
    // reports stay byte-identical across runs
    double ms = 0.0;
};

struct CampaignReport {
    std::string name;
    int n_max = 0;
    std::vector<std::string> fields;
    std::vector<CampaignRow> rows;

    bool all_pass() const {
        for (const auto& row : rows)
            if (!row.pass) return false;
        return true;
    }

    std::size_t fail_count() const {
        std::size_t f = 0;
        for (const auto& row : rows)
            if (!row.pass) ++f;
        return f;
    }

    std::string csv() const {
        std::ostringstream out;
        out << "campaign,n,canonical_id,edges,closed?,chordal?,ell,r,"
               "reg_JG_p32003,reg_inJG_p32003,reg_JG_p2,reg_JG_Q,indmatch_H,verdict\n";
        auto opt_bool = [](const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; };
        auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
        for (const auto& row : rows) {
            out << row.campaign << "," << row.n << "," << row.canonical_id << "," << row.edges << ","
                << opt_bool(row.closed) << "," << opt_bool(row.chordal) << "," << opt_int(row.ell) << ","
                << opt_int(row.r) << "," << opt_int(row.reg_jg_p32003) << "," << opt_int(row.reg_injg_p32003) << ","
                << opt_int(row.reg_jg_p2) << "," << opt_int(row.reg_jg_q) << "," << opt_int(row.indmatch_h) << ","
                << (row.pass ? "pass" : "fail") << "\n";
        }
        return out.str();
    }

    std::string summary_json() const {
        std::ostringstream out;
        out << "{\n"
            << "  \"campaign\": \"" << name << "\",\n"
            << "  \"n_max\": " << n_max << ",\n"
            << "  \"fields\": [";
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? ", " : "") << "\"" << fields[i] << "\"";
        out << "],\n"
            << "  \"graphs\": " << rows.size() << ",\n"
            << "  \"pass\": " << (rows.size() - fail_count()) << ",\n"
            << "  \"fail\": " << fail_count() << ",\n"
            << "  \"verdict\": \"" << (all_pass() ? "pass" : "fail") << "\"\n"
            << "}\n";
        return out.str();
    }
};

namespace campaign_detail {

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

inline void validate_fields(const std::vector<std::string>& fields) {
    for (const auto& f : fields)
        if (f != "p32003" && f != "p2" && f != "Q")
            throw ScaleGuardError("unknown field '" + f + "' (supported: p32003, p2, Q)");
}

// Apply fn over each requested field tag; fn is a generic lambda taking a
// field-type witness.
template <class Fn>
void for_each_field(const std::vector<std::string>& fields, Fn&& fn) {
    for (const auto& f : fields) {
        if (f == "p32003")
            fn(Gf<32003>{}, f);
        else if (f == "p2")
            fn(Gf<2>{}, f);
        else if (f == "Q")
            fn(Rational{}, f);
    }
}

inline void set_reg_column(CampaignRow& row, const std::string& field, int value) {
    if (field == "p32003")
        row.reg_jg_p32003 = value;
    else if (field == "p2")
        row.reg_jg_p2 = value;
    else if (field == "Q")
        row.reg_jg_q = value;
}

}  // namespace campaign_detail

inline const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names = {
        "closed-regularity",      "mm-bounds",           "weakly-chordal-indmatch",
        "chordal-clique-bound",   "prime-decomposition", "char-independence",
    };
    return names;
}

// Enumerates connected graphs (canonical representatives) for n = 1..n_max
// and runs `process` on each; rows are reported in enumeration order, which
// is ascending n then ascending canonical bitstring.
template <class Process>
CampaignReport run_over_connected_graphs(const std::string& name, int n_max, const std::vector<std::string>& fields,
                                         int jobs, Process&& process) {
    CampaignReport report;
    report.name = name;
    report.n_max = n_max;
    report.fields = fields;
    std::vector<Graph> graphs;
    for (int n = 1; n <= n_max; ++n)
        for (Graph& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
    std::vector<std::optional<CampaignRow>> rows(graphs.size());
    campaign_detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        auto start = std::chrono::steady_clock::now();
        rows[i] = process(graphs[i]);
        if (rows[i])
            rows[i]->ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });
    for (auto& row : rows)
        if (row) report.rows.push_back(std::move(*row));
    return report;
}

// Theorem check: for every connected closed graph, reg(S/J_G) =
// reg(S/in_lex(J_G)) = ell, each computed by an independent engine. At
// n = 7 the resolution pathway is out of scale and only the monomial
// pathway is compared.
inline CampaignReport campaign_closed_regularity(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 6;
    if (cfg.n_max < 1 || cfg.n_max > 7) throw ScaleGuardError("closed-regularity: n_max must be in 1..7");
    if (cfg.fields.empty()) cfg.fields = {"p32003"};
    campaign_detail::validate_fields(cfg.fields);
    return run_over_connected_graphs(
        "closed-regularity", cfg.n_max, cfg.fields, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            auto labeling = find_closed_labeling(g);
            if (!labeling) return std::nullopt;
            Graph gc = relabel(g, labeling->new_label);
            CampaignRow row;
            row.campaign = "closed-regularity";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = true;
            row.chordal = is_chordal(g);
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            campaign_detail::for_each_field(cfg.fields, [&](auto field, const std::string& fname) {
                using K = decltype(field);
                int reg_in = initial_ideal_regularity<K>(gc);
                if (fname == "p32003") row.reg_injg_p32003 = reg_in;
                row.pass = row.pass && reg_in == *row.ell;
                if (g.vertex_count() <= 6) {
                    int reg_jg = binomial_regularity<K>(gc);
                    campaign_detail::set_reg_column(row, fname, reg_jg);
                    row.pass = row.pass && reg_jg == *row.ell;
                }
            });
            return row;
        });
}

// Sandwich ell <= reg(S/J_G) <= n-1 for every connected graph, and
// reg = n-1 exactly for the path.
inline CampaignReport campaign_mm_bounds(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 5;
    if (cfg.n_max < 1 || cfg.n_max > 5) throw ScaleGuardError("mm-bounds: n_max must be in 1..5");
    if (cfg.fields.empty()) cfg.fields = {"p32003"};
    campaign_detail::validate_fields(cfg.fields);
    const std::string field = cfg.fields.front();
    return run_over_connected_graphs(
        "mm-bounds", cfg.n_max, {field}, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            CampaignRow row;
            row.campaign = "mm-bounds";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = is_closed(g);
            row.chordal = is_chordal(g);
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            int reg = 0;
            campaign_detail::for_each_field({field}, [&](auto f, const std::string& fname) {
                using K = decltype(f);
                reg = binomial_regularity<K>(g);
                campaign_detail::set_reg_column(row, fname, reg);
            });
            row.pass = *row.ell <= reg && reg <= g.vertex_count() - 1 &&
                       ((reg == g.vertex_count() - 1) == is_path_graph(g));
            return row;
        });
}

// For every connected closed graph: H = in_lex(G) is weakly chordal and
// indmatch(H) = ell.
inline CampaignReport campaign_weakly_chordal_indmatch(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 7;
    if (cfg.n_max < 1 || cfg.n_max > 7) throw ScaleGuardError("weakly-chordal-indmatch: n_max must be in 1..7");
    return run_over_connected_graphs(
        "weakly-chordal-indmatch", cfg.n_max, {}, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            auto labeling = find_closed_labeling(g);
            if (!labeling) return std::nullopt;
            Graph gc = relabel(g, labeling->new_label);
            Graph h = ini_lex_graph(gc);
            CampaignRow row;
            row.campaign = "weakly-chordal-indmatch";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = true;
            row.chordal = is_chordal(g);
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            row.indmatch_h = induced_matching_number(h);
            row.pass = is_weakly_chordal(h) && *row.indmatch_h == *row.ell;
            return row;
        });
}

// For every connected chordal graph whose maximal cliques pairwise
// intersect in at most one vertex: reg(S/J_G) <= r; among trees, reg = n-1
// only for the path. At n_max = 7 only trees are within the resolution
// scale guard.
inline CampaignReport campaign_chordal_clique_bound(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 6;
    if (cfg.n_max < 1 || cfg.n_max > 7) throw ScaleGuardError("chordal-clique-bound: n_max must be in 1..7");
    if (cfg.fields.empty()) cfg.fields = {"p32003"};
    campaign_detail::validate_fields(cfg.fields);
    const std::string field = cfg.fields.front();
    return run_over_connected_graphs(
        "chordal-clique-bound", cfg.n_max, {field}, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            if (!is_chordal(g) || !cliques_pairwise_intersect_at_most_one(g)) return std::nullopt;
            if (g.vertex_count() == 7 && !is_tree(g)) return std::nullopt;
            CampaignRow row;
            row.campaign = "chordal-clique-bound";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = is_closed(g);
            row.chordal = true;
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            int reg = 0;
            campaign_detail::for_each_field({field}, [&](auto f, const std::string& fname) {
                using K = decltype(f);
                reg = binomial_regularity<K>(g);
                campaign_detail::set_reg_column(row, fname, reg);
            });
            row.pass = reg <= *row.r;
            if (is_tree(g)) row.pass = row.pass && ((reg == g.vertex_count() - 1) == is_path_graph(g));
            return row;
        });
}

// J_G = intersection of the cut-point P_S(G): full elimination-based
// intersection for n <= 4 (plus the Q1/Q2 split at a leaf cut vertex when
// the graph is block-like chordal), containment-only for 5 <= n <= 6.
inline CampaignReport campaign_prime_decomposition(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 6;
    if (cfg.n_max < 1 || cfg.n_max > 6) throw ScaleGuardError("prime-decomposition: n_max must be in 1..6");
    if (cfg.fields.empty()) cfg.fields = {"p32003"};
    campaign_detail::validate_fields(cfg.fields);
    const std::string field = cfg.fields.front();
    return run_over_connected_graphs(
        "prime-decomposition", cfg.n_max, {field}, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            CampaignRow row;
            row.campaign = "prime-decomposition";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = is_closed(g);
            row.chordal = is_chordal(g);
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            campaign_detail::for_each_field({field}, [&](auto f, const std::string&) {
                using K = decltype(f);
                row.pass = verify_prime_decomposition<K>(g);
                if (g.vertex_count() <= 4 && is_chordal(g) && cliques_pairwise_intersect_at_most_one(g)) {
                    std::optional<int> i = leaf_cut_vertex(g);
                    if (!i && maximal_cliques(g).size() == 1) i = 1;  // complete graph: Q2 degenerates to the unit ideal
                    if (i) {
                        QDecomposition<K> dec = q1_q2_decomposition<K>(g, *i);
                        row.pass = row.pass && dec.intersection_equals_jg && dec.sum_identity;
                    }
                }
            });
            return row;
        });
}

// reg(S/J_G) and reg(S/in_lex(J_G)) agree over GF(2), GF(32003) and Q for
// every connected closed graph.
inline CampaignReport campaign_char_independence(CampaignConfig cfg) {
    if (cfg.n_max == 0) cfg.n_max = 5;
    if (cfg.n_max < 1 || cfg.n_max > 5) throw ScaleGuardError("char-independence: n_max must be in 1..5");
    if (cfg.fields.empty()) cfg.fields = {"p32003", "p2", "Q"};
    campaign_detail::validate_fields(cfg.fields);
    if (cfg.fields.size() < 2) throw ScaleGuardError("char-independence: needs at least two fields");
    return run_over_connected_graphs(
        "char-independence", cfg.n_max, cfg.fields, cfg.jobs, [&](const Graph& g) -> std::optional<CampaignRow> {
            auto labeling = find_closed_labeling(g);
            if (!labeling) return std::nullopt;
            Graph gc = relabel(g, labeling->new_label);
            CampaignRow row;
            row.campaign = "char-independence";
            row.n = g.vertex_count();
            row.canonical_id = canonical_id(g);
            row.edges = g.edge_count();
            row.closed = true;
            row.chordal = is_chordal(g);
            row.ell = longest_induced_path_length(g);
            row.r = static_cast<int>(maximal_cliques(g).size());
            std::vector<int> regs_jg, regs_in;
            campaign_detail::for_each_field(cfg.fields, [&](auto f, const std::string& fname) {
                using K = decltype(f);
                int reg_jg = binomial_regularity<K>(gc);
                int reg_in = initial_ideal_regularity<K>(gc);
                regs_jg.push_back(reg_jg);
                regs_in.push_back(reg_in);
                campaign_detail::set_reg_column(row, fname, reg_jg);
                if (fname == "p32003") row.reg_injg_p32003 = reg_in;
            });
            for (int v : regs_jg) row.pass = row.pass && v == regs_jg.front();
            for (int v : regs_in) row.pass = row.pass && v == regs_in.front();
            return row;
        });
}

inline CampaignReport run_campaign(const std::string& name, const CampaignConfig& cfg = {}) {
    if (name == "closed-regularity") return campaign_closed_regularity(cfg);
    if (name == "mm-bounds") return campaign_mm_bounds(cfg);
    if (name == "weakly-chordal-indmatch") return campaign_weakly_chordal_indmatch(cfg);
    if (name == "chordal-clique-bound") return campaign_chordal_clique_bound(cfg);
    if (name == "prime-decomposition") return campaign_prime_decomposition(cfg);
    if (name == "char-independence") return campaign_char_independence(cfg);
    throw ScaleGuardError("unknown campaign '" + name + "'");
}

}  // namespace beilab
