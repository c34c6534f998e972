// bei-lab: binomial edge ideal laboratory.
//
// Subcommands:
//   campaign <name> --n-max K --field p32003,p2,Q --out report.csv --jobs N
//   analyze  <graphfile>   all combinatorial and algebraic statistics
//   gb       <graphfile>   reduced Groebner basis and initial ideal
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 configuration or
// scale-guard error. BEI_LAB_CONFIG overrides the config file path.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "beilab/beilab.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> split_fields(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Optional JSON config with per-campaign defaults, e.g.
//   { "jobs": 4, "campaigns": { "mm-bounds": { "n_max": 4 } } }
// Path defaults to ./bei-lab.json; BEI_LAB_CONFIG overrides it.
json load_config() {
    std::string path = "bei-lab.json";
    if (const char* env = std::getenv("BEI_LAB_CONFIG")) path = env;
    std::ifstream in(path);
    if (!in) return json::object();
    json cfg;
    in >> cfg;
    return cfg;
}

beilab::Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return beilab::read_graph(in);
}

int cmd_campaign(const std::string& name, int n_max, const std::string& field_csv, const std::string& out_path,
                 int jobs) {
    json file_cfg = load_config();
    beilab::CampaignConfig cfg;
    if (file_cfg.contains("jobs")) cfg.jobs = file_cfg["jobs"].get<int>();
    if (file_cfg.contains("campaigns") && file_cfg["campaigns"].contains(name)) {
        const json& c = file_cfg["campaigns"][name];
        if (c.contains("n_max")) cfg.n_max = c["n_max"].get<int>();
        if (c.contains("fields")) cfg.fields = c["fields"].get<std::vector<std::string>>();
    }
    if (n_max > 0) cfg.n_max = n_max;
    if (!field_csv.empty()) cfg.fields = split_fields(field_csv);
    if (jobs > 0) cfg.jobs = jobs;

    beilab::CampaignReport report = beilab::run_campaign(name, cfg);
    if (out_path.empty() || out_path == "-") {
        std::cout << report.csv();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << report.csv();
        std::ofstream summary(out_path + ".summary.json");
        summary << report.summary_json();
    }
    std::cerr << "campaign " << name << ": " << report.rows.size() << " graphs, "
              << (report.rows.size() - report.fail_count()) << " pass, " << report.fail_count() << " fail\n";
    return report.all_pass() ? 0 : 1;
}

template <class K>
void print_algebra(const beilab::Graph& g, const std::string& betti_out) {
    using namespace beilab;
    const int n = g.vertex_count();
    PolyRing ring{n, 0};
    GroebnerBasis<K> gb = buchberger(binomial_edge_ideal<K>(g), MonomialOrder{2 * n, 0});
    std::cout << "groebner_basis_size: " << gb.gens.size() << "\n";
    bool quadratic = true;
    for (const auto& p : gb.gens) quadratic = quadratic && p.degree() <= 2;
    std::cout << "groebner_basis_quadratic: " << (quadratic ? "true" : "false") << "\n";
    bool within_guard = true;
    for (const VertexSet& comp : connected_components(g)) within_guard = within_guard && comp.size() <= 7;
    if (within_guard) {
        BettiTable table;
        int reg = binomial_regularity<K>(g, is_connected(g) ? &table : nullptr);
        std::cout << "reg_JG_" << K::field_name() << ": " << reg << "\n";
        if (is_connected(g) && !betti_out.empty()) {
            std::ofstream out(betti_out);
            out << table.csv();
            std::cout << "betti_csv: " << betti_out << "\n";
        }
        SquarefreeIdeal in_lex = squarefree_ideal_from_monomials(2 * n, initial_ideal(gb));
        std::cout << "reg_inJG_" << K::field_name() << ": " << squarefree_monomial_regularity<K>(in_lex) << "\n";
    } else {
        std::cout << "reg_JG_" << K::field_name() << ": skipped (component exceeds resolution guard)\n";
    }
}

int cmd_analyze(const std::string& path, const std::string& field, const std::string& betti_out) {
    using namespace beilab;
    Graph g = read_graph_file(path);
    GraphStats stats = graph_stats(g);
    std::cout << "n: " << g.vertex_count() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "canonical_id: " << canonical_id(g) << "\n"
              << "connected: " << (stats.connected ? "true" : "false") << "\n"
              << "chordal: " << (stats.chordal ? "true" : "false") << "\n"
              << "claw_free: " << (stats.claw_free ? "true" : "false") << "\n"
              << "tree: " << (stats.tree ? "true" : "false") << "\n"
              << "weakly_chordal: " << (is_weakly_chordal(g) ? "true" : "false") << "\n";
    std::cout << "ell_per_component:";
    for (int l : stats.ell) std::cout << " " << l;
    std::cout << "\nmaximal_cliques: " << stats.r << "\n";
    std::cout << "induced_matching: " << induced_matching_number(g) << "\n";
    ClosednessCertificate cert = closedness_certificate(g);
    std::cout << "closed: " << (cert.closed() ? "true" : "false") << "\n";
    if (cert.closed()) {
        std::cout << "closed_labeling:";
        for (int l : cert.labeling->new_label) std::cout << " " << l;
        std::cout << "\n";
    } else {
        if (cert.claw) std::cout << "obstruction_claw: " << cert.claw->str() << "\n";
        if (cert.chordless_cycle) std::cout << "obstruction_chordless_cycle: " << cert.chordless_cycle->str() << "\n";
    }
    if (stats.connected) {
        std::cout << "cut_point_sets:";
        for (const VertexSet& s : cut_point_sets(g)) std::cout << " " << s.str();
        std::cout << "\n";
        for (const VertexSet& s : cut_point_sets(g)) {
            PrimeComponent pc = prime_component_structure(g, s);
            std::cout << "prime_component S=" << s.str() << " components:";
            for (const VertexSet& comp : pc.components) std::cout << " " << comp.str();
            std::cout << "\n";
        }
    }
    if (field == "p2")
        print_algebra<Gf<2>>(g, betti_out);
    else if (field == "Q")
        print_algebra<Rational>(g, betti_out);
    else
        print_algebra<Gf<32003>>(g, betti_out);
    return 0;
}

template <class K>
void print_gb(const beilab::Graph& g) {
    using namespace beilab;
    const int n = g.vertex_count();
    PolyRing ring{n, 0};
    GroebnerBasis<K> gb = buchberger(binomial_edge_ideal<K>(g), MonomialOrder{2 * n, 0});
    std::cout << "reduced_groebner_basis:\n";
    for (const auto& p : gb.gens) std::cout << "  " << poly_to_string(p, ring) << "\n";
    std::cout << "initial_ideal:\n";
    for (const Monomial& m : initial_ideal(gb))
        std::cout << "  " << poly_to_string(Poly<K>::term(m, K::one()), ring) << "\n";
}

int cmd_gb(const std::string& path, const std::string& field) {
    beilab::Graph g = read_graph_file(path);
    if (field == "p2")
        print_gb<beilab::Gf<2>>(g);
    else if (field == "Q")
        print_gb<beilab::Rational>(g);
    else
        print_gb<beilab::Gf<32003>>(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bei-lab: exact laboratory for binomial edge ideals"};
    app.require_subcommand(1);

    std::string campaign_name, out_path, field_csv, graph_path, field = "p32003", betti_out;
    int n_max = 0, jobs = 0;

    CLI::App* campaign = app.add_subcommand("campaign", "run a verification campaign");
    campaign->add_option("name", campaign_name, "campaign name")
        ->required()
        ->check(CLI::IsMember(beilab::campaign_names()));
    campaign->add_option("--n-max", n_max, "largest vertex count");
    campaign->add_option("--field", field_csv, "comma-separated fields (p32003,p2,Q)");
    campaign->add_option("--out", out_path, "CSV output path ('-' = stdout); also writes <out>.summary.json");
    campaign->add_option("--jobs", jobs, "worker threads");

    CLI::App* analyze = app.add_subcommand("analyze", "print all statistics for one graph");
    analyze->add_option("graphfile", graph_path, "graph file (text or graph6)")->required();
    analyze->add_option("--field", field, "coefficient field (p32003, p2, Q)");
    analyze->add_option("--betti", betti_out, "write the Betti table of S/J_G as CSV");

    CLI::App* gb = app.add_subcommand("gb", "print the reduced Groebner basis and initial ideal");
    gb->add_option("graphfile", graph_path, "graph file (text or graph6)")->required();
    gb->add_option("--field", field, "coefficient field (p32003, p2, Q)");

    try {
        app.parse(argc, argv);
        if (campaign->parsed()) return cmd_campaign(campaign_name, n_max, field_csv, out_path, jobs);
        if (analyze->parsed()) return cmd_analyze(graph_path, field, betti_out);
        if (gb->parsed()) return cmd_gb(graph_path, field);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const beilab::ScaleGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
