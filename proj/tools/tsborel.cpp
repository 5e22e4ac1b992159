// Command-line front end: generator sets, Freiman checks, classification,
// ideal powers, sorted graphs in DOT, and the cross-validation sweep.
//
// Exit codes: 0 clean, 1 sweep found mismatches, 2 invalid input or config.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tspread/tspread.hpp"

namespace {

tspread::SpreadWord parse_word(const std::string& u_text, int t) {
    return tspread::SpreadWord::from_monomial(tspread::Monomial::parse(u_text), t);
}

int run_gens(const std::string& u_text, int t, bool json) {
    auto gens = tspread::borel_gens(parse_word(u_text, t));
    if (json) {
        tspread::ordered_json j{{"u", u_text}, {"t", t}, {"count", gens.size()}};
        auto& list = j["generators"] = tspread::ordered_json::array();
        for (const auto& m : gens.members()) list.push_back(m.str());
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : gens.members()) std::cout << m.str() << "\n";
        std::cout << "count: " << gens.size() << "\n";
    }
    return 0;
}

int run_check(const std::string& u_text, int t) {
    auto word = parse_word(u_text, t);
    auto gens = tspread::borel_gens(word);
    auto direct = tspread::is_freiman_direct(gens);
    auto [chordal, cert] = tspread::is_freiman_via_chordality(gens);
    auto closed = tspread::classify_closed_form(word);
    bool agree = direct.is_freiman == chordal && chordal == closed.is_freiman;
    tspread::ordered_json j(direct);
    j["chordal_is_freiman"] = chordal;
    j["closed_form_is_freiman"] = closed.is_freiman;
    j["methods_agree"] = agree;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_classify(const std::string& u_text, int t) {
    auto word = parse_word(u_text, t);
    auto closed = tspread::classify_closed_form(word);
    auto intro = tspread::classify_intro_variant(word);
    tspread::ordered_json j{{"verdict", closed.is_freiman},
                            {"case_label", closed.case_label},
                            {"reductions", closed.reductions},
                            {"intro_variant_verdict", intro.is_freiman},
                            {"agrees_with_intro", closed.is_freiman == intro.is_freiman}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_power(const std::string& u_text, int t, int k, bool json) {
    auto gens = tspread::borel_gens(parse_word(u_text, t));
    long long count = tspread::power_gens(gens, k).size();
    if (json) {
        tspread::ordered_json j{{"u", u_text}, {"t", t}, {"k", k}, {"mu_power", count}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << count << "\n";
    }
    return 0;
}

int run_graph(const std::string& u_text, int t, bool dot, bool json) {
    auto gens = tspread::borel_gens(parse_word(u_text, t));
    auto graph = tspread::build_sorted_graph(gens);
    if (dot) {
        std::cout << tspread::render_dot(graph);
        return 0;
    }
    auto cert = tspread::is_chordal(graph);
    if (json) {
        tspread::ordered_json j{{"u", u_text}, {"t", t}};
        auto& verts = j["vertices"] = tspread::ordered_json::array();
        for (const auto& m : graph.vertices()) verts.push_back(m.str());
        auto& edges = j["edges"] = tspread::ordered_json::array();
        for (int a = 0; a < graph.size(); ++a)
            for (int b = a + 1; b < graph.size(); ++b)
                if (graph.adjacent(a, b)) edges.push_back({a, b});
        j["chordal"] = cert.chordal();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vertices: " << graph.size() << "\n"
                  << "edges: " << graph.edge_count() << "\n"
                  << "chordal: " << (cert.chordal() ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_sweep_cmd(const tspread::SweepConfig& cfg, const std::string& out_path, bool json) {
    auto result = tspread::run_sweep(cfg);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << tspread::report_json(result) << "\n";
    }
    if (json) {
        std::cout << tspread::report_json(result) << "\n";
    } else {
        std::cout << "instances checked: " << result.instances_checked << "\n"
                  << "agreements: " << result.agreements << "\n"
                  << "mismatches: " << result.mismatches.size() << "\n"
                  << "intro discrepancies: " << result.intro_discrepancies.size() << "\n";
        for (const auto& disc : result.intro_discrepancies)
            std::cout << "  intro says " << (disc.intro_verdict ? "Freiman" : "not Freiman")
                      << " but truth is " << (disc.truth ? "Freiman" : "not Freiman") << ": "
                      << tspread::Monomial::from_indices(disc.indices).str()
                      << " (t=" << disc.t << ")\n";
        std::cout << "case labels:";
        for (const auto& [label, count] : result.case_label_counts)
            std::cout << " " << label << "=" << count;
        std::cout << "\nelapsed: " << result.elapsed_seconds << "s\n";
    }
    return result.mismatches.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-spread principal Borel ideals: generators, sorted graphs, Freiman status"};
    app.require_subcommand(1);

    std::string u_text;
    int t = 1;
    int k = 2;
    bool json = false;
    bool dot = false;

    auto add_word_options = [&](CLI::App* cmd) {
        cmd->add_option("--u", u_text, "generator monomial, e.g. \"x3*x5\"")->required();
        cmd->add_option("--t", t, "spread parameter (>= 0)")->required();
    };

    auto* gens_cmd = app.add_subcommand("gens", "minimal generators of B_t(u)");
    add_word_options(gens_cmd);
    gens_cmd->add_flag("--json", json, "JSON output");

    auto* check_cmd = app.add_subcommand("check", "Freiman verdict by all methods (JSON)");
    add_word_options(check_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "closed-form classification (JSON)");
    add_word_options(classify_cmd);

    auto* power_cmd = app.add_subcommand("power", "number of minimal generators of B_t(u)^k");
    add_word_options(power_cmd);
    power_cmd->add_option("--k", k, "power (>= 1)")->required();
    power_cmd->add_flag("--json", json, "JSON output");

    auto* graph_cmd = app.add_subcommand("graph", "sorted graph of B_t(u)");
    add_word_options(graph_cmd);
    graph_cmd->add_flag("--dot", dot, "emit DOT text");
    graph_cmd->add_flag("--json", json, "JSON output");

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive three-method cross-validation");
    tspread::SweepConfig cfg;
    std::string max_index = "auto";
    std::string out_path;
    sweep_cmd->add_option("--t-min", cfg.t_min, "smallest t (default 1)");
    sweep_cmd->add_option("--t-max", cfg.t_max, "largest t (default 3)");
    sweep_cmd->add_option("--d-min", cfg.d_min, "smallest degree (default 1)");
    sweep_cmd->add_option("--d-max", cfg.d_max, "largest degree (default 5)");
    sweep_cmd->add_option("--max-index", max_index,
                          "bound on the last index: integer or \"auto\" = (d-1)t+6");
    sweep_cmd->add_option("--k", cfg.power_check_k,
                          "validate the mu(I^k) formula up to this power (0 disables)");
    sweep_cmd->add_option("--out", out_path, "write the JSON report to this file");
    sweep_cmd->add_flag("--json", json, "JSON report on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gens_cmd->parsed()) return run_gens(u_text, t, json);
        if (check_cmd->parsed()) return run_check(u_text, t);
        if (classify_cmd->parsed()) return run_classify(u_text, t);
        if (power_cmd->parsed()) return run_power(u_text, t, k, json);
        if (graph_cmd->parsed()) return run_graph(u_text, t, dot, json);
        if (sweep_cmd->parsed()) {
            if (max_index != "auto") cfg.max_last_index = std::stoi(max_index);
            return run_sweep_cmd(cfg, out_path, json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
