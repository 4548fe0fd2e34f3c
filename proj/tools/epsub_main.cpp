#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "epsub/corpus.hpp"
#include "epsub/generators.hpp"
#include "epsub/graph_json.hpp"
#include "epsub/localize.hpp"
#include "epsub/verifier.hpp"

namespace {

using namespace epsub;

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty())
        std::cout << text << "\n";
    else
        write_text_file(out_file, text);
}

int cmd_detect(const std::string& graph_file, const std::string& pattern_file,
               const std::vector<VertexId>& avoid, const std::vector<VertexId>& must,
               long long max_nodes, const std::string& out_file) {
    Graph g = read_graph_file(graph_file);
    Graph h = read_graph_file(pattern_file);
    SearchBudget budget(max_nodes);
    auto emb =
        find_subdivision(g, h, VertexSet(g.n(), avoid), VertexSet(g.n(), must), &budget);
    if (!emb) {
        emit("absent", out_file);
        return 1;
    }
    emit(embedding_to_json(h, *emb), out_file);
    return 0;
}

int cmd_pack(const std::string& graph_file, const std::string& pattern_file, int cap,
             long long max_nodes, const std::string& out_file) {
    Graph g = read_graph_file(graph_file);
    Graph h = read_graph_file(pattern_file);
    SearchBudget budget(max_nodes);
    auto family = max_packing(g, h, cap, &budget);
    std::string out = "{\"count\": " + std::to_string(family.size()) + ", \"embeddings\": [";
    for (size_t i = 0; i < family.size(); ++i)
        out += (i ? ", " : "") + embedding_to_json(h, family[i]);
    out += "]}";
    emit(out, out_file);
    return 0;
}

int cmd_hit(const std::string& graph_file, const std::string& pattern_file, long long max_nodes,
            const std::string& out_file) {
    Graph g = read_graph_file(graph_file);
    Graph h = read_graph_file(pattern_file);
    SearchBudget budget(max_nodes);
    auto z = min_hitting_set(g, h, &budget);
    std::string out = "{\"size\": " + std::to_string(z.size()) + ", \"vertices\": [";
    for (size_t i = 0; i < z.size(); ++i) out += (i ? ", " : "") + std::to_string(z[i]);
    out += "]}";
    emit(out, out_file);
    return 0;
}

int cmd_localize(const std::string& graph_file, const std::string& pattern_file,
                 const std::string& out_file, const LocalizeOptions& options) {
    Graph g = read_graph_file(graph_file);
    Graph h = read_graph_file(pattern_file);
    Certificate cert = localize(g, h, options);
    write_text_file(out_file, certificate_to_json(h, cert));
    std::cout << "status=" << cert.status << " k=" << cert.k << " z=" << cert.z
              << " |X|=" << cert.x.size() << " steps=" << cert.trace.size() << "\n";
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& pattern_file,
               const std::string& cert_file) {
    Graph g = read_graph_file(graph_file);
    Graph h = read_graph_file(pattern_file);
    Certificate cert = certificate_from_json(h, read_text_file(cert_file));
    VerifyReport report = verify_certificate(g, h, cert);
    for (const auto& check : report.checks) {
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name;
        if (!check.pass && !check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_gen(const std::vector<std::string>& words, const std::string& out_file) {
    std::string spec;
    for (const auto& w : words) spec += (spec.empty() ? "" : " ") + w;
    emit(graph_to_json(generate(spec)), out_file);
    return 0;
}

int cmd_corpus(const std::string& manifest_file, const std::string& out_dir,
               const LocalizeOptions& options, int threads) {
    auto instances = parse_manifest(read_text_file(manifest_file));
    auto rows = run_corpus(instances, out_dir, options, threads);
    std::string csv = corpus_csv(rows);
    std::string csv_path = out_dir + "/summary.csv";
    write_text_file(csv_path, csv);
    std::cout << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact packing, hitting and localized hitting-set certificates "
                 "for H-subdivisions"};
    app.require_subcommand(1);

    LocalizeOptions options;
    std::string graph_file, pattern_file, cert_file, out_file, manifest_file, out_dir;
    std::vector<VertexId> avoid, must;
    std::vector<std::string> gen_words;
    int cap = 1000000;
    int threads = 0;
    long long seed = -1;

    auto add_budget_flags = [&](CLI::App* cmd, bool with_steps) {
        cmd->add_option("--max-search-nodes", options.max_search_nodes,
                        "search node budget (default 100000000)");
        if (with_steps)
            cmd->add_option("--max-steps", options.max_steps,
                            "rewrite step budget (default 100000)");
    };

    auto* detect = app.add_subcommand("detect", "find an H-subdivision");
    detect->add_option("graph", graph_file)->required();
    detect->add_option("pattern", pattern_file)->required();
    detect->add_option("--avoid", avoid, "vertices the subdivision must avoid");
    detect->add_option("--must", must, "vertices the subdivision must contain");
    detect->add_option("--out", out_file, "write result here instead of stdout");
    add_budget_flags(detect, false);

    auto* pack = app.add_subcommand("pack", "maximum disjoint H-subdivision packing");
    pack->add_option("graph", graph_file)->required();
    pack->add_option("pattern", pattern_file)->required();
    pack->add_option("--cap", cap, "report at most cap+1 members");
    pack->add_option("--out", out_file);
    add_budget_flags(pack, false);

    auto* hit = app.add_subcommand("hit", "minimum subdivision hitting set");
    hit->add_option("graph", graph_file)->required();
    hit->add_option("pattern", pattern_file)->required();
    hit->add_option("--out", out_file);
    add_budget_flags(hit, false);

    auto* loc = app.add_subcommand("localize", "emit a localized hitting-set certificate");
    loc->add_option("graph", graph_file)->required();
    loc->add_option("pattern", pattern_file)->required();
    loc->add_option("out", out_file)->required();
    add_budget_flags(loc, true);

    auto* ver = app.add_subcommand("verify", "independently re-check a certificate");
    ver->add_option("graph", graph_file)->required();
    ver->add_option("pattern", pattern_file)->required();
    ver->add_option("certificate", cert_file)->required();

    auto* gen = app.add_subcommand("gen", "generate a graph (fig1-tree | cycle n | path n | "
                                          "star n | complete n | theta a b c | gnp n p seed)");
    gen->add_option("spec", gen_words, "generator kind and parameters")->required();
    gen->add_option("--out", out_file);
    gen->add_option("--seed", seed, "seed for gnp when not given positionally");

    auto* cor = app.add_subcommand("corpus", "run localize+verify over a manifest");
    cor->add_option("manifest", manifest_file)->required();
    cor->add_option("out_dir", out_dir)->required();
    cor->add_option("--threads", threads, "worker count (default: hardware)");
    add_budget_flags(cor, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect) return cmd_detect(graph_file, pattern_file, avoid, must,
                                       options.max_search_nodes, out_file);
        if (*pack) return cmd_pack(graph_file, pattern_file, cap, options.max_search_nodes,
                                   out_file);
        if (*hit) return cmd_hit(graph_file, pattern_file, options.max_search_nodes, out_file);
        if (*loc) return cmd_localize(graph_file, pattern_file, out_file, options);
        if (*ver) return cmd_verify(graph_file, pattern_file, cert_file);
        if (*gen) {
            if (seed >= 0 && gen_words.size() == 3 && gen_words[0] == "gnp")
                gen_words.push_back(std::to_string(seed));
            return cmd_gen(gen_words, out_file);
        }
        if (*cor) return cmd_corpus(manifest_file, out_dir, options, threads);
    } catch (const epsub::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
