#include "epsub/corpus.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "epsub/generators.hpp"
#include "epsub/graph_json.hpp"
#include "epsub/verifier.hpp"

namespace epsub {

using nlohmann::json;

std::vector<CorpusInstance> parse_manifest(const std::string& text) {
    std::vector<CorpusInstance> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw MalformedInputError("manifest line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("gen") || !j.contains("pattern"))
            throw MalformedInputError("manifest line " + std::to_string(lineno) +
                                      " needs gen and pattern fields");
        out.push_back({j["gen"].get<std::string>(), j["pattern"].get<std::string>()});
    }
    return out;
}

namespace {

CorpusRow run_one(int index, const CorpusInstance& inst, const std::string& out_dir,
                  const LocalizeOptions& options) {
    CorpusRow row;
    row.instance = inst.gen_spec + " | " + inst.pattern_spec;
    try {
        Graph g = generate(inst.gen_spec);
        Graph h = generate(inst.pattern_spec);
        row.n = g.n();
        row.m = g.m();

        auto t0 = std::chrono::steady_clock::now();
        Certificate cert = localize(g, h, options);
        auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

        row.k = cert.k;
        row.z = cert.z;
        row.x_size = static_cast<int>(cert.x.size());
        row.bound_derived = to_decimal(cert.bound_derived);
        row.steps = static_cast<long long>(cert.trace.size());

        std::string cert_path =
            (std::filesystem::path(out_dir) / (std::to_string(index) + ".cert.json")).string();
        write_text_file(cert_path, certificate_to_json(h, cert));

        if (cert.status != "ok") {
            row.verify = cert.status;
            return row;
        }
        // honest round trip: verify what was written, not what is in memory
        Certificate reread = certificate_from_json(h, read_text_file(cert_path));
        row.verify = verify_certificate(g, h, reread).all_pass() ? "PASS" : "FAIL";
    } catch (const std::exception& e) {
        row.verify = std::string("error:") + e.what();
    }
    return row;
}

}  // namespace

std::vector<CorpusRow> run_corpus(const std::vector<CorpusInstance>& instances,
                                  const std::string& out_dir, const LocalizeOptions& options,
                                  int threads) {
    std::filesystem::create_directories(out_dir);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, std::max(1, static_cast<int>(instances.size())));

    std::vector<CorpusRow> rows(instances.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            rows[i] = run_one(static_cast<int>(i), instances[i], out_dir, options);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

std::string corpus_csv(const std::vector<CorpusRow>& rows) {
    std::ostringstream out;
    out << "instance,n,m,k,z,x_size,bound_derived,steps,wall_ms,verify\n";
    for (const auto& r : rows) {
        std::string verify = r.verify;
        for (char& c : verify)
            if (c == ',' || c == '\n') c = ';';
        out << '"' << r.instance << "\"," << r.n << ',' << r.m << ',' << r.k << ',' << r.z << ','
            << r.x_size << ',' << r.bound_derived << ',' << r.steps << ',' << r.wall_ms << ','
            << verify << '\n';
    }
    return out.str();
}

}  // namespace epsub
