#include "epsub/graph_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "epsub/errors.hpp"

namespace epsub {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw MalformedInputError("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw MalformedInputError("graph JSON edge must be a pair of ints");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph::build(j["n"].get<int>(), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    return graph_from_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

}  // namespace epsub
