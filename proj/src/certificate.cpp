#include "epsub/certificate.hpp"

#include "json_detail.hpp"

#include "epsub/errors.hpp"

namespace epsub {

using nlohmann::json;

std::string step_kind_name(StepRecord::Kind kind) {
    switch (kind) {
        case StepRecord::Kind::Init: return "init";
        case StepRecord::Kind::TypeI: return "type_i";
        case StepRecord::Kind::TypeII: return "type_ii";
        case StepRecord::Kind::TypeIII: return "type_iii";
        case StepRecord::Kind::PruneY: return "prune_y";
    }
    return "?";
}

namespace {

StepRecord::Kind kind_from_name(const std::string& name) {
    if (name == "init") return StepRecord::Kind::Init;
    if (name == "type_i") return StepRecord::Kind::TypeI;
    if (name == "type_ii") return StepRecord::Kind::TypeII;
    if (name == "type_iii") return StepRecord::Kind::TypeIII;
    if (name == "prune_y") return StepRecord::Kind::PruneY;
    throw MalformedInputError("unknown step kind: " + name);
}

json step_obj(const StepRecord& rec) {
    json j;
    j["kind"] = step_kind_name(rec.kind);
    j["y_index"] = rec.y_index;
    j["path"] = rec.path;
    j["added_x"] = rec.added_x;
    j["score_before"] = to_decimal(rec.score_before);
    j["score_after"] = to_decimal(rec.score_after);
    j["N"] = rec.n_vector;
    return j;
}

StepRecord step_from_obj(const json& j) {
    StepRecord rec;
    rec.kind = kind_from_name(j.at("kind").get<std::string>());
    rec.y_index = j.at("y_index").get<int>();
    rec.path = j.at("path").get<std::vector<VertexId>>();
    rec.added_x = j.at("added_x").get<VertexId>();
    rec.score_before = bigint_from_decimal(j.at("score_before").get<std::string>());
    rec.score_after = bigint_from_decimal(j.at("score_after").get<std::string>());
    rec.n_vector = j.at("N").get<std::vector<long long>>();
    return rec;
}

}  // namespace

std::string certificate_to_json(const Graph& h, const Certificate& cert) {
    json j;
    j["k"] = cert.k;
    j["l"] = cert.l;
    j["z"] = cert.z;
    j["embeddings"] = json::array();
    for (const auto& emb : cert.embeddings) j["embeddings"].push_back(detail::embedding_obj(h, emb));
    j["X"] = cert.x;
    j["bound_stated"] = to_decimal(cert.bound_stated);
    j["bound_derived"] = to_decimal(cert.bound_derived);
    j["trace"] = json::array();
    for (const auto& rec : cert.trace) j["trace"].push_back(step_obj(rec));
    j["status"] = cert.status;
    j["warnings"] = cert.warnings;
    return j.dump(2);
}

Certificate certificate_from_json(const Graph& h, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad certificate JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.k = j.at("k").get<int>();
        cert.l = j.at("l").get<int>();
        cert.z = j.at("z").get<int>();
        for (const auto& e : j.at("embeddings"))
            cert.embeddings.push_back(detail::embedding_from_obj(h, e));
        cert.x = j.at("X").get<std::vector<VertexId>>();
        cert.bound_stated = bigint_from_decimal(j.at("bound_stated").get<std::string>());
        cert.bound_derived = bigint_from_decimal(j.at("bound_derived").get<std::string>());
        for (const auto& r : j.at("trace")) cert.trace.push_back(step_from_obj(r));
        cert.status = j.at("status").get<std::string>();
        if (j.contains("warnings")) cert.warnings = j["warnings"].get<std::vector<std::string>>();
        return cert;
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad certificate JSON: ") + e.what());
    }
}

}  // namespace epsub
