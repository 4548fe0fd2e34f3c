#include "epsub/verifier.hpp"

#include "epsub/naive_oracle.hpp"
#include "epsub/pack_hit.hpp"

namespace epsub {

VerifyReport verify_certificate(const Graph& g, const Graph& h, const Certificate& cert) {
    VerifyReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    };

    bool valid = cert.l == static_cast<int>(cert.embeddings.size());
    std::string detail = valid ? "" : "l differs from the number of embeddings";
    for (size_t i = 0; valid && i < cert.embeddings.size(); ++i) {
        if (!verify_embedding(g, h, cert.embeddings[i])) {
            valid = false;
            detail = "embedding " + std::to_string(i) + " violates the subdivision conditions";
        }
    }
    add("embeddings_valid", valid, detail);

    bool disjoint = true;
    detail.clear();
    VertexSet seen(g.n());
    for (size_t i = 0; disjoint && i < cert.embeddings.size(); ++i) {
        VertexSet vs = cert.embeddings[i].vertex_set(g.n());
        if (vs.intersects(seen)) {
            disjoint = false;
            detail = "embedding " + std::to_string(i) + " shares a vertex with an earlier one";
        }
        seen |= vs;
    }
    add("pairwise_disjoint", disjoint, detail);

    VertexSet x_set(g.n());
    bool x_ok = true;
    for (VertexId v : cert.x) {
        if (v < 0 || v >= g.n()) {
            x_ok = false;
            break;
        }
        x_set.insert(v);
    }
    bool within = x_ok && x_set.is_subset_of(seen);
    add("x_within_union", within,
        within ? "" : "X contains a vertex outside the union of the embeddings");

    bool free = x_ok && naive::is_subdivision_free(g, h, x_set);
    add("deletion_free", free, free ? "" : "G minus X still contains an H-subdivision");

    LocalityBound lb = locality_bound(cert.z, h.m(), h.n(), cert.k);
    bool bound = cert.bound_derived == lb.derived &&
                 BigInt(static_cast<long long>(cert.x.size())) <= cert.bound_derived;
    add("bound_holds", bound,
        bound ? "" : "|X| exceeds the derived bound or the bound value is inconsistent");

    return report;
}

}  // namespace epsub
