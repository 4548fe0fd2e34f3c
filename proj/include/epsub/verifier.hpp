#pragma once

#include <string>
#include <vector>

#include "epsub/certificate.hpp"

namespace epsub {

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Independent re-derivation of the certificate's claims:
///   embeddings_valid, pairwise_disjoint, x_within_union, deletion_free,
///   bound_holds.
/// Subdivision-freeness is decided by the naive enumerator only; no code is
/// shared with the optimized search.
VerifyReport verify_certificate(const Graph& g, const Graph& h, const Certificate& cert);

}  // namespace epsub
