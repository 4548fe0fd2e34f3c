#pragma once

#include <string>
#include <vector>

#include "epsub/localize.hpp"

namespace epsub {

/// One corpus entry: a host generator spec and a pattern generator spec.
struct CorpusInstance {
    std::string gen_spec;
    std::string pattern_spec;
};

/// Manifest format: one JSON object per line,
///   {"gen": "<generator spec>", "pattern": "<generator spec>"}
/// Blank lines are ignored.
std::vector<CorpusInstance> parse_manifest(const std::string& text);

struct CorpusRow {
    std::string instance;
    int n = 0;
    int m = 0;
    int k = 0;
    int z = 0;
    int x_size = 0;
    std::string bound_derived;
    long long steps = 0;
    long long wall_ms = 0;
    std::string verify;  // PASS | FAIL | budget_exceeded | error:<message>
};

/// Runs localize then verify on every instance, fanning out to a worker pool;
/// rows come back in manifest order. Certificates are written to out_dir and
/// re-read before verification. Per-instance failures are recorded in their
/// row and never stop the run.
std::vector<CorpusRow> run_corpus(const std::vector<CorpusInstance>& instances,
                                  const std::string& out_dir, const LocalizeOptions& options,
                                  int threads = 0);

std::string corpus_csv(const std::vector<CorpusRow>& rows);

}  // namespace epsub
