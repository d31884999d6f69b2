#pragma once

#include <string>

#include "akinv/dsl.hpp"
#include "akinv/groebner.hpp"

namespace akinv {

struct RunOptions {
    GroebnerConfig groebner;
    unsigned default_iterative_bound = 6;
    unsigned default_pool_degree = 3;
    unsigned default_nilpotency_bound = 32;
    long member_bound = -1;  // -1: per-query default formula
};

struct ReportEntry {
    enum class Status { Pass, Fail, Error };
    size_t index = 0;           // 1-based statement index
    std::string statement;      // canonical single-line form
    Status status = Status::Pass;
    std::string detail;         // human-readable summary (includes witnesses)
    std::string data;           // machine details, a JSON object rendering
    double millis = 0;          // human output only, never serialized to JSON
};

struct Report {
    std::vector<ReportEntry> entries;
    unsigned passed = 0, failed = 0, errored = 0;

    /// 0 all pass, 1 some check failed, 2 some command errored.
    int exit_code() const;
    /// Deterministic JSON document (stable key order, no timings).
    std::string to_json(const std::string& source_name) const;
    /// Human-readable table, one row per entry, with timings.
    std::string to_table() const;
};

Report run_script(const dsl::Script& script, const RunOptions& options = {});

}  // namespace akinv
