#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pflab/witness.hpp"

namespace pflab {

/// All special D-partitions of two_n, lexicographically descending.
std::vector<Partition> enumerate_special(int two_n);

struct RunConfig {
    VerifyMode mode = VerifyMode::Exact;
    bool mode_forced = false;  // false: auto-select by exact_size_cap
    int trials = 20;
    uint64_t seed = 1;
    uint64_t prime = kDefaultPrime;
    int exact_size_cap = 8;  // realized sizes above this auto-select numeric
    bool include_timing = false;
};

struct BatchItem {
    Partition partition;
    int j = 0;
    WitnessReport report;
};

struct BatchReport {
    RunConfig config;
    std::vector<BatchItem> items;
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

/// Mode actually used for one partition under the config (auto gating on the
/// realized pencil size).
VerifyMode select_mode(const RunConfig& cfg, const Partition& p);

/// Runs verify on every (special partition, conjecture index) pair of every
/// listed size. Items are dispatched to a worker pool capped by the
/// PFLAB_THREADS environment variable; the report keeps input order.
BatchReport run_batch(const RunConfig& cfg, const std::vector<int>& two_n_list);

/// Same driver for an explicit partition list.
BatchReport run_batch_partitions(const RunConfig& cfg, const std::vector<Partition>& ps);

/// Canonical JSON renderings (schema 1); byte-identical for identical
/// (config, inputs) unless cfg.include_timing is set.
std::string batch_report_json(const BatchReport& rep);
std::string witness_report_json(const WitnessReport& rep, bool include_timing, int half_n);

}  // namespace pflab
