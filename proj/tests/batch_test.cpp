#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "oracle.hpp"
#include "pflab/batch.hpp"

using namespace pflab;

TEST_CASE("mode auto-selection gates on the realized size") {
    RunConfig cfg;
    CHECK(select_mode(cfg, Partition({2, 2})) == VerifyMode::Exact);
    CHECK(select_mode(cfg, Partition({4, 4})) == VerifyMode::Exact);
    // [5,3] realizes at 10 > 8.
    CHECK(select_mode(cfg, Partition({5, 3})) == VerifyMode::Numeric);
    CHECK(select_mode(cfg, Partition({4, 4, 3, 1})) == VerifyMode::Numeric);
    cfg.mode = VerifyMode::Exact;
    cfg.mode_forced = true;
    CHECK(select_mode(cfg, Partition({5, 3})) == VerifyMode::Exact);
}

TEST_CASE("run_batch over 2N = 4, exact") {
    RunConfig cfg;
    cfg.mode = VerifyMode::Exact;
    cfg.mode_forced = true;
    BatchReport rep = run_batch(cfg, {4});
    CHECK(rep.all_pass());
    CHECK(rep.failed == 0);
    // Partitions [3,1], [2,2], [1,1,1,1] contribute one index each.
    CHECK(rep.items.size() == 3);
    for (const auto& item : rep.items) CHECK(item.report.pass);
}

TEST_CASE("run_batch over 2N = 6, exact") {
    RunConfig cfg;
    cfg.mode = VerifyMode::Exact;
    cfg.mode_forced = true;
    BatchReport rep = run_batch(cfg, {6});
    CHECK(rep.all_pass());
    CHECK(rep.items.size() >= 5);
    for (const auto& item : rep.items) {
        CHECK(item.report.pass);
        CHECK(item.report.b_j % 2 == 0);
    }
}

TEST_CASE("empty batch") {
    RunConfig cfg;
    BatchReport rep = run_batch(cfg, {});
    CHECK(rep.items.empty());
    CHECK(rep.all_pass());
}

TEST_CASE("JSON output is byte-identical across runs and thread counts") {
    RunConfig cfg;
    cfg.mode = VerifyMode::Numeric;
    cfg.mode_forced = true;
    cfg.trials = 4;
    cfg.seed = 99;
    BatchReport a = run_batch(cfg, {4, 6});
    BatchReport b = run_batch(cfg, {4, 6});
    CHECK(batch_report_json(a) == batch_report_json(b));

    setenv("PFLAB_THREADS", "1", 1);
    BatchReport c = run_batch(cfg, {4, 6});
    unsetenv("PFLAB_THREADS");
    CHECK(batch_report_json(a) == batch_report_json(c));

    // Exact mode too.
    RunConfig ex;
    ex.mode = VerifyMode::Exact;
    ex.mode_forced = true;
    CHECK(batch_report_json(run_batch(ex, {4})) == batch_report_json(run_batch(ex, {4})));
}

TEST_CASE("numeric results depend on the seed deterministically") {
    RunConfig cfg;
    cfg.mode = VerifyMode::Numeric;
    cfg.mode_forced = true;
    cfg.trials = 3;
    cfg.seed = 5;
    BatchReport a = run_batch(cfg, {6});
    cfg.seed = 6;
    BatchReport b = run_batch(cfg, {6});
    CHECK(a.all_pass());
    CHECK(b.all_pass());
    // Same structure either way.
    REQUIRE(a.items.size() == b.items.size());
    for (size_t i = 0; i < a.items.size(); ++i) {
        CHECK(a.items[i].partition == b.items[i].partition);
        CHECK(a.items[i].j == b.items[i].j);
    }
}
