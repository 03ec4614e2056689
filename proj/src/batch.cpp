#include "pflab/batch.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "json.hpp"

namespace pflab {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> parts = stack;
        if (is_d_partition(parts) && is_special(parts)) out.emplace_back(std::move(parts));
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        stack.push_back(next);
        gen_partitions(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_special(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw InvalidSize("two_n must be even and >= 2");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(two_n, two_n, stack, out);
    return out;
}

VerifyMode select_mode(const RunConfig& cfg, const Partition& p) {
    if (cfg.mode_forced) return cfg.mode;
    const long realized = realize(p).realized.total();
    return realized <= cfg.exact_size_cap ? VerifyMode::Exact : VerifyMode::Numeric;
}

namespace {

int worker_count(size_t items) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("PFLAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(n)) n = static_cast<unsigned>(cap);
    }
    if (items < n) n = static_cast<unsigned>(items);
    return static_cast<int>(n == 0 ? 1 : n);
}

}  // namespace

BatchReport run_batch_partitions(const RunConfig& cfg, const std::vector<Partition>& ps) {
    BatchReport rep;
    rep.config = cfg;

    struct Task {
        Partition p;
        int j;
        VerifyMode mode;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    bool any_numeric = false;
    for (const Partition& p : ps) {
        const VerifyMode mode = select_mode(cfg, p);
        any_numeric = any_numeric || mode == VerifyMode::Numeric;
        for (int j : conjecture_indices(p))
            tasks.push_back({p, j, mode, derive_seed(cfg.seed, tasks.size())});
    }
    // Configuration errors surface here, before any worker starts.
    if (any_numeric) PrimeField validate(cfg.prime);

    std::vector<BatchItem> items(tasks.size(), BatchItem{Partition({1, 1}), 0, {}});
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            WitnessReport wr;
            try {
                if (t.mode == VerifyMode::Exact) {
                    wr = verify_exact(t.p, t.j);
                } else {
                    PrimeField f(cfg.prime);
                    wr = verify_numeric(t.p, t.j, cfg.trials, t.seed, f);
                }
            } catch (const std::exception& e) {
                wr.partition = t.p.to_string();
                wr.j = t.j;
                wr.mode = t.mode;
                wr.pass = false;
                wr.failure = e.what();
            }
            items[i] = BatchItem{t.p, t.j, std::move(wr)};
        }
    };
    const int workers = worker_count(tasks.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    rep.items = std::move(items);
    for (const BatchItem& item : rep.items)
        (item.report.pass ? rep.passed : rep.failed) += 1;
    return rep;
}

BatchReport run_batch(const RunConfig& cfg, const std::vector<int>& two_n_list) {
    std::vector<Partition> ps;
    for (int two_n : two_n_list)
        for (Partition& p : enumerate_special(two_n)) ps.push_back(std::move(p));
    return run_batch_partitions(cfg, ps);
}

namespace {

nlohmann::ordered_json witness_json_obj(const WitnessReport& rep, bool include_timing,
                                        int half_n) {
    nlohmann::ordered_json o;
    o["partition"] = rep.partition;
    o["j"] = rep.j;
    o["k_j"] = rep.k_j;
    o["b_j"] = rep.b_j;
    o["classical"] = rep.classical;
    o["mode"] = rep.mode == VerifyMode::Exact ? "exact" : "numeric";
    o["status"] = rep.pass ? "pass" : "fail";
    if (!rep.pass) o["failure"] = rep.failure;
    o["eps"] = rep.eps;
    if (rep.mode == VerifyMode::Exact) {
        o["witness"] = normalize_sign(rep.sqrt_observed).to_string(half_n);
    } else {
        o["trials"] = rep.trials;
        o["seed"] = rep.seed;
        o["prime"] = rep.prime;
    }
    if (include_timing) o["ms"] = rep.ms;
    return o;
}

}  // namespace

std::string witness_report_json(const WitnessReport& rep, bool include_timing, int half_n) {
    return witness_json_obj(rep, include_timing, half_n).dump();
}

std::string batch_report_json(const BatchReport& rep) {
    nlohmann::ordered_json o;
    o["schema"] = 1;
    o["command"] = "verify";
    nlohmann::ordered_json cfg;
    cfg["mode"] = rep.config.mode_forced
                      ? (rep.config.mode == VerifyMode::Exact ? "exact" : "numeric")
                      : "auto";
    cfg["trials"] = rep.config.trials;
    cfg["seed"] = rep.config.seed;
    cfg["prime"] = rep.config.prime;
    cfg["exact_size_cap"] = rep.config.exact_size_cap;
    o["config"] = cfg;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const BatchItem& item : rep.items) {
        const int half_n = static_cast<int>(realize(item.partition).realized.half());
        items.push_back(witness_json_obj(item.report, rep.config.include_timing, half_n));
    }
    o["items"] = items;
    nlohmann::ordered_json summary;
    summary["total"] = rep.items.size();
    summary["passed"] = rep.passed;
    summary["failed"] = rep.failed;
    o["summary"] = summary;
    return o.dump();
}

}  // namespace pflab
