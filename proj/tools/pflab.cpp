// pflab: command-line front end for the Pfaffian coefficient verifier.
//
// Exit codes: 0 all checks pass, 1 verification failure (the printed identity
// would be a counterexample), 2 invalid input.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pflab/batch.hpp"
#include "pflab/partition.hpp"
#include "pflab/pencil.hpp"
#include "pflab/somatrix.hpp"
#include "pflab/witness.hpp"

namespace {

using nlohmann::ordered_json;

std::string nilpotent_text(const pflab::Matrix<int>& x) {
    std::ostringstream os;
    for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
            if (j) os << " ";
            os << x(i, j);
        }
        os << "\n";
    }
    return os.str();
}

ordered_json nilpotent_json(const pflab::Matrix<int>& x) {
    ordered_json o;
    o["schema"] = 1;
    o["n"] = x.rows();
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (x(i, j) != 0) entries.push_back({i + 1, j + 1, x(i, j)});
    o["entries"] = entries;
    return o;
}

struct CommonOpts {
    std::string partition;
    bool json = false;
};

int run_nilpotent(const CommonOpts& opts, bool realized) {
    pflab::Partition p = pflab::Partition::parse(opts.partition);
    pflab::Matrix<int> x;
    if (realized) {
        pflab::Nilpotent nil = pflab::realize_nilpotent(pflab::realize(p));
        x = nil.x;
    } else {
        pflab::SoMatrix m = pflab::build_nilpotent(p);
        x = pflab::Matrix<int>(m.size(), m.size(), 0);
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j)
                if (!m.entries(i, j).is_zero())
                    x(i, j) = static_cast<int>(m.entries(i, j).leading_term().second.get_num().get_si());
    }
    if (opts.json)
        std::cout << nilpotent_json(x).dump() << "\n";
    else
        std::cout << nilpotent_text(x);
    return 0;
}

int run_lego(const CommonOpts& opts) {
    pflab::Partition p = pflab::Partition::parse(opts.partition);
    pflab::LegoSet set = pflab::to_lego_set(p);
    if (opts.json) {
        ordered_json o;
        o["schema"] = 1;
        o["partition"] = p.to_string();
        ordered_json blocks = ordered_json::array();
        for (const auto& b : set.blocks) {
            ordered_json bo;
            bo["type"] = b.kind == pflab::LegoBlock::Kind::TypeI ? 1 : 2;
            bo["highest"] = b.highest();
            if (b.kind == pflab::LegoBlock::Kind::TypeI) bo["sign"] = b.sign;
            bo["minor_dim"] = b.minor_dim();
            blocks.push_back(bo);
        }
        o["blocks"] = blocks;
        o["augmented"] = set.augmented.to_string();
        std::cout << o.dump() << "\n";
    } else {
        std::cout << "blocks:";
        for (const auto& b : set.blocks) std::cout << " " << b.to_string();
        std::cout << "\naugmented: " << set.augmented.to_string() << "\n";
    }
    return 0;
}

int run_enumerate(int two_n, bool json) {
    std::vector<pflab::Partition> ps = pflab::enumerate_special(two_n);
    if (json) {
        ordered_json o;
        o["schema"] = 1;
        o["two_n"] = two_n;
        ordered_json list = ordered_json::array();
        for (const auto& p : ps) list.push_back(p.to_string());
        o["partitions"] = list;
        o["count"] = ps.size();
        std::cout << o.dump() << "\n";
    } else {
        for (const auto& p : ps) std::cout << p.to_string() << "\n";
    }
    return 0;
}

int run_charpoly(const CommonOpts& opts, const std::string& mode, int only_k, int trials,
                 uint64_t seed, uint64_t prime, int exact_cap) {
    pflab::Partition p = pflab::Partition::parse(opts.partition);
    pflab::Realization r = pflab::realize(p);
    const long realized_size = r.realized.total();
    const bool exact = mode == "exact" || (mode == "auto" && realized_size <= exact_cap);
    const int n_orig = static_cast<int>(p.half());
    const int half = static_cast<int>(r.realized.half());

    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    if (exact) {
        pflab::Pencil pencil = pflab::build_pencil(p);
        for (int k = 1; k <= n_orig; ++k) {
            if (only_k > 0 && k != only_k) continue;
            pflab::Poly c = pflab::extract_c(pencil, k);
            int ch = pflab::chi(p, k);
            ordered_json row;
            row["k"] = k;
            row["chi"] = ch;
            row["c"] = c.to_string(half);
            rows.push_back(row);
            text << "k=" << k << " chi=" << ch << " c=" << c.to_string(half) << "\n";
        }
    } else {
        pflab::PrimeField f(prime);
        pflab::Nilpotent nil = pflab::realize_nilpotent(r);
        pflab::SplitMix64 rng(pflab::derive_seed(seed, 0));
        pflab::Matrix<uint64_t> g = pflab::sample_g_fp(half, f, rng);
        pflab::FpCoeffTable table = pflab::pencil_coeff_table_fp(nil.x, g, f);
        (void)trials;
        for (int k = 1; k <= n_orig; ++k) {
            if (only_k > 0 && k != only_k) continue;
            int ch = pflab::chi(p, k);
            uint64_t c = table.at(2 * k - ch, ch);
            ordered_json row;
            row["k"] = k;
            row["chi"] = ch;
            row["c"] = c;
            rows.push_back(row);
            text << "k=" << k << " chi=" << ch << " c=" << c << "\n";
        }
    }
    if (opts.json) {
        ordered_json o;
        o["schema"] = 1;
        o["partition"] = p.to_string();
        o["mode"] = exact ? "exact" : "numeric";
        if (!exact) {
            o["seed"] = seed;
            o["prime"] = prime;
        }
        o["rows"] = rows;
        std::cout << o.dump() << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

int run_sqrt(const CommonOpts& opts, int j, int witness_cap) {
    pflab::Partition p = pflab::Partition::parse(opts.partition);
    const pflab::Partition realized = pflab::realize(p).realized;
    // The classical (j = 2m) witness is the full symbolic Pfaffian with
    // (2N-1)!! terms; refuse sizes where printing it stops being sensible.
    if (j == p.count() && realized.total() > witness_cap)
        throw pflab::InvalidInput("classical witness at realized size " +
                                  std::to_string(realized.total()) + " exceeds --witness-cap " +
                                  std::to_string(witness_cap));
    pflab::WitnessPolynomial w = pflab::witness_polynomial(p, j);
    const int half = static_cast<int>(realized.half());
    if (opts.json) {
        ordered_json o;
        o["schema"] = 1;
        o["partition"] = p.to_string();
        o["j"] = j;
        o["b_j"] = w.b_j;
        o["classical"] = w.classical;
        o["witness"] = w.value.to_string(half);
        std::cout << o.dump() << "\n";
    } else {
        std::cout << w.value.to_string(half) << "\n";
    }
    return 0;
}

void print_verify_text(const pflab::WitnessReport& rep, int half) {
    std::cout << "partition " << rep.partition << "  j=" << rep.j << "  k_j=" << rep.k_j
              << "  b_j=" << rep.b_j
              << "  mode=" << (rep.mode == pflab::VerifyMode::Exact ? "exact" : "numeric")
              << (rep.classical ? "  [pfaffian case]" : "") << "  eps="
              << (rep.eps > 0 ? "+1" : (rep.eps < 0 ? "-1" : "?")) << "  "
              << (rep.pass ? "PASS" : "FAIL") << "  (" << rep.ms << " ms)\n";
    if (rep.pass && rep.mode == pflab::VerifyMode::Exact)
        std::cout << "  witness: " << pflab::normalize_sign(rep.sqrt_observed).to_string(half)
                  << "\n";
    if (!rep.pass) std::cout << "  failure: " << rep.failure << "\n";
}

int run_verify(const CommonOpts& opts, int j, bool all, const std::string& mode,
               std::vector<int> two_n_list, int trials, uint64_t seed, uint64_t prime,
               int exact_cap, bool timing) {
    pflab::RunConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.prime = prime;
    cfg.exact_size_cap = exact_cap;
    cfg.include_timing = timing;
    if (mode == "exact") {
        cfg.mode = pflab::VerifyMode::Exact;
        cfg.mode_forced = true;
    } else if (mode == "numeric") {
        cfg.mode = pflab::VerifyMode::Numeric;
        cfg.mode_forced = true;
    }

    pflab::BatchReport rep;
    if (!two_n_list.empty()) {
        rep = pflab::run_batch(cfg, two_n_list);
    } else {
        if (opts.partition.empty())
            throw pflab::InvalidInput("pass --partition or --two-n");
        pflab::Partition p = pflab::Partition::parse(opts.partition);
        if (all) {
            rep = pflab::run_batch_partitions(cfg, {p});
        } else {
            if (j <= 0) throw pflab::InvalidInput("pass --j or --all");
            const pflab::VerifyMode m = pflab::select_mode(cfg, p);
            pflab::BatchItem item{p, j, {}};
            if (m == pflab::VerifyMode::Exact) {
                item.report = pflab::verify_exact(p, j);
            } else {
                pflab::PrimeField f(cfg.prime);
                item.report = pflab::verify_numeric(p, j, cfg.trials, cfg.seed, f);
            }
            rep.config = cfg;
            rep.items.push_back(std::move(item));
            (rep.items.back().report.pass ? rep.passed : rep.failed) += 1;
        }
    }

    if (opts.json) {
        std::cout << pflab::batch_report_json(rep) << "\n";
    } else {
        for (const auto& item : rep.items) {
            const int half = static_cast<int>(pflab::realize(item.partition).realized.half());
            print_verify_text(item.report, half);
        }
        std::cout << "summary: " << rep.passed << " passed, " << rep.failed << " failed\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pflab: exact and probabilistic verification of square-root "
                 "coefficients of det(sX + tg + lambda I) over so(2N)"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string mode = "auto";
    int j = 0, only_k = 0, trials = 20, exact_cap = 8, two_n = 0;
    bool all = false, realized = false, timing = false;
    uint64_t seed = 1, prime = pflab::kDefaultPrime;
    std::vector<int> two_n_list;

    auto add_common = [&](CLI::App* cmd, bool need_partition) {
        auto* o = cmd->add_option("--partition,-p", opts.partition,
                                  "partition as comma-separated descending parts, e.g. 4,4,3,1");
        if (need_partition) o->required();
        cmd->add_flag("--json", opts.json, "emit JSON (schema 1)");
    };

    CLI::App* v = app.add_subcommand("verify", "verify the square-root identity");
    add_common(v, false);
    v->add_option("--j", j, "conjecture index j (even, p_j > p_{j+1})");
    v->add_flag("--all", all, "verify every conjecture index of the partition");
    v->add_option("--two-n", two_n_list, "batch: all special partitions of these sizes")
        ->delimiter(',');
    v->add_option("--mode", mode, "exact | numeric | auto (default auto)")
        ->check(CLI::IsMember({"exact", "numeric", "auto"}));
    v->add_option("--trials", trials, "numeric-mode trials (default 20; per-trial error <= deg/p)");
    v->add_option("--seed", seed, "numeric-mode seed (default 1)");
    v->add_option("--prime", prime, "field modulus (default 2^61-1)");
    v->add_option("--exact-cap", exact_cap, "largest realized 2N for auto exact mode (default 8)");
    v->add_flag("--timing", timing, "include ms timings in JSON (breaks byte-determinism)");

    CLI::App* s = app.add_subcommand("sqrt", "print the witness polynomial 2^{b_j/2} Pf(z~)");
    add_common(s, true);
    s->add_option("--j", j, "conjecture index")->required();
    int witness_cap = 14;
    s->add_option("--witness-cap", witness_cap,
                  "largest realized 2N for the classical (j = 2m) witness (default 14)");

    CLI::App* c = app.add_subcommand("charpoly", "pencil coefficients c_{2k} and chi values");
    add_common(c, true);
    c->add_option("--k", only_k, "restrict to one k");
    c->add_option("--mode", mode, "exact | numeric | auto")
        ->check(CLI::IsMember({"exact", "numeric", "auto"}));
    c->add_option("--trials", trials, "accepted for flag symmetry (verify uses it)");
    c->add_option("--seed", seed, "numeric-mode seed");
    c->add_option("--prime", prime, "field modulus");
    c->add_option("--exact-cap", exact_cap, "largest realized 2N for auto exact mode");

    CLI::App* n = app.add_subcommand("nilpotent", "print the nilpotent matrix of a partition");
    add_common(n, true);
    n->add_flag("--realize", realized,
                "realize odd pairs with b > 0 via their Lego blocks (larger matrix)");

    CLI::App* l = app.add_subcommand("lego", "print the Lego set and augmented partition");
    add_common(l, true);

    CLI::App* e = app.add_subcommand("enumerate", "list special D-partitions of 2N");
    e->add_option("--two-n", two_n, "the even total 2N")->required();
    e->add_flag("--json", opts.json, "emit JSON (schema 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed())
            return run_verify(opts, j, all, mode, two_n_list, trials, seed, prime, exact_cap,
                              timing);
        if (s->parsed()) return run_sqrt(opts, j, witness_cap);
        if (c->parsed()) return run_charpoly(opts, mode, only_k, trials, seed, prime, exact_cap);
        if (n->parsed()) return run_nilpotent(opts, realized);
        if (l->parsed()) return run_lego(opts);
        if (e->parsed()) return run_enumerate(two_n, opts.json);
    } catch (const pflab::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
