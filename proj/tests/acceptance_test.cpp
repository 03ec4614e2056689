// Acceptance suite: one timed pass/fail line per criterion, nonzero exit on
// any failure. Tolerances here are exact (the library computes over Q and
// prime fields); the probabilistic criteria fix trials = 20 and the 61-bit
// default prime.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pflab/batch.hpp"
#include "pflab/pencil.hpp"
#include "pflab/somatrix.hpp"
#include "pflab/witness.hpp"

using namespace pflab;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double limit_ms;
    bool (*run)(std::string& detail);
};

bool criterion_worked_example(std::string& detail) {
    SoMatrix x = build_nilpotent(Partition({4, 4, 3, 1}));
    if (x.size() != 12) {
        detail = "size != 12";
        return false;
    }
    Matrix<int> want(12, 12, 0);
    auto put = [&](int i, int j, int v) { want(i - 1, j - 1) = v; };
    put(1, 2, 1);
    put(2, 3, 1);
    put(3, 4, 1);
    put(5, 6, 1);
    put(5, 12, 1);
    put(6, 11, -1);
    put(8, 7, -1);
    put(9, 8, -1);
    put(10, 9, -1);
    put(12, 11, -1);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            const Poly& e = x.entries(i, j);
            int v = e.is_zero() ? 0
                                : static_cast<int>(e.leading_term().second.get_num().get_si());
            if (v != want(i, j)) {
                detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + std::to_string(v);
                return false;
            }
        }
    return true;
}

bool criterion_lego(std::string& detail) {
    LegoSet set = to_lego_set(Partition({7, 5, 2, 2}));
    std::vector<LegoBlock> want{{LegoBlock::Kind::TypeII, 7, 0},
                                {LegoBlock::Kind::TypeII, 5, 0},
                                {LegoBlock::Kind::TypeI, 2, +1},
                                {LegoBlock::Kind::TypeI, 2, -1}};
    if (set.blocks != want) {
        detail = "block list mismatch";
        return false;
    }
    if (!(set.augmented == Partition({7, 5, 2, 2, 1, 1}))) {
        detail = "augmented partition mismatch";
        return false;
    }
    return true;
}

bool criterion_classical(std::string& detail) {
    // det(g) = (-1)^N Pf(gJ)^2 exactly for 2N in {2,4,6,8}.
    for (int n = 1; n <= 4; ++n) {
        SoMatrix g = generic_g(n);
        auto [gj, sign] = antisymmetrize(g);
        Poly pf = pfaffian(gj);
        Poly det = determinant(g.entries);
        if (!(det == Poly::constant(sign) * pf * pf)) {
            detail = "det != (-1)^N Pf^2 at N = " + std::to_string(n);
            return false;
        }
    }
    // verify(P, 2m) for every special P with 2N in {2,4,6,8}.
    for (int two_n = 2; two_n <= 8; two_n += 2) {
        for (const Partition& p : enumerate_special(two_n)) {
            WitnessReport rep = verify_exact(p, p.count());
            if (!rep.pass || !rep.classical) {
                detail = p.to_string() + " j=" + std::to_string(p.count()) + ": " + rep.failure;
                return false;
            }
        }
    }
    return true;
}

bool criterion_main_exact(std::string& detail) {
    for (int two_n = 4; two_n <= 8; two_n += 2) {
        for (const Partition& p : enumerate_special(two_n)) {
            for (int j : conjecture_indices(p)) {
                WitnessReport rep = verify_exact(p, j);
                if (!rep.pass) {
                    detail = p.to_string() + " j=" + std::to_string(j) + ": " + rep.failure;
                    return false;
                }
                if (rep.b_j % 2 != 0) {
                    detail = p.to_string() + " j=" + std::to_string(j) + ": odd b_j";
                    return false;
                }
                if (rep.sqrt_observed.is_zero()) {
                    detail = p.to_string() + ": missing square root";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_main_numeric(std::string& detail) {
    PrimeField f(kDefaultPrime);
    for (int two_n : {10, 12}) {
        for (const Partition& p : enumerate_special(two_n)) {
            const auto start = std::chrono::steady_clock::now();
            for (int j : conjecture_indices(p)) {
                WitnessReport rep = verify_numeric(p, j, 20, 2024, f);
                if (!rep.pass) {
                    detail = p.to_string() + " j=" + std::to_string(j) + ": " + rep.failure;
                    return false;
                }
                if (rep.eps * rep.eps != 1) {
                    detail = p.to_string() + ": sign not pinned";
                    return false;
                }
            }
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            if (ms > 60000.0) {
                detail = p.to_string() + " exceeded 1 min (" + std::to_string(ms) + " ms)";
                return false;
            }
        }
    }
    // The worked example at j = 2 with k_2 = 8 is part of the sweep; check it
    // explicitly as well.
    WitnessReport rep = verify_numeric(Partition({4, 4, 3, 1}), 2, 20, 2024, f);
    if (!rep.pass || rep.k_j != 8) {
        detail = "[4,4,3,1] j=2: " + rep.failure;
        return false;
    }
    return true;
}

bool criterion_chi(std::string& detail) {
    for (int two_n = 2; two_n <= 8; two_n += 2) {
        for (const Partition& p : enumerate_special(two_n)) {
            Pencil pen = build_pencil(p);
            ValuationReport rep = check_valuation(pen);
            if (!rep.pass) {
                detail = "exact valuation failed for " + p.to_string();
                return false;
            }
        }
    }
    PrimeField f(kDefaultPrime);
    for (int two_n = 2; two_n <= 12; two_n += 2) {
        for (const Partition& p : enumerate_special(two_n)) {
            ValuationReport rep = check_valuation_fp(p, 20, 31337, f);
            if (!rep.pass) {
                detail = "numeric valuation failed for " + p.to_string();
                return false;
            }
        }
    }
    return true;
}

bool criterion_augmentation(std::string& detail) {
    for (const char* base : {"3,1", "2,2", "2,2,1,1"}) {
        Partition p = Partition::parse(base);
        Pencil small = build_pencil(p);
        const int n = static_cast<int>(p.half());
        Poly det_small = determinant(small.matrix());
        for (int ones = 2; p.total() + ones <= 10; ones += 2) {
            Partition big = augment(p, ones);
            Pencil large = build_pencil(big);
            const int np = static_cast<int>(big.half());
            std::map<VarId, VarId> emb;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) emb[VarId::g(i, j)] = VarId::g(i, j);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    emb[VarId::g(i, n + j)] = VarId::g(i, np + j);
                    emb[VarId::g(n + i, j)] = VarId::g(np + i, j);
                }
            std::vector<VarId> image;
            for (const auto& [from, to] : emb) image.push_back(to);
            std::sort(image.begin(), image.end());
            Matrix<Poly> specialized(large.size(), large.size());
            for (int i = 0; i < large.size(); ++i)
                for (int j = 0; j < large.size(); ++j) {
                    Poly e;
                    if (large.nil.x(i, j) != 0)
                        e += Poly::constant(large.nil.x(i, j)) * Poly::variable(VarId::s());
                    const Poly& gent = large.g.entries(i, j);
                    if (!gent.is_zero()) {
                        VarId v = gent.variables().at(0);
                        if (std::binary_search(image.begin(), image.end(), v))
                            e += Poly::variable(VarId::t()) * gent;
                    }
                    if (i == j) e += Poly::variable(VarId::lambda());
                    specialized(i, j) = e;
                }
            Poly det_large = determinant(specialized);
            Poly expect = det_small.rename(emb) * Poly::variable(VarId::lambda(), ones);
            if (!(det_large == expect)) {
                detail = std::string(base) + " + " + std::to_string(ones) +
                         " ones: determinant does not factor";
                return false;
            }
            // Coefficient restriction for every k of the small algebra.
            for (int k = 1; k <= n; ++k) {
                Poly c_small = extract_c(small, k).rename(emb);
                Poly c_large = oracle::coefficient_of(
                    det_large, 2 * k - chi(p, k), chi(p, k),
                    large.size() - 2 * k);
                if (!(c_large == c_small)) {
                    detail = std::string(base) + ": c_" + std::to_string(2 * k) +
                             " does not restrict";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_lemmas(std::string& detail) {
    // Lemma 1: single blocks contribute no s-only monomials.
    auto block_ok = [](const std::vector<int>& parts) {
        Nilpotent nil = realize_nilpotent(realize(Partition(parts)));
        const int size = nil.x.rows();
        Matrix<Poly> m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                Poly e;
                if (nil.x(i, j) != 0)
                    e += Poly::constant(nil.x(i, j)) * Poly::variable(VarId::s());
                if (i == j) e += Poly::variable(VarId::lambda());
                m(i, j) = e;
            }
        return determinant(m) == Poly::variable(VarId::lambda(), size);
    };
    for (int r = 1; r <= 5; ++r)
        if (!block_ok({r, r})) {
            detail = "Type I block r=" + std::to_string(r);
            return false;
        }
    for (int r = 2; r <= 5; ++r)
        if (!block_ok({2 * r - 1, 1})) {
            detail = "Type II block r=" + std::to_string(r);
            return false;
        }

    // Lemma 2: of the 4 s-choices of a Type II block, the 2 valid ones leave
    // the same survivor (first column, (r+1)-th row).
    for (int r = 2; r <= 4; ++r) {
        Nilpotent nil = realize_nilpotent(realize(Partition({2 * r - 1, 1})));
        const int size = nil.x.rows();
        std::vector<std::pair<int, int>> entries;
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (nil.x(i, j) != 0) entries.emplace_back(i, j);
        std::pair<int, int> row_pair[2], col_pair[2];
        int rp = 0, cp = 0;
        for (size_t u = 0; u < entries.size(); ++u)
            for (size_t v = u + 1; v < entries.size(); ++v) {
                if (entries[u].first == entries[v].first) {
                    row_pair[0] = entries[u];
                    row_pair[1] = entries[v];
                    ++rp;
                }
                if (entries[u].second == entries[v].second) {
                    col_pair[0] = entries[u];
                    col_pair[1] = entries[v];
                    ++cp;
                }
            }
        if (rp != 1 || cp != 1) {
            detail = "Type II block structure unexpected at r=" + std::to_string(r);
            return false;
        }
        std::vector<std::pair<int, int>> forced;
        for (const auto& e : entries) {
            if (e == row_pair[0] || e == row_pair[1] || e == col_pair[0] || e == col_pair[1])
                continue;
            forced.push_back(e);
        }
        std::vector<std::pair<int, int>> survivors;
        for (int pr = 0; pr < 2; ++pr)
            for (int pc = 0; pc < 2; ++pc) {
                std::vector<char> used_row(size, 0), used_col(size, 0);
                auto chosen = forced;
                chosen.push_back(row_pair[pr]);
                chosen.push_back(col_pair[pc]);
                for (const auto& e : chosen) {
                    used_row[e.first] = 1;
                    used_col[e.second] = 1;
                }
                int lambda_d = -1, spots = 0;
                for (int d = 0; d < size; ++d)
                    if (!used_row[d] && !used_col[d]) {
                        lambda_d = d;
                        ++spots;
                    }
                if (spots != 1) continue;
                int srow = -1, scol = -1;
                for (int d = 0; d < size; ++d) {
                    if (!used_row[d] && d != lambda_d) srow = d;
                    if (!used_col[d] && d != lambda_d) scol = d;
                }
                survivors.emplace_back(srow, scol);
            }
        if (survivors.size() != 2 || survivors[0] != survivors[1] ||
            survivors[0] != std::make_pair(r, 0)) {
            detail = "Lemma 2 elimination mismatch at r=" + std::to_string(r);
            return false;
        }
    }

    // Lemma 3: pairing of survivors on every exact machinery run.
    for (int two_n = 4; two_n <= 8; two_n += 2) {
        for (const Partition& p : enumerate_special(two_n)) {
            for (int j : conjecture_indices(p)) {
                if (j == p.count()) continue;
                Pencil pen = build_pencil(p);
                try {
                    residual_minor(pen.g, eliminate(pen, j));
                } catch (const PairingViolation& e) {
                    detail = p.to_string() + " j=" + std::to_string(j) + ": " + e.what();
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_polyalg(std::string& detail) {
    // 1000-case square-root round trip.
    SplitMix64 rng(777);
    std::vector<VarId> vars{VarId::s(), VarId::t(), VarId::lambda(), VarId::g(1, 1),
                            VarId::g(2, 1)};
    for (int trial = 0; trial < 1000; ++trial) {
        Poly q = oracle::random_poly(rng, vars, 5, 3, 10);
        auto r = poly_sqrt(q * q);
        if (!r || !(*r == normalize_sign(q))) {
            detail = "sqrt round trip failed at trial " + std::to_string(trial);
            return false;
        }
    }
    // Evaluation homomorphism over Q and over the default prime field.
    PrimeField f(kDefaultPrime);
    for (int trial = 0; trial < 100; ++trial) {
        Poly u = oracle::random_poly(rng, vars, 5, 3, 12);
        Poly v = oracle::random_poly(rng, vars, 5, 3, 12);
        std::map<VarId, Rational> aq;
        std::map<VarId, uint64_t> af;
        for (const auto& var : vars) {
            long val = static_cast<long>(rng.next() % 2001) - 1000;
            aq[var] = Rational(val);
            af[var] = f.from_int(val);
        }
        if (!((u * v).eval_q(aq) == u.eval_q(aq) * v.eval_q(aq))) {
            detail = "Q homomorphism failed";
            return false;
        }
        if ((u * v).eval_fp(af, f) != f.mul(u.eval_fp(af, f), v.eval_fp(af, f))) {
            detail = "F_p homomorphism failed";
            return false;
        }
    }
    // Two determinant algorithms agree on 100 random 6x6 integer matrices.
    for (int trial = 0; trial < 100; ++trial) {
        Matrix<BigInt> m(6, 6, 0);
        Matrix<Poly> mp(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                long v = static_cast<long>(rng.next() % 21) - 10;
                m(i, j) = v;
                if (v != 0) mp(i, j) = Poly::constant(v);
            }
        BigInt a = determinant_bareiss(m);
        Poly b = determinant_laplace(PolyRing{}, mp);
        if (!(b == Poly::constant(Rational(a)))) {
            detail = "determinant algorithms disagree at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1 worked example: nilpotent of [4,4,3,1] is the displayed 12x12 matrix", 1000.0,
         criterion_worked_example},
        {"2 lego fidelity: [7,5,2,2] -> (7,1),(5,1),(2,+),(2,-), augmented [7,5,2,2,1,1]", 0.0,
         criterion_lego},
        {"3 classical base case: det(g) = (-1)^N Pf(gJ)^2 and verify(P, 2m), 2N <= 8", 120000.0,
         criterion_classical},
        {"4 main theorem, exact and exhaustive, 2N in {4,6,8}", 600000.0, criterion_main_exact},
        {"5 main theorem, probabilistic, 2N in {10,12}, 20 trials", 0.0,
         criterion_main_numeric},
        {"6 chi recipe: valuation >= chi with generic equality, 2N <= 8 exact, <= 12 numeric",
         0.0, criterion_chi},
        {"7 augmentation lemma: restrictions agree exactly up to 2N' = 10", 0.0,
         criterion_augmentation},
        {"8 lemma properties: single-block dets, Type II choices, survivor pairing", 0.0,
         criterion_lemmas},
        {"9 polyalg: 1000 sqrt round trips, eval homomorphism, determinant agreement", 0.0,
         criterion_polyalg},
    };

    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && c.limit_ms > 0.0 && ms > c.limit_ms) {
            ok = false;
            detail = "over time limit";
        }
        std::printf("[%s] criterion %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.name, ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
