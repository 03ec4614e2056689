#include "pflab/witness.hpp"

#include <algorithm>
#include <chrono>

namespace pflab {

namespace {

void require_conjecture_index(const Partition& p, int j) {
    if (j < 2 || j % 2 != 0 || j > p.count() || p.part(j) <= p.part(j + 1))
        throw NotAConjectureIndex("j must be even with p_j > p_{j+1}");
}

int type_ii_among(const std::vector<LegoBlock>& blocks, int count) {
    int b = 0;
    for (int i = 0; i < count; ++i)
        if (blocks[i].kind == LegoBlock::Kind::TypeII) ++b;
    return b;
}

}  // namespace

std::vector<LegoBlock> greedy_select(const LegoSet& set, int j) {
    require_conjecture_index(set.original, j);
    std::vector<LegoBlock> chosen(set.blocks.begin(), set.blocks.begin() + j);
    long minor_sum = 0;
    for (const LegoBlock& b : chosen) minor_sum += b.minor_dim();
    const long k_j = PartialSumTable::from(set.original).k[j];
    if (minor_sum - type_ii_among(chosen, j) != k_j)
        throw Error("counting identity sum(s_beta) - b_j = k_j failed");
    return chosen;
}

Elimination eliminate(const Pencil& p, int j) {
    require_conjecture_index(p.original, j);
    const auto& entries = p.nil.layout.entries;
    const int half = p.half();
    if (j > static_cast<int>(entries.size()))
        throw Error("elimination does not apply: fewer realized blocks than j (Pfaffian case)");
    for (int i = 0; i < j; ++i)
        if (entries[i].block.highest() != p.original.part(i + 1))
            throw Error("elimination does not apply: tapped blocks do not cover the first j parts");

    Elimination elim;
    elim.j = j;
    for (int i = 0; i < j; ++i) {
        const auto& e = entries[i];
        Elimination::BlockElim be;
        be.block = e.block;
        const int o = e.offset;
        if (e.block.kind == LegoBlock::Kind::TypeI) {
            const int r = e.block.top;
            if (e.block.sign > 0) {
                // s on the superdiagonal of the positive minor.
                for (int k = 0; k < r - 1; ++k) {
                    be.elim_rows.push_back(o + k);
                    be.elim_cols.push_back(o + k + 1);
                }
                be.surv_row = o + r - 1;
                be.surv_col = o;
            } else {
                // s on the subdiagonal of the negative minor.
                for (int k = 0; k < r - 1; ++k) {
                    be.elim_rows.push_back(half + o + k + 1);
                    be.elim_cols.push_back(half + o + k);
                }
                be.surv_row = half + o;
                be.surv_col = half + o + r - 1;
            }
        } else {
            // Canonical valid choice: the full top chain, the bottom chain
            // short of its last element, and the second X^+ entry. Both valid
            // choices consume the same rows and columns overall and leave the
            // first column and (r+1)-th local row.
            const int r = e.block.half_width();
            if (r < 2)
                throw Error("a (1,1) Type II block cannot be tapped (Pfaffian case)");
            for (int k = 1; k <= r - 1; ++k) {  // top chain rows 1..r-1
                be.elim_rows.push_back(o + k - 1);
                be.elim_cols.push_back(o + k);
            }
            for (int k = 1; k <= r - 2; ++k) {  // bottom chain rows r+2..2r-1 local
                be.elim_rows.push_back(half + o + k);
                be.elim_cols.push_back(half + o + k - 1);
            }
            be.elim_rows.push_back(o + r - 1);        // X^+ second entry, local (r, 2r-1)
            be.elim_cols.push_back(half + o + r - 2);
            be.surv_row = half + o;  // local row r+1
            be.surv_col = o;         // local column 1
        }
        std::sort(be.elim_rows.begin(), be.elim_rows.end());
        std::sort(be.elim_cols.begin(), be.elim_cols.end());
        elim.surviving_rows.push_back(be.surv_row);
        elim.surviving_cols.push_back(be.surv_col);
        elim.blocks.push_back(std::move(be));
    }
    std::sort(elim.surviving_rows.begin(), elim.surviving_rows.end());
    std::sort(elim.surviving_cols.begin(), elim.surviving_cols.end());

    const long k_j = PartialSumTable::from(p.original).k[j];
    long s_count = 0;
    for (const auto& be : elim.blocks) s_count += static_cast<long>(be.elim_rows.size());
    if (s_count != k_j - j) throw Error("eliminated row count differs from 2k - j");
    return elim;
}

ResidualMinor residual_minor(const SoMatrix& g, const Elimination& elim) {
    const int half = g.half;
    ResidualMinor rm;
    rm.rows = elim.surviving_rows;
    rm.cols = elim.surviving_cols;
    const int j = static_cast<int>(rm.rows.size());
    if (static_cast<int>(rm.cols.size()) != j) throw PairingViolation("row/column count mismatch");

    // Lemma 3 pairing: the column partner of a surviving row i is i -+ N.
    auto partner = [&](int i) { return i > half ? i - half : i + half; };
    for (int r : rm.rows) {
        if (!std::binary_search(rm.cols.begin(), rm.cols.end(), partner(r)))
            throw PairingViolation("surviving rows and columns do not pair under i <-> i+-N");
    }

    rm.z = Matrix<Poly>(j, j);
    rm.z_antisym = Matrix<Poly>(j, j);
    for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) {
            rm.z(a, b) = g.entries(rm.rows[a] - 1, rm.cols[b] - 1);
            rm.z_antisym(a, b) = g.entries(rm.rows[a] - 1, partner(rm.rows[b]) - 1);
        }

    // Sign of the column permutation sorted-cols -> paired-cols.
    std::vector<int> perm(j);
    for (int b = 0; b < j; ++b) {
        int target = partner(rm.rows[b]);
        perm[b] = static_cast<int>(
            std::lower_bound(rm.cols.begin(), rm.cols.end(), target) - rm.cols.begin());
    }
    int sign = 1;
    for (int a = 0; a < j; ++a)
        for (int b = a + 1; b < j; ++b)
            if (perm[a] > perm[b]) sign = -sign;
    rm.col_perm_sign = sign;

    for (int a = 0; a < j; ++a)
        for (int b = 0; b <= a; ++b)
            if (!(rm.z_antisym(a, b) + rm.z_antisym(b, a)).is_zero())
                throw PairingViolation("paired residual minor is not antisymmetric");
    return rm;
}

Poly witness_sqrt(const ResidualMinor& z, int b_j) {
    if (b_j < 0 || b_j % 2 != 0)
        throw OddTypeIICount("b_j must be even; an odd Type II count falsifies the construction");
    Poly pf = pfaffian(z.z_antisym);
    return normalize_sign(Poly::constant(Rational(power_of_two(b_j / 2))) * pf);
}

namespace {

Elimination full_survival(int half) {
    Elimination elim;
    elim.j = 2 * half;
    for (int i = 1; i <= 2 * half; ++i) {
        elim.surviving_rows.push_back(i);
        elim.surviving_cols.push_back(i);
    }
    return elim;
}

struct Route {
    bool classical = false;
    int b_j = 0;
    long k_j = 0;
    Elimination elim;
};

Route plan_route(const Pencil& pencil, int j) {
    require_conjecture_index(pencil.original, j);
    Route route;
    route.k_j = PartialSumTable::from(pencil.original).k[j];
    if (j == pencil.original.count()) {
        // j = 2m: the classical Pfaffian case. Nothing is tapped, the whole
        // of g survives, and the coefficient checked is det(g).
        route.classical = true;
        route.b_j = 0;
        route.elim = full_survival(pencil.half());
    } else {
        route.elim = eliminate(pencil, j);
        std::vector<LegoBlock> tapped;
        for (const auto& be : route.elim.blocks) tapped.push_back(be.block);
        route.b_j = type_ii_among(tapped, j);
    }
    return route;
}

}  // namespace

WitnessPolynomial witness_polynomial(const Partition& p, int j) {
    Pencil pencil = build_pencil(p);
    Route route = plan_route(pencil, j);
    ResidualMinor rm = residual_minor(pencil.g, route.elim);
    return {witness_sqrt(rm, route.b_j), route.b_j, route.classical};
}

WitnessReport verify_exact(const Partition& p, int j) {
    const auto start = std::chrono::steady_clock::now();
    Pencil pencil = build_pencil(p);
    Route route = plan_route(pencil, j);

    WitnessReport rep;
    rep.partition = p.to_string();
    rep.j = j;
    rep.k_j = route.k_j;
    rep.b_j = route.b_j;
    rep.classical = route.classical;
    rep.mode = VerifyMode::Exact;
    rep.surviving_rows = route.elim.surviving_rows;
    rep.surviving_cols = route.elim.surviving_cols;

    auto fail = [&](const std::string& why) {
        rep.pass = false;
        rep.failure = why;
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
        return rep;
    };

    ResidualMinor rm;
    try {
        rm = residual_minor(pencil.g, route.elim);
    } catch (const PairingViolation& e) {
        return fail(e.what());
    }

    rep.observed = route.classical ? determinant(pencil.g.entries)
                                   : pencil_coefficient(pencil, static_cast<int>(route.k_j) - j, j);
    // On the classical route z is g itself, so det(z) is the observed
    // determinant; recomputing it would double the cost for no information.
    rep.det_z = route.classical ? rep.observed : determinant(rm.z);
    rep.pfaffian_z = pfaffian(rm.z_antisym);

    Poly w;
    try {
        w = witness_sqrt(rm, route.b_j);
    } catch (const OddTypeIICount& e) {
        return fail(e.what());
    }
    rep.predicted = w * w;

    if (rep.observed == rep.predicted)
        rep.eps = 1;
    else if (rep.observed == -rep.predicted)
        rep.eps = -1;
    else
        return fail("observed coefficient is not +-2^{b_j} Pf(z~)^2");

    // Independent square certificate.
    auto sq = poly_sqrt(rep.eps > 0 ? rep.observed : -rep.observed);
    if (!sq) return fail("poly_sqrt reports eps * c_{k_j} is not a perfect square");
    rep.sqrt_observed = *sq;
    if (!(rep.sqrt_observed == w || rep.sqrt_observed == -w))
        return fail("poly_sqrt root differs from the Pfaffian witness");

    // det route: the paper's +-2^{b_j} det(z) form, checked independently of
    // the Pfaffian expansion.
    const Poly via_det = Poly::constant(Rational(power_of_two(route.b_j))) * rep.det_z;
    if (!(rep.observed == via_det || rep.observed == -via_det))
        return fail("observed coefficient is not +-2^{b_j} det(z)");

    rep.pass = true;
    rep.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

WitnessReport verify_numeric(const Partition& p, int j, int trials, uint64_t seed,
                             const PrimeField& f) {
    const auto start = std::chrono::steady_clock::now();
    if (trials < 1) throw InvalidInput("at least one trial is required");
    if (f.modulus() <= 2ULL * static_cast<uint64_t>(p.total()) * static_cast<uint64_t>(trials))
        throw InvalidInput("field modulus too small for the requested confidence");

    Realization r = realize(p);
    Nilpotent nil = realize_nilpotent(r);
    const int half = nil.layout.half;
    Pencil pencil{p, std::move(nil), generic_g(half)};
    Route route = plan_route(pencil, j);

    WitnessReport rep;
    rep.partition = p.to_string();
    rep.j = j;
    rep.k_j = route.k_j;
    rep.b_j = route.b_j;
    rep.classical = route.classical;
    rep.mode = VerifyMode::Numeric;
    rep.trials = trials;
    rep.seed = seed;
    rep.prime = f.modulus();
    rep.surviving_rows = route.elim.surviving_rows;
    rep.surviving_cols = route.elim.surviving_cols;

    auto fail = [&](const std::string& why) {
        rep.pass = false;
        rep.failure = why;
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
        return rep;
    };

    if (route.b_j % 2 != 0) return fail("b_j is odd");
    const int jj = static_cast<int>(route.elim.surviving_rows.size());
    auto partner = [&](int i) { return i > half ? i - half : i + half; };
    for (int row : route.elim.surviving_rows) {
        if (!std::binary_search(route.elim.surviving_cols.begin(),
                                route.elim.surviving_cols.end(), partner(row)))
            return fail("surviving rows and columns do not pair under i <-> i+-N");
    }

    FpRing ring(f);
    const uint64_t two_pow = f.pow(2, static_cast<uint64_t>(route.b_j));
    bool plus_ok = true, minus_ok = true, pinned = false;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, trial));
        Matrix<uint64_t> g = sample_g_fp(half, f, rng);
        FpCoeffTable table = pencil_coeff_table_fp(pencil.nil.x, g, f);
        const uint64_t observed =
            route.classical ? table.at(0, 2 * half)
                            : table.at(static_cast<int>(route.k_j) - j, j);

        Matrix<uint64_t> z(jj, jj);
        for (int a = 0; a < jj; ++a)
            for (int b = 0; b < jj; ++b)
                z(a, b) = g(route.elim.surviving_rows[a] - 1,
                            partner(route.elim.surviving_rows[b]) - 1);
        const uint64_t pf = pfaffian_gauss(ring, z);
        const uint64_t w2 = f.mul(two_pow, f.mul(pf, pf));

        if (observed != w2) plus_ok = false;
        if (observed != f.neg(w2)) minus_ok = false;
        if (w2 != 0) pinned = true;
        if (!plus_ok && !minus_ok)
            return fail("trial " + std::to_string(trial) +
                        ": observed != +-2^{b_j} Pf(z~)^2 over the sample field");
    }
    if (!pinned) return fail("witness vanished in every trial; sign not pinned");
    rep.eps = plus_ok ? 1 : -1;
    rep.pass = true;
    rep.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace pflab
