#include "pflab/pencil.hpp"

#include <algorithm>

namespace pflab {

Matrix<Poly> Pencil::matrix() const {
    const int n = size();
    Matrix<Poly> m(n, n);
    const Poly s = Poly::variable(VarId::s());
    const Poly t = Poly::variable(VarId::t());
    const Poly lam = Poly::variable(VarId::lambda());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly e;
            if (nil.x(i, j) != 0) e += Poly::constant(nil.x(i, j)) * s;
            if (!g.entries(i, j).is_zero()) e += t * g.entries(i, j);
            if (i == j) e += lam;
            m(i, j) = e;
        }
    }
    return m;
}

Pencil build_pencil(const Partition& p) {
    if (!is_d_partition(p) || !is_special(p)) throw NotSpecial("the pencil construction requires a special D-partition");
    Realization r = realize(p);
    Nilpotent nil = realize_nilpotent(r);
    const int n = nil.layout.half;
    return Pencil{p, std::move(nil), generic_g(n)};
}

namespace {

// Parity of the permutation moving the columns listed in `x_positions`
// (positions within the sorted subset) in front of the rest.
int merge_sign(const std::vector<int>& x_positions, int subset_size) {
    std::vector<char> is_x(subset_size, 0);
    for (int p : x_positions) is_x[p] = 1;
    long inversions = 0;
    long g_seen = 0;
    for (int p = 0; p < subset_size; ++p) {
        if (is_x[p])
            inversions += g_seen;
        else
            ++g_seen;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Poly pencil_coefficient(const Pencil& p, int s_pow, int t_pow) {
    const int n = p.size();
    const int lam_pow = n - s_pow - t_pow;
    if (s_pow < 0 || t_pow < 0 || lam_pow < 0)
        throw OutOfRange("powers must satisfy s_pow + t_pow <= 2N");
    const int ssize = s_pow + t_pow;
    if (ssize == 0) return Poly::constant(1);

    Poly acc;
    std::vector<int> subset;
    detail::first_combination(subset, ssize);
    do {
        std::vector<int> xpos;
        detail::first_combination(xpos, s_pow);
        do {
            // Rows of the expansion matrix are the chosen columns of the
            // pencil restricted to `subset` (det is transpose-invariant);
            // X-columns lead so the sparse rows prune the expansion early.
            Matrix<Poly> m(ssize, ssize);
            int row = 0;
            for (int q = 0; q < s_pow; ++q, ++row) {
                const int col = subset[xpos[q]];
                for (int i = 0; i < ssize; ++i) {
                    int v = p.nil.x(subset[i], col);
                    if (v != 0) m(row, i) = Poly::constant(v);
                }
            }
            std::vector<char> used(ssize, 0);
            for (int q = 0; q < s_pow; ++q) used[xpos[q]] = 1;
            for (int q = 0; q < ssize; ++q) {
                if (used[q]) continue;
                const int col = subset[q];
                for (int i = 0; i < ssize; ++i) m(row, i) = p.g.entries(subset[i], col);
                ++row;
            }
            Poly d = determinant_laplace(PolyRing{}, m);
            if (!d.is_zero()) {
                if (merge_sign(xpos, ssize) < 0) d = -d;
                acc += d;
            }
        } while (detail::next_combination(xpos, ssize));
    } while (detail::next_combination(subset, n));
    return acc;
}

Poly extract_c(const Pencil& p, int k) {
    if (k < 1 || 2L * k > p.original.total()) throw OutOfRange("k outside 1..N");
    const int j = chi(p.original, k);
    return pencil_coefficient(p, 2 * k - j, j);
}

ValuationReport check_valuation(const Pencil& p) {
    ValuationReport rep;
    rep.trials = 0;
    rep.pass = true;
    const int n_orig = static_cast<int>(p.original.half());
    for (int k = 1; k <= n_orig; ++k) {
        ValuationRow row;
        row.k = k;
        row.chi = chi(p.original, k);
        row.lower_bound_ok = true;
        for (int b = 0; b < row.chi; ++b) {
            if (!pencil_coefficient(p, 2 * k - b, b).is_zero()) {
                row.lower_bound_ok = false;
                break;
            }
        }
        row.achieved = !extract_c(p, k).is_zero();
        rep.pass = rep.pass && row.lower_bound_ok && row.achieved;
        rep.rows.push_back(row);
    }
    return rep;
}

FpCoeffTable pencil_coeff_table_fp(const Matrix<int>& x, const Matrix<uint64_t>& g,
                                   const PrimeField& f) {
    const int n = x.rows();
    if (g.rows() != n || g.cols() != n || x.cols() != n)
        throw InvalidInput("pencil matrices must be square and of equal size");
    const int pts = n + 1;

    // det(sX + tg + I) at every grid point; lambda = 1 is enough because the
    // determinant is jointly homogeneous of degree 2N in (s, t, lambda).
    FpRing ring(f);
    std::vector<std::vector<uint64_t>> grid(pts, std::vector<uint64_t>(pts));
    Matrix<uint64_t> m(n, n);
    for (int si = 0; si < pts; ++si) {
        const uint64_t sval = f.from_int(si);
        for (int ti = 0; ti < pts; ++ti) {
            const uint64_t tval = f.from_int(ti);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    uint64_t e = f.mul(tval, g(i, j));
                    if (x(i, j) != 0) {
                        uint64_t xs = f.mul(sval, f.from_int(x(i, j)));
                        e = f.add(e, xs);
                    }
                    if (i == j) e = f.add(e, 1);
                    m(i, j) = e;
                }
            grid[si][ti] = determinant_gauss(ring, m);
        }
    }

    std::vector<uint64_t> nodes(pts);
    for (int i = 0; i < pts; ++i) nodes[i] = f.from_int(i);

    // Interpolate in s for each t node, then across t for each s power.
    std::vector<std::vector<uint64_t>> s_coeff(pts);
    for (int ti = 0; ti < pts; ++ti) {
        std::vector<uint64_t> ys(pts);
        for (int si = 0; si < pts; ++si) ys[si] = grid[si][ti];
        s_coeff[ti] = interpolate_newton(f, nodes, ys);
    }
    FpCoeffTable table;
    table.n = n;
    table.c.assign(static_cast<size_t>(pts) * pts, 0);
    for (int a = 0; a < pts; ++a) {
        std::vector<uint64_t> ys(pts);
        for (int ti = 0; ti < pts; ++ti) ys[ti] = s_coeff[ti][a];
        std::vector<uint64_t> tc = interpolate_newton(f, nodes, ys);
        for (int b = 0; b < pts; ++b) table.c[static_cast<size_t>(a) * pts + b] = tc[b];
    }
    return table;
}

ValuationReport check_valuation_fp(const Partition& p, int trials, uint64_t seed,
                                   const PrimeField& f) {
    if (trials < 1) throw InvalidInput("at least one trial is required");
    if (f.modulus() <= 2ULL * static_cast<uint64_t>(p.total()) * static_cast<uint64_t>(trials))
        throw InvalidInput("field modulus too small for the requested confidence");
    Realization r = realize(p);
    Nilpotent nil = realize_nilpotent(r);
    const int n_orig = static_cast<int>(p.half());

    ValuationReport rep;
    rep.trials = trials;
    rep.pass = true;
    for (int k = 1; k <= n_orig; ++k) {
        ValuationRow row;
        row.k = k;
        row.chi = chi(p, k);
        row.lower_bound_ok = true;
        rep.rows.push_back(row);
    }
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(derive_seed(seed, trial));
        Matrix<uint64_t> g = sample_g_fp(nil.layout.half, f, rng);
        FpCoeffTable table = pencil_coeff_table_fp(nil.x, g, f);
        for (ValuationRow& row : rep.rows) {
            for (int b = 0; b < row.chi; ++b)
                if (table.at(2 * row.k - b, b) != 0) row.lower_bound_ok = false;
            if (table.at(2 * row.k - row.chi, row.chi) != 0) row.achieved = true;
        }
    }
    for (const ValuationRow& row : rep.rows)
        rep.pass = rep.pass && row.lower_bound_ok && row.achieved;
    return rep;
}

}  // namespace pflab
