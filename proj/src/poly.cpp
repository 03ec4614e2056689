#include "pflab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pflab {

std::string var_name(const VarId& v, int half_n) {
    switch (v.tag) {
        case VarId::S: return "s";
        case VarId::T: return "t";
        case VarId::Lambda: return "l";
        case VarId::G: break;
    }
    const int r = v.row, c = v.col, n = half_n;
    std::ostringstream os;
    if (n > 0 && r <= n && c <= n)
        os << "A[" << r << "," << c << "]";
    else if (n > 0 && r <= n && c > n)
        os << "B[" << r << "," << (c - n) << "]";
    else if (n > 0 && r > n && c <= n)
        os << "C[" << (r - n) << "," << c << "]";
    else
        os << "G[" << r << "," << c << "]";
    return os.str();
}

Monomial Monomial::variable(VarId v, uint32_t e) {
    Monomial m;
    if (e > 0) m.factors_.emplace_back(v, e);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += static_cast<int>(e);
    return d;
}

uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (const auto& [v, e] : o.factors_)
        if (exponent(v) < e) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (const auto& [v, e] : factors_) {
        uint32_t d = o.exponent(v);
        if (d > e) throw Error("monomial division is not exact");
        if (e > d) r.factors_.emplace_back(v, e - d);
    }
    return r;
}

bool Monomial::all_exponents_even() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.second % 2 == 0; });
}

Monomial Monomial::half() const {
    Monomial r;
    for (const auto& [v, e] : factors_) {
        if (e % 2) throw Error("monomial is not a square");
        r.factors_.emplace_back(v, e / 2);
    }
    return r;
}

std::strong_ordering Monomial::order(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Equal degree: scan variables from the largest down; first exponent
    // difference decides.
    auto ra = a.factors_.rbegin(), rb = b.factors_.rbegin();
    while (ra != a.factors_.rend() && rb != b.factors_.rend()) {
        if (ra->first > rb->first) return std::strong_ordering::greater;
        if (rb->first > ra->first) return std::strong_ordering::less;
        if (auto c = ra->second <=> rb->second; c != 0) return c;
        ++ra;
        ++rb;
    }
    if (ra != a.factors_.rend()) return std::strong_ordering::greater;
    if (rb != b.factors_.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial::one(), c);
    return p;
}

Poly Poly::variable(VarId v, uint32_t e) {
    Poly p;
    p.terms_.emplace(Monomial::variable(v, e), Rational(1));
    return p;
}

Poly Poly::term(const Rational& c, const Monomial& m) {
    Poly p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::from_sorted_terms(std::vector<std::pair<Monomial, Rational>>&& entries) {
    Poly p;
    auto hint = p.terms_.end();
    for (auto& [m, c] : entries) {
        if (sgn(c) == 0) continue;
        hint = p.terms_.emplace_hint(hint, std::move(m), std::move(c));
        ++hint;
    }
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::pair<Monomial, Rational> Poly::leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (sgn(it->second) == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly Poly::scale(const Rational& c) const {
    if (sgn(c) == 0) return {};
    Poly r(*this);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Poly Poly::coeff_of(VarId v, uint32_t e) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != e) continue;
        r.terms_.emplace(m / Monomial::variable(v, e), c);
    }
    return r;
}

std::optional<uint32_t> Poly::valuation(VarId v) const {
    if (terms_.empty()) return std::nullopt;
    uint32_t best = UINT32_MAX;
    for (const auto& [m, c] : terms_) best = std::min(best, m.exponent(v));
    return best;
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Rational Poly::eval_q(const std::map<VarId, Rational>& assign) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = assign.find(var);
            if (it == assign.end())
                throw MissingAssignment("no value assigned to " + var_name(var));
            Rational p(1);
            for (uint32_t i = 0; i < e; ++i) p *= it->second;
            v *= p;
        }
        acc += v;
    }
    return acc;
}

uint64_t Poly::eval_fp(const std::map<VarId, uint64_t>& assign, const PrimeField& f) const {
    uint64_t acc = 0;
    const uint64_t p = f.modulus();
    for (const auto& [m, c] : terms_) {
        uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
        uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
        if (den == 0) throw Error("coefficient denominator divisible by the field modulus");
        uint64_t v = f.mul(num, f.inv(den));
        for (const auto& [var, e] : m.factors()) {
            auto it = assign.find(var);
            if (it == assign.end())
                throw MissingAssignment("no value assigned to " + var_name(var));
            v = f.mul(v, f.pow(it->second, e));
        }
        acc = f.add(acc, v);
    }
    return acc;
}

Poly Poly::rename(const std::map<VarId, VarId>& m) const {
    Poly r;
    for (const auto& [mono, c] : terms_) {
        Monomial out;
        for (const auto& [v, e] : mono.factors()) {
            auto it = m.find(v);
            out = out * Monomial::variable(it == m.end() ? v : it->second, e);
        }
        auto [slot, inserted] = r.terms_.try_emplace(std::move(out), c);
        if (!inserted) {
            slot->second += c;
            if (sgn(slot->second) == 0) r.terms_.erase(slot);
        }
    }
    return r;
}

std::string Poly::to_string(int half_n) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = abs(c);
        if (m.is_one()) {
            os << rational_str(a);
        } else {
            bool printed = false;
            if (a != 1) {
                os << rational_str(a);
                printed = true;
            }
            for (const auto& [v, e] : m.factors()) {
                if (printed) os << "*";
                os << var_name(v, half_n);
                if (e > 1) os << "^" << e;
                printed = true;
            }
        }
    }
    return os.str();
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b, bool negate) {
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Rational c = ca * cb;
            if (negate) c = -c;
            auto [it, inserted] = acc_.try_emplace(ma * mb, c);
            if (!inserted) it->second += c;
        }
    }
}

void PolyAccumulator::add(const Poly& a, bool negate) {
    for (const auto& [m, c] : a.terms()) {
        auto [it, inserted] = acc_.try_emplace(m, negate ? Rational(-c) : c);
        if (!inserted) it->second += negate ? Rational(-c) : c;
    }
}

Poly PolyAccumulator::take() {
    std::vector<std::pair<Monomial, Rational>> entries;
    entries.reserve(acc_.size());
    for (auto& [m, c] : acc_)
        if (sgn(c) != 0) entries.emplace_back(m, std::move(c));
    acc_.clear();
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
        return Monomial::order(x.first, y.first) == std::strong_ordering::less;
    });
    return Poly::from_sorted_terms(std::move(entries));
}

Poly normalize_sign(const Poly& p) {
    if (p.is_zero()) return p;
    return sgn(p.leading_term().second) < 0 ? -p : p;
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    auto [lm, lc] = p.leading_term();
    if (!lm.all_exponents_even()) return std::nullopt;
    auto root = rational_sqrt(lc);
    if (!root) return std::nullopt;

    const Monomial qlm = lm.half();
    const Rational two_lc = 2 * (*root);
    Poly q = Poly::term(*root, qlm);
    Poly r = p - q * q;
    // Each accepted step strictly lowers LT(r), so the loop terminates.
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!rm.divisible_by(qlm)) return std::nullopt;
        Monomial tm = rm / qlm;
        if (Monomial::order(tm, qlm) != std::strong_ordering::less) return std::nullopt;
        Poly tau = Poly::term(rc / two_lc, tm);
        r -= tau * (q + q + tau);
        q += tau;
    }
    return q;
}

}  // namespace pflab
