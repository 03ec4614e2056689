#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pflab/error.hpp"

namespace pflab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt power_of_two(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// Exact square root of a perfect-square rational; nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    const int s = sgn(q);
    if (s < 0) return std::nullopt;
    if (s == 0) return Rational(0);
    const BigInt num = q.get_num();
    const BigInt den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace pflab
