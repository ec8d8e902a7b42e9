#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liekit {

/// Exact arbitrary-precision rational, the coefficient field of every
/// computation in this library. Values are kept in lowest terms with a
/// positive denominator; arithmetic never rounds.
using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// num/den in lowest terms. Throws on a zero denominator.
inline Scalar frac(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Scalar q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Scalar frac(long num, long den) { return frac(Integer(num), Integer(den)); }

/// t^e for integer e (negative e inverts; 0^negative throws).
inline Scalar pow_int(const Scalar& t, long e) {
    if (e == 0) return Scalar(1);
    if (is_zero(t)) {
        if (e < 0) throw std::domain_error("zero raised to a negative power");
        return Scalar(0);
    }
    Scalar base = e > 0 ? t : Scalar(1) / t;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-(e + 1)) + 1ul;
    Scalar out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den_mpz_t(), k);
    return out;  // base canonical => powers share no factor
}

/// Combined bit length of numerator and denominator; the pivoting heuristic
/// in row reduction prefers small values of this.
inline std::size_t bit_length(const Scalar& s) {
    return mpz_sizeinbase(s.get_num_mpz_t(), 2) + mpz_sizeinbase(s.get_den_mpz_t(), 2);
}

inline Integer floor_int(const Scalar& s) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
}

inline Integer ceil_int(const Scalar& s) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Scalar& s) { return mpz_cmp_ui(s.get_den_mpz_t(), 1) == 0; }

/// "p" or "p/q", canonical.
inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Strict parse of a signed rational literal: "p" or "p/q" (q != 0).
/// Throws std::invalid_argument on anything else.
inline Scalar parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    auto read_int = [&]() -> Integer {
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) fail();
        Integer magnitude(std::string(text.substr(digits, pos - digits)), 10);
        return negative ? Integer(-magnitude) : magnitude;
    };
    Integer num = read_int();
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int();
        if (sgn(den) == 0) fail();
    }
    if (pos != text.size()) fail();
    return frac(std::move(num), std::move(den));
}

}  // namespace liekit
