#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "cusplab/errors.hpp"

namespace cusplab {

// Arbitrary-precision scalars. GMP keeps rationals canonical (den > 0,
// gcd(num,den) = 1) as long as values are built through arithmetic or
// canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Exact quotient; caller guarantees divisibility.
inline Int int_divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int isqrt_floor(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline std::optional<Int> perfect_square_root(const Int& a) {
    if (sgn(a) < 0) return std::nullopt;
    if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
    return isqrt_floor(a);
}

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

inline std::string str(const Int& a) { return a.get_str(); }
inline std::string str(const Rat& q) { return q.get_str(); }

inline Int parse_int(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw bad_parameter_error("not an integer: '" + s + "'");
    return v;
}

// Accepts "a" or "a/b" with b > 0 after canonicalization.
inline Rat parse_rat(const std::string& s) {
    Rat v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0 || sgn(rat_den(v)) == 0)
        throw bad_parameter_error("not a rational: '" + s + "'");
    v.canonicalize();
    return v;
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace cusplab
