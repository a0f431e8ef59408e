#pragma once

#include <cstdint>

#include "cusplab/numbers.hpp"

namespace cusplab {

// Prime field F_p for word-sized p. A default-constructed value is the zero
// of an unspecified field (p = 0) and adopts the modulus of its first
// arithmetic partner; mixing two different nonzero moduli is a logic error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : v), p_(p) {}
    // small nonnegative constant of a not-yet-attached field
    explicit Fp(int v) : v_(static_cast<std::uint64_t>(v)), p_(0) {
        if (v < 0) throw error("unattached F_p constant must be nonnegative");
    }

    static Fp from_int(const Int& a, std::uint64_t p) {
        Int r = a % Int(static_cast<unsigned long>(p));
        if (sgn(r) < 0) r += Int(static_cast<unsigned long>(p));
        return Fp(r.get_ui(), p);
    }
    // BadPrime when the reduced denominator vanishes mod p.
    static Fp from_rat(const Rat& q, std::uint64_t p) {
        Fp den = from_int(rat_den(q), p);
        if (den.is_zero())
            throw bad_prime_error("denominator of " + str(q) + " vanishes mod " + std::to_string(p));
        return from_int(rat_num(q), p) / den;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        std::uint64_t p = join(o);
        return Fp((v_ + o.v_) % p, p);
    }
    Fp operator-(const Fp& o) const {
        std::uint64_t p = join(o);
        return Fp((v_ + p - o.v_ % p) % p, p);
    }
    Fp operator*(const Fp& o) const {
        std::uint64_t p = join(o);
        return Fp((v_ * o.v_) % p, p);
    }
    Fp operator/(const Fp& o) const {
        std::uint64_t p = join(o);
        if (o.v_ % p == 0) throw error("division by zero in F_p");
        return *this * Fp(inverse_mod(o.v_ % p, p), p);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && (p_ == o.p_ || p_ == 0 || o.p_ == 0); }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const { return v_ < o.v_; }

    static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
        // extended Euclid on (a, p); p prime and a != 0 mod p
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(t);
    }

private:
    std::uint64_t join(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw error("mixed prime fields");
        std::uint64_t p = p_ ? p_ : o.p_;
        if (p == 0) throw error("operation on unattached F_p zeros");
        return p;
    }

    std::uint64_t v_, p_;
};

inline std::string str(const Fp& a) { return std::to_string(a.value()); }

} // namespace cusplab
