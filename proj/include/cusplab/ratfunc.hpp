#pragma once

#include "cusplab/upoly.hpp"

namespace cusplab {

// Element of Q(k) as a reduced fraction of integer polynomials. Canonical
// form: gcd(num, den) = 1 over Z[k] (integer content included) and the
// denominator has positive leading coefficient. Equality is representation
// equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Int& c) : num_(c), den_(1) {}
    RatFunc(const Rat& q) : num_(rat_num(q)), den_(rat_den(q)) {}
    RatFunc(UPolyZ num, UPolyZ den);
    explicit RatFunc(UPolyZ num) : num_(std::move(num)), den_(1) {}

    static RatFunc k() { return RatFunc(UPolyZ::var()); }

    const UPolyZ& num() const { return num_; }
    const UPolyZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // value of a constant element as a rational; throws if k occurs
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // ring homomorphisms out of Q(k); Pole / BadPrime on vanishing denominators
    Rat eval(const Rat& k) const;
    Fp eval_mod(const Rat& k, std::uint64_t p) const;

    RatFunc subst_neg_k() const;

    std::string to_string() const;

private:
    void normalize();
    UPolyZ num_, den_;
};

inline std::string str(const RatFunc& f) { return f.to_string(); }

} // namespace cusplab
