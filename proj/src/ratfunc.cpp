#include "cusplab/ratfunc.hpp"

namespace cusplab {

RatFunc::RatFunc(UPolyZ num, UPolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw degenerate_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPolyZ(1);
        return;
    }
    UPolyZ g = upoly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (sgn(den_.leading()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw error("rational function is not constant: " + to_string());
    Rat v(num_.coeff(0), den_.coeff(0));
    v.canonicalize();
    return v;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::eval(const Rat& k) const {
    Rat d = den_.eval(k);
    if (d == 0)
        throw pole_error("pole of " + to_string() + " at k=" + str(k));
    return num_.eval(k) / d;
}

Fp RatFunc::eval_mod(const Rat& k, std::uint64_t p) const {
    if (!is_prime_u64(p)) throw bad_prime_error(std::to_string(p) + " is not prime");
    Fp kp = Fp::from_rat(k, p);
    Fp d = den_.eval_mod(kp);
    if (d.is_zero())
        throw bad_prime_error("denominator of " + to_string() + " vanishes at k=" + str(k) +
                              " mod " + std::to_string(p));
    return num_.eval_mod(kp) / d;
}

RatFunc RatFunc::subst_neg_k() const {
    return RatFunc(num_.subst_neg(), den_.subst_neg());
}

std::string RatFunc::to_string() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace cusplab
