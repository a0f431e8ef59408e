#pragma once

#include <vector>

#include "cusplab/fp.hpp"
#include "cusplab/numbers.hpp"

namespace cusplab {

// Univariate integer polynomial in the parameter k. Coefficients are stored
// ascending by degree with no trailing zeros; the zero polynomial is empty.
class UPolyZ {
public:
    UPolyZ() = default;
    explicit UPolyZ(const Int& c) { if (c != 0) c_ = {c}; }
    explicit UPolyZ(long c) : UPolyZ(Int(c)) {}
    explicit UPolyZ(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

    static UPolyZ var() { return UPolyZ(std::vector<Int>{Int(0), Int(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& leading() const;
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }

    UPolyZ operator-() const;
    UPolyZ operator+(const UPolyZ& o) const;
    UPolyZ operator-(const UPolyZ& o) const;
    UPolyZ operator*(const UPolyZ& o) const;
    UPolyZ scaled(const Int& s) const;
    UPolyZ shifted(int e) const; // multiply by k^e

    bool operator==(const UPolyZ& o) const { return c_ == o.c_; }
    bool operator!=(const UPolyZ& o) const { return !(*this == o); }

    // gcd of absolute coefficient values; 0 for the zero polynomial
    Int content() const;
    UPolyZ primitive_part() const;

    Rat eval(const Rat& x) const;
    Fp eval_mod(const Fp& x) const;
    UPolyZ subst_neg() const; // k -> -k

    // exact division; throws if the division leaves a remainder
    UPolyZ divexact(const UPolyZ& d) const;

    // all rational roots, via the rational root bound on lead/constant divisors
    std::vector<Rat> rational_roots() const;

    std::string to_string(const std::string& name = "k") const;

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<Int> c_;
};

// gcd over Z[k], primitive with positive leading coefficient (content folded
// in as gcd of contents); gcd(0,0) = 0.
UPolyZ upoly_gcd(const UPolyZ& a, const UPolyZ& b);

} // namespace cusplab
