#pragma once

#include "cusplab/numbers.hpp"

namespace cusplab {

// Gaussian rationals Q(i). Conjugation is the ring involution a+bi -> a-bi.
struct GaussQ {
    Rat re, im;

    GaussQ() : re(0), im(0) {}
    GaussQ(Rat r) : re(std::move(r)), im(0) {}
    GaussQ(long r) : re(r), im(0) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussQ i() { return GaussQ(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussQ conj() const { return GaussQ(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussQ operator-() const { return GaussQ(-re, -im); }
    GaussQ operator+(const GaussQ& o) const { return GaussQ(re + o.re, im + o.im); }
    GaussQ operator-(const GaussQ& o) const { return GaussQ(re - o.re, im - o.im); }
    GaussQ operator*(const GaussQ& o) const {
        return GaussQ(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussQ operator/(const GaussQ& o) const {
        if (o.is_zero()) throw error("division by zero Gaussian rational");
        Rat n = o.norm();
        GaussQ t = *this * o.conj();
        return GaussQ(t.re / n, t.im / n);
    }
    GaussQ& operator+=(const GaussQ& o) { return *this = *this + o; }
    GaussQ& operator-=(const GaussQ& o) { return *this = *this - o; }
    GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }

    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussQ& o) const { return !(*this == o); }
};

inline std::string str(const GaussQ& z) {
    if (z.im == 0) return str(z.re);
    std::string s;
    if (z.re != 0) {
        s = str(z.re);
        if (sgn(z.im) > 0) s += "+";
    }
    if (z.im == 1) s += "i";
    else if (z.im == -1) s += "-i";
    else s += str(z.im) + "*i";
    return s;
}

// Parses "a", "bi", "a+bi", "a-bi" with rational a, b ("i", "-i" allowed).
GaussQ parse_gauss(const std::string& text);

} // namespace cusplab
