#include "cusplab/upoly.hpp"

#include <algorithm>
#include <set>

namespace cusplab {

const Int& UPolyZ::leading() const {
    if (c_.empty()) throw error("leading coefficient of zero polynomial");
    return c_.back();
}

UPolyZ UPolyZ::operator-() const {
    UPolyZ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPolyZ UPolyZ::operator+(const UPolyZ& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPolyZ(std::move(r));
}

UPolyZ UPolyZ::operator-(const UPolyZ& o) const { return *this + (-o); }

UPolyZ UPolyZ::operator*(const UPolyZ& o) const {
    if (is_zero() || o.is_zero()) return UPolyZ();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UPolyZ(std::move(r));
}

UPolyZ UPolyZ::scaled(const Int& s) const {
    if (s == 0) return UPolyZ();
    UPolyZ r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPolyZ UPolyZ::shifted(int e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Int> r(c_.size() + static_cast<std::size_t>(e), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
    return UPolyZ(std::move(r));
}

Int UPolyZ::content() const {
    Int g(0);
    for (const auto& c : c_) g = int_gcd(g, c);
    return g;
}

UPolyZ UPolyZ::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    UPolyZ r = *this;
    for (auto& c : r.c_) c = int_divexact(c, g);
    return r;
}

Rat UPolyZ::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Fp UPolyZ::eval_mod(const Fp& x) const {
    Fp acc(0, x.modulus());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Fp::from_int(*it, x.modulus());
    return acc;
}

UPolyZ UPolyZ::subst_neg() const {
    UPolyZ r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UPolyZ UPolyZ::divexact(const UPolyZ& d) const {
    if (d.is_zero()) throw error("polynomial division by zero");
    if (is_zero()) return UPolyZ();
    if (degree() < d.degree()) throw error("inexact polynomial division");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - d.c_.size() + 1, Int(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Int top = rem[i + d.degree()];
        if (top == 0) continue;
        if (top % d.leading() != 0) throw error("inexact polynomial division");
        Int q = int_divexact(top, d.leading());
        quot[i] = q;
        for (int j = 0; j <= d.degree(); ++j)
            rem[i + j] -= q * d.c_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw error("inexact polynomial division");
    return UPolyZ(std::move(quot));
}

std::vector<Rat> UPolyZ::rational_roots() const {
    std::vector<Rat> roots;
    if (is_zero()) return roots;
    // strip the k^m factor first
    std::size_t low = 0;
    while (low < c_.size() && c_[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    std::vector<Int> cs(c_.begin() + static_cast<long>(low), c_.end());
    if (cs.size() <= 1) return roots;
    UPolyZ f{std::vector<Int>(cs)};
    Int a0 = cs.front(), an = cs.back();
    auto divisors = [](Int n) {
        std::vector<Int> ds;
        n = abs(n);
        for (Int d(1); d * d <= n; ++d)
            if (n % d == 0) { ds.push_back(d); ds.push_back(int_divexact(n, d)); }
        return ds;
    };
    std::set<Rat> found;
    for (const Int& p : divisors(a0))
        for (const Int& q : divisors(an))
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (f.eval(cand) == 0) found.insert(cand);
            }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string UPolyZ::to_string(const std::string& name) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Int c = coeff(i);
        if (c == 0) continue;
        if (!s.empty()) s += (sgn(c) > 0) ? "+" : "-";
        else if (sgn(c) < 0) s += "-";
        Int a = abs(c);
        if (i == 0) s += str(a);
        else {
            if (a != 1) s += str(a) + "*";
            s += name;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UPolyZ upoly_gcd(const UPolyZ& a, const UPolyZ& b) {
    if (a.is_zero() && b.is_zero()) return UPolyZ();
    if (a.is_zero()) return sgn(b.leading()) < 0 ? -b : b;
    if (b.is_zero()) return sgn(a.leading()) < 0 ? -a : a;
    Int cont = int_gcd(a.content(), b.content());
    // primitive PRS
    UPolyZ r0 = a.primitive_part(), r1 = b.primitive_part();
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        // pseudo-remainder of r0 by r1
        int d = r0.degree() - r1.degree();
        UPolyZ rem = r0.scaled(r1.leading() * r1.leading());
        // one pseudo-division pass is enough degree by degree
        while (!rem.is_zero() && rem.degree() >= r1.degree()) {
            int e = rem.degree() - r1.degree();
            Int lc = rem.leading();
            if (lc % r1.leading() != 0) {
                rem = rem.scaled(r1.leading());
                lc = rem.leading();
            }
            rem = rem - r1.scaled(int_divexact(lc, r1.leading())).shifted(e);
        }
        (void)d;
        r0 = r1;
        r1 = rem.is_zero() ? rem : rem.primitive_part();
    }
    UPolyZ g = r0.primitive_part().scaled(cont);
    if (sgn(g.leading()) < 0) g = -g;
    return g;
}

} // namespace cusplab
