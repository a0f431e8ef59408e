#pragma once

#include <map>
#include <optional>

#include "cusplab/fp.hpp"
#include "cusplab/gaussian.hpp"
#include "cusplab/numbers.hpp"
#include "cusplab/ratfunc.hpp"
#include "cusplab/registry.hpp"

namespace cusplab {

using Expo = std::vector<int>;

// Graded lexicographic, leading term first: higher total degree wins, ties
// broken by the lexicographically larger exponent vector.
struct GradedLexBefore {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

namespace poly_detail {
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Fp& c) { return c.is_zero(); }
inline bool coeff_is_zero(const GaussQ& c) { return c.is_zero(); }
} // namespace poly_detail

// Sparse multivariate polynomial over an exact coefficient domain. The term
// map is canonical: no zero coefficients, graded-lex order.
template <typename C>
class MultiPoly {
public:
    using TermMap = std::map<Expo, C, GradedLexBefore>;

    MultiPoly() : reg_(nullptr) {}
    explicit MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {}
    // registry-less zero, so Mat<MultiPoly<C>> and other generic code can
    // spell the additive identity as T(0)
    explicit MultiPoly(int zero_literal) : reg_(nullptr) {
        if (zero_literal != 0) throw error("only 0 can be registry-less");
    }

    static MultiPoly constant(RegistryPtr reg, const C& c) {
        MultiPoly p(std::move(reg));
        if (!poly_detail::coeff_is_zero(c)) p.t_[Expo(p.reg_->arity(), 0)] = c;
        return p;
    }
    static MultiPoly variable(RegistryPtr reg, const std::string& name) {
        MultiPoly p(reg);
        Expo e(reg->arity(), 0);
        e[reg->index_of(name)] = 1;
        p.t_[e] = C(1);
        return p;
    }
    static MultiPoly term(RegistryPtr reg, const C& c, Expo e) {
        MultiPoly p(reg);
        if (static_cast<int>(e.size()) != reg->arity()) throw error("exponent arity mismatch");
        if (!poly_detail::coeff_is_zero(c)) p.t_[std::move(e)] = c;
        return p;
    }

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int term_count() const { return static_cast<int>(t_.size()); }

    C coefficient_of(const Expo& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C(0) : it->second;
    }
    C constant_term() const { return coefficient_of(Expo(reg_->arity(), 0)); }

    long total_degree() const { // -1 for the zero polynomial
        if (t_.empty()) return -1;
        long d = 0;
        for (int e : t_.begin()->first) d += e;
        return d;
    }
    int degree_in(const std::string& var) const {
        int idx = reg_->index_of(var);
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[idx]);
        return d;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        long d = total_degree();
        for (const auto& [e, c] : t_) {
            long s = 0;
            for (int x : e) s += x;
            if (s != d) return false;
        }
        return true;
    }

    bool operator==(const MultiPoly& o) const {
        return same_registry(o) && t_ == o.t_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const {
        MultiPoly r(reg_);
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        require_same_registry(o);
        MultiPoly r(reg_ ? reg_ : o.reg_);
        r.t_ = t_;
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        require_same_registry(o);
        MultiPoly r(reg_ ? reg_ : o.reg_);
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_) {
                Expo e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MultiPoly scaled(const C& s) const {
        MultiPoly r(reg_);
        if (poly_detail::coeff_is_zero(s)) return r;
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }
    // division by a polynomial with no variables (a unit of the coefficient
    // field)
    MultiPoly operator/(const MultiPoly& o) const {
        require_same_registry(o);
        if (o.total_degree() > 0) throw error("division only by constant polynomials");
        if (o.is_zero()) throw error("division by zero polynomial");
        C d = o.constant_term();
        MultiPoly r(reg_);
        for (const auto& [e, c] : t_) r.add_term(e, c / d);
        return r;
    }
    MultiPoly pow(int n) const {
        if (n < 0) throw error("negative polynomial power");
        MultiPoly r = constant(reg_, C(1));
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    // Ring homomorphism sending each variable to its image. Every variable
    // must be mapped or exist under the same name in the target registry.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& images,
                         RegistryPtr target) const {
        for (const auto& [name, img] : images)
            if (!img.same_registry_ptr(target))
                throw registry_mismatch_error("image of '" + name + "' uses a different registry");
        std::vector<MultiPoly> var_image;
        for (int i = 0; i < reg_->arity(); ++i) {
            const std::string& n = reg_->name(i);
            auto it = images.find(n);
            if (it != images.end()) var_image.push_back(it->second);
            else if (target->has(n)) var_image.push_back(variable(target, n));
            else throw registry_mismatch_error("variable '" + n + "' has no image");
        }
        // memoize small powers per variable
        std::vector<std::vector<MultiPoly>> powers(var_image.size());
        auto power_of = [&](int i, int e) -> const MultiPoly& {
            auto& cache = powers[static_cast<std::size_t>(i)];
            if (cache.empty()) cache.push_back(constant(target, C(1)));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * var_image[static_cast<std::size_t>(i)]);
            return cache[static_cast<std::size_t>(e)];
        };
        MultiPoly acc(target);
        for (const auto& [e, c] : t_) {
            MultiPoly term = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * power_of(static_cast<int>(i), e[i]);
            acc += term;
        }
        return acc;
    }

    // Full evaluation at a point of the coefficient domain.
    C eval(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != reg_->arity())
            throw error("evaluation point arity mismatch");
        C acc(0);
        for (const auto& [e, c] : t_) {
            C term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    MultiPoly partial(const std::string& var) const {
        int idx = reg_->index_of(var);
        MultiPoly r(reg_);
        for (const auto& [e, c] : t_) {
            if (e[idx] == 0) continue;
            Expo e2 = e;
            e2[idx] -= 1;
            r.add_term(e2, c * C(e[idx]));
        }
        return r;
    }

    // Coefficient-wise ring map into another domain; drops vanishing terms.
    template <typename D, typename Fn>
    MultiPoly<D> map_coeffs(Fn&& fn) const {
        MultiPoly<D> r(reg_);
        for (const auto& [e, c] : t_) {
            D img = fn(c);
            if (!poly_detail::coeff_is_zero(img)) r.add_term(e, img);
        }
        return r;
    }

    bool same_registry(const MultiPoly& o) const {
        if (!reg_ || !o.reg_) return true; // registry-less zeros mix with anything
        return reg_ == o.reg_ || *reg_ == *o.reg_;
    }
    bool same_registry_ptr(const RegistryPtr& r) const {
        return reg_ == r || (reg_ && r && *reg_ == *r);
    }

    void add_term(const Expo& e, const C& c) {
        if (poly_detail::coeff_is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (poly_detail::coeff_is_zero(it->second)) t_.erase(it);
        }
    }

private:
    void require_same_registry(const MultiPoly& o) const {
        if (!same_registry(o)) throw registry_mismatch_error("polynomials over different registries");
    }

    RegistryPtr reg_;
    TermMap t_;
};

// ---- weighted jets ---------------------------------------------------------

template <typename C>
struct WeightedJet {
    std::vector<Rat> weights;
    std::map<Rat, MultiPoly<C>> parts;

    std::optional<Rat> min_weight() const {
        if (parts.empty()) return std::nullopt;
        return parts.begin()->first;
    }
};

template <typename C>
WeightedJet<C> weighted_parts(const MultiPoly<C>& f, const std::vector<Rat>& weights) {
    if (static_cast<int>(weights.size()) != f.registry()->arity())
        throw error("one weight per variable required");
    for (const auto& w : weights)
        if (w <= 0) throw error("weights must be positive");
    WeightedJet<C> jet;
    jet.weights = weights;
    for (const auto& [e, c] : f.terms()) {
        Rat w(0);
        for (std::size_t i = 0; i < e.size(); ++i) w += Rat(e[i]) * weights[i];
        auto it = jet.parts.find(w);
        if (it == jet.parts.end())
            it = jet.parts.emplace(w, MultiPoly<C>(f.registry())).first;
        it->second.add_term(e, c);
    }
    return jet;
}

// ---- elimination ------------------------------------------------------------

// For l1 = a1*lam + b1*mu and l2 = a2*lam + b2*mu (coefficients free of lam
// and mu), returns a1*b2 - a2*b1: the locus where a common nonzero (lam:mu)
// solution exists.
template <typename C>
MultiPoly<C> eliminate_pair(const MultiPoly<C>& l1, const MultiPoly<C>& l2,
                            const std::string& lam, const std::string& mu) {
    if (!l1.same_registry(l2)) throw registry_mismatch_error("eliminate_pair registry mismatch");
    const auto reg = l1.registry();
    int il = reg->index_of(lam), im = reg->index_of(mu);
    auto split = [&](const MultiPoly<C>& l) {
        MultiPoly<C> a(reg), b(reg);
        for (const auto& [e, c] : l.terms()) {
            if (e[il] + e[im] != 1)
                throw not_linear_in_pair_error("term not linear-homogeneous in (" + lam + "," + mu + ")");
            Expo e2 = e;
            e2[il] = 0;
            e2[im] = 0;
            (e[il] == 1 ? a : b).add_term(e2, c);
        }
        return std::make_pair(a, b);
    };
    auto [a1, b1] = split(l1);
    auto [a2, b2] = split(l2);
    return a1 * b2 - a2 * b1;
}

// ---- printing ---------------------------------------------------------------

namespace poly_detail {

struct CoeffText {
    std::string magnitude; // parseable; never starts with '-'
    bool negative;         // sign printed by the caller
    bool is_unit;          // magnitude == "1": suppressed before a monomial
};

inline CoeffText coeff_text(const Rat& c) {
    Rat a = abs(c);
    return {str(a), sgn(c) < 0, a == 1};
}
inline CoeffText coeff_text(const RatFunc& c) {
    if (c.is_constant()) return coeff_text(c.constant_value());
    if (c.den().degree() == 0 && c.den().coeff(0) == 1)
        return {"(" + c.num().to_string() + ")", false, false};
    return {c.to_string(), false, false};
}
inline CoeffText coeff_text(const Fp& c) { return {str(c), false, c.value() == 1}; }
inline CoeffText coeff_text(const GaussQ& c) {
    if (c.is_real()) return coeff_text(c.re);
    return {"(" + str(c) + ")", false, false};
}

} // namespace poly_detail

template <typename C>
std::string to_string(const MultiPoly<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& names = f.registry()->names();
    for (const auto& [e, c] : f.terms()) {
        poly_detail::CoeffText t = poly_detail::coeff_text(c);
        if (out.empty()) {
            if (t.negative) out += "-";
        } else {
            out += t.negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += t.magnitude;
        else if (t.is_unit) out += mono;
        else out += t.magnitude + "*" + mono;
    }
    return out;
}

} // namespace cusplab
