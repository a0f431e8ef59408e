#pragma once

#include "cusplab/multipoly.hpp"

namespace cusplab {

// Coefficient-wise homomorphisms out of the k-parametrized ring.

inline MultiPoly<Rat> specialize_k(const MultiPoly<RatFunc>& f, const Rat& k) {
    return f.map_coeffs<Rat>([&](const RatFunc& c) { return c.eval(k); });
}

inline MultiPoly<Fp> specialize_k_mod(const MultiPoly<RatFunc>& f, const Rat& k, std::uint64_t p) {
    return f.map_coeffs<Fp>([&](const RatFunc& c) { return c.eval_mod(k, p); });
}

inline MultiPoly<Fp> reduce_mod(const MultiPoly<Rat>& f, std::uint64_t p) {
    if (!is_prime_u64(p)) throw bad_prime_error(std::to_string(p) + " is not prime");
    return f.map_coeffs<Fp>([&](const Rat& c) { return Fp::from_rat(c, p); });
}

inline MultiPoly<RatFunc> lift_to_k(const MultiPoly<Rat>& f) {
    return f.map_coeffs<RatFunc>([](const Rat& c) { return RatFunc(c); });
}

} // namespace cusplab
