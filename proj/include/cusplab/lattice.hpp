#pragma once

#include <optional>
#include <string>

#include "cusplab/matrix.hpp"
#include "cusplab/smith.hpp"

namespace cusplab {

// A lattice presented by the Gram matrix of a chosen basis. Vectors are
// coordinate tuples relative to that basis; dual vectors get rational
// coordinates relative to the same basis.
struct GramLattice {
    RatMat gram;
    std::vector<std::string> labels;

    GramLattice() = default;
    explicit GramLattice(RatMat g, std::vector<std::string> names = {})
        : gram(std::move(g)), labels(std::move(names)) {
        if (!gram.is_square()) throw error("Gram matrix must be square");
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < i; ++j)
                if (gram(i, j) != gram(j, i)) throw error("Gram matrix must be symmetric");
        if (labels.empty())
            for (int i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
    }

    int rank() const { return gram.rows(); }
    bool is_integral() const {
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < gram.cols(); ++j)
                if (rat_den(gram(i, j)) != 1) return false;
        return true;
    }
    IntMat gram_int() const { return to_int_checked(gram); }
};

Rat discriminant(const GramLattice& l);

GramLattice rescale(const GramLattice& l, const Rat& m);

// Dual basis in the canonical Hermite form of the column lattice of
// gram^{-1}; `coords` columns are the dual basis vectors in primal
// coordinates, `dual.gram` their pairwise products under the primal form.
struct DualBasis {
    RatMat coords;
    GramLattice dual;
};
DualBasis dual_basis(const GramLattice& l);

// Columns of b embed a sublattice into the standard lattice Z^n.
std::pair<bool, std::vector<Int>> is_primitive_sublattice(const IntMat& b);

// Box search for v with v^T G v = c and |v_i| <= bound; a found vector is a
// certificate, an empty result only says "none within the box". The witness
// is the lexicographically smallest solution in the box.
std::optional<std::vector<Int>> represents(const GramLattice& l, const Int& c, const Int& bound);

struct ShortestVectors {
    Rat min_norm;
    std::vector<std::vector<Int>> vectors; // canonical sign, sorted
};
ShortestVectors shortest_vectors(const GramLattice& l);

template <typename T>
Rat lattice_norm(const GramLattice& l, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != l.rank()) throw error("vector length != rank");
    Rat acc(0);
    for (int i = 0; i < l.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j) acc += Rat(v[i]) * l.gram(i, j) * Rat(v[j]);
    return acc;
}

bool is_positive_definite(const GramLattice& l);

} // namespace cusplab
