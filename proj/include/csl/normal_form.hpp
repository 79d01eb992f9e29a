#pragma once

#include "csl/matrix.hpp"

namespace csl {

// Column-style Hermite normal form: for generators A (d x n, rank d) there is a
// unimodular U with A U = [H | 0], where H is lower triangular with positive
// diagonal and each off-diagonal entry H(i, j), j < i, lies in [0, H(i, i)).
// H depends only on the lattice spanned by the columns of A.

struct HermiteDecomposition {
    IntMatrix hermite;    // d x d
    IntMatrix transform;  // n x n unimodular
};

IntMatrix hermite_normal_form(const IntMatrix& generators);
HermiteDecomposition hermite_decomposition(const IntMatrix& generators);

/// Rational lattices: scale by the common denominator, reduce, scale back.
RationalMatrix hermite_normal_form(const RationalMatrix& generators);

// Smith normal form: left * A * right = diagonal with d_1 | d_2 | ... and all
// d_k >= 0; left and right unimodular.
struct SmithDecomposition {
    IntMatrix left;      // d x d
    IntMatrix diagonal;  // d x n
    IntMatrix right;     // n x n

    std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_decomposition(const IntMatrix& a);

}  // namespace csl
