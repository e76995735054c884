#pragma once

// Goeritz matrices of checkerboard-colored diagrams and exact symmetric
// integer matrix algebra: inertia by congruence elimination and fraction-free
// determinants.

#include <gmpxx.h>

#include <vector>

#include "braid.hpp"
#include "diagram.hpp"

namespace twobridge {

// Dense symmetric integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    explicit IntMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// The Goeritz matrix: index the white faces, set the off-diagonal entry for
// a pair of white faces to minus the sum of incidence numbers over crossings
// touching both, make row sums vanish on the diagonal, then delete the row
// and column of the lowest-numbered white face.  Crossings whose two white
// quadrants lie in the same face contribute nothing.
IntMatrix goeritz_matrix(const ColoredDiagram& col, const std::vector<int>& eta);

struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
};

// Exact inertia of a symmetric integer matrix via congruence elimination
// over the rationals (hyperbolic 2x2 blocks handle zero diagonals).
Inertia inertia(const IntMatrix& m);

// n_plus - n_minus.
long long matrix_signature(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination); the empty matrix
// has determinant 1.
mpz_class determinant(const IntMatrix& m);

// Closed form for the Goeritz signature of the standard plat diagram of an
// odd-length, uniform-sign twist vector [b1,...,bk]:
//   -sign(b1) * (1 + sum of |b_i| over even positions i).
long long conway_closed_form_sign(const Conway& c);

}  // namespace twobridge
