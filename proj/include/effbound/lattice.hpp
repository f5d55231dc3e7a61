#pragma once

#include "effbound/matrix.hpp"

namespace effbound {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    bool operator==(const Signature&) const = default;
};

/// Exact solution of M x = b by fraction-free (Bareiss) elimination with row
/// pivoting. Throws Error(SingularMatrix) when det M = 0.
RatVector solve_linear(const IntMatrix& m, const RatVector& b);

/// Bareiss determinant; the empty matrix has determinant 1.
Integer determinant(const IntMatrix& m);

/// Sylvester's criterion applied to -M: every leading principal minor of -M
/// must be strictly positive. The empty matrix is (vacuously) definite.
bool is_negative_definite(const IntMatrix& m);

/// Diagonal entries produced by symmetric congruence reduction. Their
/// product equals det(M) exactly (the reduction only uses permutations and
/// unimodular shears), and their signs give the inertia.
RatVector congruence_pivots(const IntMatrix& m);

Signature signature(const IntMatrix& m);

/// K is characteristic for the form M iff K.e_i + e_i.e_i is even for every
/// basis vector, i.e. K.x = x.x (mod 2) for all integral x.
bool is_characteristic(const IntVector& k, const IntMatrix& m);

} // namespace effbound
