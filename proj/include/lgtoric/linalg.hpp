// Small exact linear algebra over Z and Q.
#ifndef LGTORIC_LINALG_HPP
#define LGTORIC_LINALG_HPP

#include <vector>

#include "lgtoric/numeric.hpp"

namespace lgtoric {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;   // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t n);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);

/// Result of integer row reduction: transform * input == echelon.
struct RowEchelon
{
    IntMatrix echelon;   // first `rank` rows non-zero, pivots strictly increasing
    IntMatrix transform; // unimodular, rows x rows
    std::size_t rank = 0;
};

/// Hermite-style row echelon form using only unimodular row operations.
RowEchelon row_echelon(IntMatrix a);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws DomainError if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Z-basis (as rows) of the lattice generated by the given row vectors.
IntMatrix lattice_basis(const IntMatrix& generators, std::size_t dim);

/// Index of the generated lattice in Z^dim, or 0 if it has lower rank.
Integer lattice_index(const IntMatrix& generators, std::size_t dim);

/// Basis of the right null space {x : m x = 0} over Q, in reduced form.
std::vector<RatVector> rational_nullspace(RatMatrix m, std::size_t cols);

} // namespace lgtoric

#endif
