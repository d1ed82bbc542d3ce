#pragma once

#include <cstdint>
#include <vector>

#include "orthomat/matrix.hpp"

namespace orthomat {

// Fraction-free (Bareiss) determinant. Rows are first scaled to integers,
// eliminated over Z with exact division, then the scale is divided back out.
// The 0x0 determinant is 1. Throws DimensionError for non-square input.
Rational determinant(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

struct EchelonForm {
  RationalMatrix matrix;             // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};
EchelonForm reduced_row_echelon(const RationalMatrix& m);

// Throws RankError if `m` is singular.
RationalMatrix inverse(const RationalMatrix& m);

// Pf(m): 1 for dimension 0, 0 for odd dimension. Uses the perfect-matching
// sum for dimension <= 8 and skew elimination beyond.
Rational pfaffian(const SkewSymmetricMatrix& m);
// Signed sum over S'_{2m}, enumerated as perfect matchings of {1..2m} with
// each pair's smaller element first.
Rational pfaffian_by_definition(const SkewSymmetricMatrix& m);
// Congruence elimination with exact rational pivots: each step pairs row 2t
// with a nonzero partner, accumulates the pivot and clears both rows.
Rational pfaffian_by_elimination(const SkewSymmetricMatrix& m);

// Principal submatrix on the indices in `plain_mask` (bit i-1 for index i),
// rows and columns in increasing index order.
RationalMatrix principal_submatrix(const RationalMatrix& m, std::uint32_t plain_mask);
SkewSymmetricMatrix principal_submatrix(const SkewSymmetricMatrix& m, std::uint32_t plain_mask);

// Pf of the principal submatrix on `index_set` ⊆ I. Throws IndexError if the
// set mentions starred elements or indices beyond the matrix dimension.
Rational pfaffian_minor(const SkewSymmetricMatrix& m, const ElementSet& index_set);
Rational pfaffian_minor(const SkewSymmetricMatrix& m, std::uint32_t plain_mask);

// Row-equivalent matrix whose right n x n block is the identity.
// Requires shape n x 2n and a nonsingular right block (RankError otherwise).
RationalMatrix reduce_right_block_to_identity(const RationalMatrix& m);

// (n-k) x n matrix D of rank n-k with m * D^t = 0, for m of shape k x n and
// rank k. Rows are the null-space basis read off the reduced echelon form,
// each scaled so its leading nonzero entry is 1.
RationalMatrix orthogonal_complement(const RationalMatrix& m);

// True iff the two matrices have the same row space.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace orthomat
