#pragma once

#include <optional>
#include <vector>

#include "afflat/rational.hpp"

namespace afflat {

/// Matrices are stored row-major as a vector of rows.
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

IntMat identity_int(size_t n);
RatMat to_rat_mat(const IntMat& m);
IntMat transpose(const IntMat& m);
RatMat transpose(const RatMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& x);
IntVec mat_vec(const IntMat& a, const IntVec& x);

Int det(const IntMat& m);  // fraction-free elimination
Rat det(const RatMat& m);
size_t rank(const RatMat& m);
std::optional<RatMat> inverse(const RatMat& m);

/// Basis of {x : m x = 0}; `cols` gives the width when m has no rows.
std::vector<RatVec> rational_kernel(const RatMat& m, size_t cols);
/// Some x with m x = b, if one exists.
std::optional<RatVec> rational_solve(const RatMat& m, const RatVec& b);

/// Column Hermite form h = a * v with v unimodular and v_inv = v^{-1}.
/// The nonzero columns of h are its first `rank` columns; pivot_row[j] is
/// the row of the (positive) leading entry of column j, and entries left
/// of a pivot are reduced into [0, pivot).
struct ColumnHermite {
  IntMat h;
  IntMat v;
  IntMat v_inv;
  size_t rank = 0;
  std::vector<size_t> pivot_row;
};

ColumnHermite column_hermite(const IntMat& a, size_t cols);

/// Basis of the integer solutions of a x = 0.
std::vector<IntVec> integer_kernel(const IntMat& a, size_t cols);
/// Some integer x with a x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b,
                                    size_t cols);

/// Basis of span_R(gens) ∩ Z^m (the saturation of the generated lattice).
std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, size_t m);

/// Integer coordinates of x in the lattice basis, if x lies in the lattice.
std::optional<IntVec> lattice_coords(const std::vector<IntVec>& basis,
                                     const IntVec& x);

/// gcd of the maximal minors of the matrix whose columns are vs. Throws
/// InvalidInput when the vectors are linearly dependent.
Int maximal_minor_gcd(const std::vector<IntVec>& vs);
bool extends_to_basis(const std::vector<IntVec>& vs);
/// A basis of Z^m whose first members are vs. Throws InvalidInput when
/// vs is not part of a basis.
std::vector<IntVec> complete_to_lattice_basis(const std::vector<IntVec>& vs);

}  // namespace afflat
