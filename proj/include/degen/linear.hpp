#ifndef DEGEN_LINEAR_HPP
#define DEGEN_LINEAR_HPP

#include <cstdint>
#include <vector>

#include "degen/matrix.hpp"
#include "degen/polynomial.hpp"

namespace degen {

/// Exact rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// det(xI - M), computed with the division-free Berkowitz recurrence so the
/// result is valid over any commutative ring (in particular F_p with p <= n).
Polynomial char_poly(const Matrix& m);

struct RootMultiplicity {
  Scalar root;
  int multiplicity;
};

/// Roots of a monic polynomial that splits into linear factors over its
/// field, sorted by representative. Throws NonSplit otherwise.
///
/// Over F_p every residue is tried; over Q candidates come from the rational
/// root test on the integer-scaled polynomial.
std::vector<RootMultiplicity> split_roots(const Polynomial& f);

/// n^2 - rank of X -> AX - XA on n x n matrices.
std::int64_t commutant_dim(const Matrix& a);

}  // namespace degen

#endif
