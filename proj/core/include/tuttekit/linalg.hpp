#pragma once

#include <vector>

#include "tuttekit/multiaffine.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/sparse_poly.hpp"

namespace tuttekit {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free (Bareiss) elimination; exact for any field entries.
Rational exact_determinant(Matrix<Rational> m);
GaussianRational exact_determinant(Matrix<GaussianRational> m);

// Expansion by minors with a column-subset cache; size cap 8 for polynomial
// entries (CapExceededError beyond).
SparsePoly exact_determinant(const Matrix<SparsePoly>& m);
MultiAffinePoly exact_determinant(const Matrix<MultiAffinePoly>& m);

// Ryser's formula; size cap 10.
Rational exact_permanent(const Matrix<Rational>& m);
GaussianRational exact_permanent(const Matrix<GaussianRational>& m);

int exact_rank(Matrix<Rational> m);

// Conversion helper; throws NonMultiaffineError if any edge variable appears
// with exponent > 1. kVarQ exponents map to the Laurent coefficient.
MultiAffinePoly sparse_to_multiaffine(const SparsePoly& p);

}  // namespace tuttekit
