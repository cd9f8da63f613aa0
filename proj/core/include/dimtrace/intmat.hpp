#pragma once

#include <cstddef>
#include <vector>

#include "dimtrace/numeric.hpp"

// Integer matrices as row lists: Hermite and Smith normal forms and
// integer kernels. All routines are deterministic.
namespace dimtrace::intmat {

using IntMatrix = std::vector<IntVec>;

struct HermiteDecomposition {
  IntMatrix hnf;        // same shape as the input, zero rows last
  IntMatrix transform;  // unimodular, transform * input = hnf
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot).
HermiteDecomposition hermite_decompose(const IntMatrix& m, std::size_t cols);

/// The nonzero rows of the Hermite normal form; a canonical Z-basis of the
/// row lattice.
IntMatrix hermite_basis(const IntMatrix& m, std::size_t cols);

/// Canonical basis of {x in Z^rows : x * m = 0}.
IntMatrix left_kernel(const IntMatrix& m, std::size_t cols);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(const IntMatrix& m, std::size_t cols);

/// Rational rows -> integer rows scaled by a common positive denominator.
struct ScaledIntMatrix {
  IntMatrix rows;
  Int denominator = 1;
};
ScaledIntMatrix clear_denominators(const std::vector<RatVec>& rows);

}  // namespace dimtrace::intmat
