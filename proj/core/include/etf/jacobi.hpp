#pragma once

#include <vector>

#include "etf/frame.hpp"

namespace etf {

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
/// Intended for small dense matrices (subset Grams, frame operators).
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-12 relative
/// to the matrix norm. The input is symmetrized first.
std::vector<double> hermitian_eigenvalues(const FrameMatrix& a);
std::vector<double> hermitian_eigenvalues(std::vector<Complex> a, int n);

}  // namespace etf
