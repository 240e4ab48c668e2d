#pragma once

#include "trispec/numeric.hpp"

#include <Eigen/Core>

namespace trispec {

/// Eigenvalues of the complex symmetric tridiagonal matrix with diagonal d and
/// off-diagonal e (e(k) couples rows k and k+1), by implicit QL with
/// Wilkinson shifts and deflation. Throws NoConvergence after max_sweeps
/// iterations on one eigenvalue.
Eigen::VectorXcd complex_symmetric_tridiagonal_eigenvalues(Eigen::VectorXcd d, Eigen::VectorXcd e,
                                                            int max_sweeps = 60);

/// Solves the general tridiagonal system (sub, diag, super) x = rhs by
/// Gaussian elimination with partial pivoting. Zero pivots are replaced by
/// pivot_floor so near-singular shifts still give a direction.
Eigen::VectorXcd solve_tridiagonal(const Eigen::VectorXcd& sub, const Eigen::VectorXcd& diag,
                                   const Eigen::VectorXcd& super, const Eigen::VectorXcd& rhs, double pivot_floor);

} // namespace trispec
