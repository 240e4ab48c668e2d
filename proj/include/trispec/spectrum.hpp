#pragma once

#include "trispec/regions.hpp"

#include <vector>

namespace trispec {

struct SpectrumResult {
    Complex z = 0.0;
    int N = 0;
    Eigen::VectorXcd eigenvalues; ///< sorted by real part, then imaginary part
    Eigen::VectorXd residuals;    ///< ||(A - lambda)v|| / ||A|| from inverse iteration
    double residual_tol = 0.0;
};

/// All eigenvalues of the truncated pencil, each certified by inverse
/// iteration on the original (unsymmetrized) matrix. Throws NoConvergence if
/// the iteration fails or a residual exceeds tol.
SpectrumResult spectrum(const TruncatedMatrix& matrix, double tol = 1e-10);

/// Uncertified eigenvalues, same ordering as spectrum().
Eigen::VectorXcd eigenvalues(const TruncatedMatrix& matrix);

/// Convenience: eigenvalues of the N-section of the family at z.
Eigen::VectorXcd eigenvalues(const OperatorFamily& family, Complex z, int N);

/// Relative residual min_v ||(A - lambda)v|| / ||A|| estimated by two steps of
/// inverse iteration.
double inverse_iteration_residual(const TruncatedMatrix& matrix, Complex lambda);

void sort_spectrum(Eigen::VectorXcd& values);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

/// Largest distance in an optimal-by-greedy one-to-one matching of two equal
/// sized multisets; infinity when sizes differ.
double multiset_matching_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

} // namespace trispec
