#pragma once

#include "trispec/spectrum.hpp"

namespace trispec {

struct WindowResult {
    Eigen::VectorXcd values; ///< the n eigenvalues in W_n, sorted by real part
    int N_used = 0;          ///< truncation that passed the stability test
};

/// Eigenvalues in W_n for |z| <= R_n with adaptive truncation: N starts at
/// max(64, 4n) and doubles until the window set moves less than tol in
/// Hausdorff distance and the localization estimate at index N/2 holds.
WindowResult window_eigenvalues_detailed(const OperatorFamily& family, Complex z, int n, double tol = 1e-9);

Eigen::VectorXcd window_eigenvalues(const OperatorFamily& family, Complex z, int n, double tol = 1e-9);

/// Eigenvalues with Re lambda < n^2 + n on one truncation, without the disk
/// precondition. Used slightly outside Delta_n, where the count is still n in
/// practice; throws CountMismatch when it is not.
Eigen::VectorXcd left_of_line_eigenvalues(const OperatorFamily& family, Complex z, int n, int N = 0);

/// Same adaptive window without the disk precondition: accepted whenever W_n
/// holds exactly n eigenvalues (CountMismatch otherwise).
WindowResult window_eigenvalues_counted(const OperatorFamily& family, Complex z, int n, double tol = 1e-9);

enum class SigmaMethod { Eig, Contour };

/// sigma_j(z) = sum_{k<=n} E_k(z)^j. Works wherever W_n holds exactly n
/// eigenvalues (CountMismatch otherwise), which includes Delta_n.
Complex power_sum_sigma(const OperatorFamily& family, Complex z, int j, int n, SigmaMethod method,
                        double tol = 1e-10);

/// sigma_1..sigma_jmax together; entry j-1 holds sigma_j. The contour route
/// integrates all powers in one adaptive pass.
std::vector<Complex> power_sums(const OperatorFamily& family, Complex z, int jmax, int n, SigmaMethod method,
                                double tol = 1e-10);

/// tr (lambda - A)^{-1} on the N-section by the pivot recurrence.
Complex resolvent_trace(const OperatorFamily& family, Complex z, Complex lambda, int N);

/// Rejects families whose diagonal is not k^2; the localization geometry
/// assumes it.
void require_square_diagonal(const OperatorFamily& family);

} // namespace trispec
