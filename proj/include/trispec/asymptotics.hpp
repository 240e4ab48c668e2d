#pragma once

#include "trispec/family.hpp"

#include <array>
#include <string>
#include <vector>

namespace trispec {

/// Default sample of n for slope fits.
inline const std::vector<int> kSlopeGrid{8, 11, 16, 23, 32, 45, 64};

struct ResidualFit {
    std::string description;
    std::vector<std::pair<int, double>> samples; ///< (n, residual)
    double fitted_slope = 0.0;
    double fitted_intercept = 0.0;
    double target_slope = 0.0;
    double slope_tol = 0.35;
    bool pass = false;
};

/// OLS of log residual on log n. Non-positive residuals are rejected.
ResidualFit fit_slope(std::string description, std::vector<std::pair<int, double>> samples, double target_slope,
                      double slope_tol = 0.35);

/// E_n(z) - q_n by the eigensolver with truncation N (0 picks 8 n).
Complex eigen_deviation(const OperatorFamily& family, int n, Complex z, int N = 0);

/// The three-term bracket z^2 ((1-2a)/(2n^{2-2a}) + (a^2-a)/n^{3-2a} +
/// (1-2a)(8a^2-14a+3)/(24 n^{4-2a})).
Complex thm2_bracket(double alpha, Complex z, int n);

/// |E_n(z) - n^2 - bracket| for the power family.
double thm2_residual(double alpha, Complex z, int n, int N = 0);

/// |E_n(z) - n^2 + z^2/(4n^2) + (2z^2 + 3z^4)/(32 n^4)| at alpha = 1/2.
double thm4_residual(Complex z, int n, int N = 0);

/// P_1..P_6 at alpha = 1/2.
Complex P_k(int k, Complex z);

/// Target exponent max(2a - 5, 4a - 6).
double thm2_target_slope(double alpha);

/// Smallest n with |z| <= R_n; Delta_n then certifies the branch is isolated.
int working_n_R(const OperatorFamily& family, Complex z);

struct PkFit {
    Complex z;
    int terms = 3;
    std::vector<int> ns;
    std::vector<Complex> recovered; ///< coefficients of n^{-2}, n^{-4}, ...
    std::vector<Complex> expected;  ///< P_1(z), P_2(z), ...
    std::vector<double> relative_error;
    double condition = 0.0;
    bool pass = false; ///< every relative error (or absolute, for P_k = 0) within rel_tol
};

/// Least-squares fit of E_n(z) - n^2 against n^{-2}, ..., n^{-2 terms} for each z
/// (alpha = 1/2). Throws IllConditionedFit above max_condition.
std::vector<PkFit> pk_expansion_check(const std::vector<Complex>& z_grid, const std::vector<int>& n_range,
                                      int terms = 3, double rel_tol = 0.02, double max_condition = 1e10);

struct RadiusProbe {
    int n = 0;
    double R_n = 0.0;
    std::vector<std::pair<int, double>> root_test; ///< (k, |a_{2k}(n)|^{-1/2k})
    double estimate = 0.0;                        ///< extrapolated to k -> infinity
};

/// Root-test estimate of the radius of convergence of E_n at z = 0, from
/// k = k_lo..k_hi, extrapolated linearly in 1/k.
RadiusProbe radius_probe(const OperatorFamily& family, int n, int k_lo = 2, int k_hi = 8);

/// Slope of |a_{2k}(alpha, n)| against n over ns, from the walk-sum solver.
ResidualFit coefficient_decay_fit(const OperatorFamily& family, int k, const std::vector<int>& ns, double target_slope,
                                  double slope_tol);

} // namespace trispec
