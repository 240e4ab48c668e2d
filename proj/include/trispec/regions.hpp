#pragma once

#include "trispec/family.hpp"

#include <Eigen/Core>

namespace trispec {

/// Finite section of L + zB with N rows.
struct TruncatedMatrix {
    int N = 0;
    Complex z = 0.0;
    Eigen::VectorXcd diag;  ///< q_1..q_N
    Eigen::VectorXcd super; ///< (k, k+1) entries z b_k
    Eigen::VectorXcd sub;   ///< (k+1, k) entries z c_k

    [[nodiscard]] Eigen::MatrixXcd dense() const;
    [[nodiscard]] double frobenius_norm() const;
};

TruncatedMatrix truncate(const OperatorFamily& family, Complex z, int N);

enum class Region { Delta, H, K, W, HLine, Pi };

/// Localization geometry attached to one index n.
struct Regions {
    int n = 1;
    double R_n = 0.0;
    /// Half-height s of the rectangle Pi(n, s).
    double pi_height = 0.0;

    [[nodiscard]] double strip_left() const { return double(n) * n - n; }
    [[nodiscard]] double strip_right() const { return double(n) * n + n; }
};

/// R_n = n^{1-alpha}/(8M); pi_height defaults to n + 2.
Regions regions(const OperatorFamily& family, int n);

/// Membership with the boundary conventions K open, H closed, W open, Delta closed.
/// For Delta the point is a z value, otherwise a lambda value.
bool region_contains(const Regions& regions, Complex point, Region which);

/// Norm bound for B R^0_lambda on H_n minus K_n: the minimum of the bounds that
/// apply at Im lambda.
double resolvent_norm_bound(const OperatorFamily& family, int n, Complex lambda);

/// sup_{k <= K} (|b_k| + |c_{k-1}|)/|lambda - k^2|, the brute-force norm bound.
double coupling_resolvent_sup(const OperatorFamily& family, Complex lambda, int K);

} // namespace trispec
