#pragma once

#include "trispec/family.hpp"

#include <array>
#include <optional>
#include <string>

namespace trispec {

struct EllEstimate {
    std::optional<double> value; ///< empty when p_k / k has no limit
    double spread = 0.0;         ///< largest fit residual over the probe range
};

/// l = lim p_k / k, extrapolated from k = N_probe/2..N_probe by a least-squares
/// fit of p_k/k to l + c_1/k + c_2/k^2. No limit when the fit residual exceeds
/// tol * max(1, |l|) or l has an imaginary part.
EllEstimate ell_limit(const OperatorFamily& family, int N_probe = 2000, double tol = 1e-8);

struct TraceReport {
    std::string family;
    Complex z;
    int p = 0;
    int N = 0;        ///< number of branches summed
    int N_matrix = 0; ///< truncation used for the eigenvalues
    Complex partial_sum;
    /// Predicted value of the full series when one is known.
    std::optional<Complex> predicted_limit;
    /// partial_sum minus the telescoped phi_2(N) z^2 + phi_4(N) z^4 (p = 0) or
    /// phi_4(N) z^4 (p = 1).
    Complex telescoped_residual;
    /// log2 of |defect(N/2)| / |defect(N)| against the predicted limit; NaN if
    /// unavailable.
    double convergence_rate_estimate = 0.0;
};

/// sum_{n<=N} (E_n(z) - n^2 - [p=1] a_2(n) z^2), from the N eigenvalues left of
/// Re lambda = N^2 + N, each polished in float128. Requires |z| <= R_N.
TraceReport partial_trace(const OperatorFamily& family, Complex z, int p, int N);

/// The same sum for every m with z in Delta_m, m <= N, from one eigenvalue set.
/// Entries for m with |z| > R_m are NaN.
std::vector<Complex> partial_trace_sequence(const OperatorFamily& family, Complex z, int p, int N);

/// tr(z) as c_0 + c_1 z + c_2 z^2: zero for alpha < 1/2, -(l/2) z^2 at alpha = 1/2.
std::array<double, 3> trace_limit(const OperatorFamily& family);

/// |sum_{k<=n} E_k(z) - sum_{k<=n} k^2|, the quantity bounded by 2n^2 for
/// |z| <= R_n / 2.
double cumulative_deviation(const OperatorFamily& family, Complex z, int n);

} // namespace trispec
