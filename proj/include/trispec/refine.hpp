#pragma once

#include "trispec/family.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace trispec {

/// q_k and p_k = b_k c_k for k = 0..N in a scalar type F (q_0 = p_0 = 0).
template <class F>
struct PencilTable {
    std::vector<F> q;
    std::vector<F> p;

    [[nodiscard]] int size() const { return static_cast<int>(q.size()) - 1; }

    static PencilTable build(const OperatorFamily& family, int N) {
        PencilTable t;
        t.q.assign(N + 1, F(0));
        t.p.assign(N + 1, F(0));
        for (int k = 1; k <= N; ++k) {
            t.q[k] = family.template q_as<F>(k);
            t.p[k] = family.template coupling_as<F>(k);
        }
        return t;
    }
};

template <class F>
struct RefineOutcome {
    F zeta{};
    bool converged = false;
    int iterations = 0;
};

namespace detail {

template <class F>
real_of_t<F> magnitude(const F& v) {
    using std::abs;
    using boost::multiprecision::abs;
    return abs(v);
}

template <class F>
bool finite(const F& v) {
    using R = real_of_t<F>;
    R m = magnitude(v);
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(m);
}

} // namespace detail

/// Evaluates f(zeta) = zeta - z^2 p_{n-1}/L_{n-1} - z^2 p_n/U_{n+1} and f'(zeta),
/// where L and U are the top-down and bottom-up pivots of (lambda - A) for the
/// N-section at lambda = q_n + zeta. Zeros of f are eigenvalues written as
/// deviations from q_n, which avoids cancellation in lambda - q_n.
template <class F>
bool branch_function(const PencilTable<F>& t, const F& z, int n, const F& zeta, F& f, F& df) {
    const int N = t.size();
    const F z2 = z * z;
    f = zeta;
    df = F(1);
    if (n > 1) {
        F L = zeta + (t.q[n] - t.q[1]);
        F dL = F(1);
        for (int j = 2; j <= n - 1; ++j) {
            if (L == F(0)) return false;
            const F w = z2 * t.p[j - 1] / L;
            const F dw = w * dL / L;
            L = zeta + (t.q[n] - t.q[j]) - w;
            dL = F(1) + dw;
        }
        if (L == F(0)) return false;
        const F w = z2 * t.p[n - 1] / L;
        f -= w;
        df += w * dL / L;
    }
    if (n < N) {
        F U = zeta + (t.q[n] - t.q[N]);
        F dU = F(1);
        for (int j = N - 1; j >= n + 1; --j) {
            if (U == F(0)) return false;
            const F w = z2 * t.p[j] / U;
            const F dw = w * dU / U;
            U = zeta + (t.q[n] - t.q[j]) - w;
            dU = F(1) + dw;
        }
        if (U == F(0)) return false;
        const F w = z2 * t.p[n] / U;
        f -= w;
        df += w * dU / U;
    }
    return detail::finite(f) && detail::finite(df);
}

/// Newton polish of a branch deviation zeta = E - q_n on the N-section.
template <class F>
RefineOutcome<F> refine_deviation(const PencilTable<F>& t, const F& z, int n, const F& zeta0, int max_iter = 60) {
    using R = real_of_t<F>;
    const R eps = std::numeric_limits<R>::epsilon();
    RefineOutcome<F> out;
    F zeta = zeta0;
    const R scale = detail::magnitude(F(t.q[n])) + R(1);
    R prev_size = R(-1);
    for (int it = 1; it <= max_iter; ++it) {
        F f, df;
        if (!branch_function(t, z, n, zeta, f, df) || df == F(0)) {
            out.zeta = zeta;
            out.iterations = it;
            return out;
        }
        const F step = f / df;
        zeta -= step;
        out.iterations = it;
        if (!detail::finite(zeta)) return out;
        const R size = detail::magnitude(step);
        const R ref = detail::magnitude(zeta);
        // the last test accepts a stalled iteration sitting at the rounding floor
        if (size <= R(16) * eps * ref || size <= eps * eps * scale || f == F(0) ||
            (prev_size >= R(0) && size >= prev_size / 2 && size <= R(4096) * eps * ref)) {
            out.zeta = zeta;
            out.converged = true;
            return out;
        }
        prev_size = size;
    }
    out.zeta = zeta;
    return out;
}

template <class F>
RefineOutcome<F> refine_deviation(const OperatorFamily& family, const F& z, int n, int N, const F& zeta0) {
    return refine_deviation(PencilTable<F>::build(family, N), z, n, zeta0);
}

} // namespace trispec
