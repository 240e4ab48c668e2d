#include "trispec/trace.hpp"

#include "trispec/closed_forms.hpp"
#include "trispec/refine.hpp"
#include "trispec/regions.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/taylor.hpp"
#include "trispec/window.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace trispec {

EllEstimate ell_limit(const OperatorFamily& family, int N_probe, double tol) {
    if (N_probe < 8) throw Error(ErrorCode::InvalidParameter, "N_probe must be >= 8");
    if (family.max_index() > 0) N_probe = std::min(N_probe, family.max_index());
    const int lo = N_probe / 2;
    const int rows = N_probe - lo + 1;
    Eigen::MatrixXd A(rows, 3);
    Eigen::VectorXd re(rows), im(rows);
    for (int i = 0; i < rows; ++i) {
        const int k = lo + i;
        const double x = double(N_probe) / k;
        A(i, 0) = 1.0;
        A(i, 1) = x;
        A(i, 2) = x * x;
        const Complex r = family.coupling(k) / double(k);
        re(i) = r.real();
        im(i) = r.imag();
    }
    const auto qr = A.colPivHouseholderQr();
    const Eigen::VectorXd cre = qr.solve(re), cim = qr.solve(im);
    const Eigen::VectorXd rre = A * cre - re, rim = A * cim - im;
    double spread = 0.0;
    for (int i = 0; i < rows; ++i) spread = std::max(spread, std::hypot(rre(i), rim(i)));
    // the intercept is the value at x = 0, i.e. k -> infinity
    const double ell = cre(0);
    EllEstimate out;
    out.spread = spread;
    const double scale = std::max(1.0, std::abs(ell));
    if (spread <= tol * scale && std::abs(cim(0)) <= tol * scale) out.value = ell;
    return out;
}

namespace {

struct PolishedSpectrum {
    int N_matrix = 0;
    std::vector<Complex> lambda;     ///< double eigenvalues left of h_N
    std::vector<int> label;          ///< nearest diagonal index
    std::vector<HighComplex> zeta;   ///< lambda - q_label, polished
};

PolishedSpectrum polished_left_spectrum(const OperatorFamily& family, Complex z, int N) {
    require_square_diagonal(family);
    if (N < 1) throw Error(ErrorCode::InvalidParameter, "N must be >= 1");
    const Regions reg = regions(family, N);
    if (std::abs(z) > reg.R_n)
        throw Error(ErrorCode::ZTooLarge, "|z| = " + format_double(std::abs(z)) + " exceeds R_N = " +
                                              format_double(reg.R_n));
    const WindowResult w = window_eigenvalues_detailed(family, z, N);
    PolishedSpectrum ps;
    ps.N_matrix = w.N_used;
    const auto table = PencilTable<HighComplex>::build(family, w.N_used);
    const HighComplex zh(HighFloat(z.real()), HighFloat(z.imag()));
    for (Eigen::Index i = 0; i < w.values.size(); ++i) {
        const Complex l = w.values(i);
        const int n = std::clamp(static_cast<int>(std::lround(std::sqrt(std::max(l.real(), 1.0)))), 1, w.N_used);
        const HighComplex z0(HighFloat(l.real() - family.q(n)), HighFloat(l.imag()));
        const auto r = refine_deviation(table, zh, n, z0);
        const Complex moved = to_complex(HighComplex(r.zeta - z0));
        if (!r.converged || std::abs(moved) > 1e-6 * (1.0 + std::abs(l)))
            throw Error(ErrorCode::NoConvergence, "float128 polish failed near lambda = " + format_complex(l));
        ps.lambda.push_back(l);
        ps.label.push_back(n);
        ps.zeta.push_back(r.zeta);
    }
    return ps;
}

/// sum over the polished eigenvalues with Re < m^2 + m, minus sum_{k<=m} q_k;
/// nullopt if the count is not m.
std::optional<HighComplex> left_sum(const OperatorFamily& family, const PolishedSpectrum& ps, int m) {
    const double line = double(m) * m + m;
    HighComplex s(0);
    int count = 0;
    for (size_t i = 0; i < ps.lambda.size(); ++i) {
        if (ps.lambda[i].real() >= line) continue;
        ++count;
        s += ps.zeta[i];
        s += HighComplex(family.q_as<HighFloat>(ps.label[i]));
    }
    if (count != m) return std::nullopt;
    for (int k = 1; k <= m; ++k) s -= HighComplex(family.q_as<HighFloat>(k));
    return s;
}

HighFloat a2_sum(const OperatorFamily& family, int m) {
    HighFloat s = 0;
    for (int n = 1; n <= m; ++n) s += to_high(solve_branch_equation(family, n, 1).a[1]);
    return s;
}

std::optional<Complex> predicted(const OperatorFamily& family, Complex z, int p) {
    const double a = family.growth_alpha();
    if (p == 1) {
        if (a < 0.9) return Complex(0.0);
        return std::nullopt;
    }
    if (a < 0.5) return Complex(0.0);
    if (a == 0.5) {
        const EllEstimate e = ell_limit(family);
        if (e.value) return -(*e.value / 2.0) * z * z;
    }
    return std::nullopt;
}

std::vector<Complex> sequence_from(const OperatorFamily& family, const PolishedSpectrum& ps, Complex z, int p,
                                   int N, int from) {
    std::vector<Complex> out(N + 1, Complex(std::numeric_limits<double>::quiet_NaN(), 0.0));
    out[0] = 0.0;
    const HighComplex z2 = HighComplex(HighFloat(z.real()), HighFloat(z.imag())) *
                           HighComplex(HighFloat(z.real()), HighFloat(z.imag()));
    HighFloat a2 = 0;
    for (int m = 1; m <= N; ++m) {
        if (p == 1) a2 += to_high(solve_branch_equation(family, m, 1).a[1]);
        if (m < from || std::abs(z) > regions(family, m).R_n) continue;
        if (auto s = left_sum(family, ps, m)) {
            HighComplex v = *s;
            if (p == 1) v -= HighComplex(a2) * z2;
            out[m] = to_complex(v);
        }
    }
    return out;
}

} // namespace

TraceReport partial_trace(const OperatorFamily& family, Complex z, int p, int N) {
    if (p != 0 && p != 1) throw Error(ErrorCode::InvalidParameter, "trace order p must be 0 or 1");
    TraceReport rep;
    rep.family = family.describe();
    rep.z = z;
    rep.p = p;
    rep.N = N;
    const PolishedSpectrum ps = polished_left_spectrum(family, z, N);
    rep.N_matrix = ps.N_matrix;
    auto total = left_sum(family, ps, N);
    if (!total) throw CountMismatchError(N, static_cast<int>(ps.lambda.size()));
    const HighComplex zh(HighFloat(z.real()), HighFloat(z.imag()));
    const HighComplex z2 = zh * zh;
    HighComplex sum = *total;
    if (p == 1) sum -= HighComplex(a2_sum(family, N)) * z2;
    rep.partial_sum = to_complex(sum);

    try {
        HighComplex tele = sum - HighComplex(to_high(phi_closed(family, 4, N))) * z2 * z2;
        if (p == 0) tele -= HighComplex(to_high(phi_closed(family, 2, N))) * z2;
        rep.telescoped_residual = to_complex(tele);
    } catch (const Error&) {
        rep.telescoped_residual = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    }

    rep.predicted_limit = predicted(family, z, p);
    rep.convergence_rate_estimate = std::numeric_limits<double>::quiet_NaN();
    const int half = N / 2;
    if (rep.predicted_limit && half >= 1 && std::abs(z) <= regions(family, half).R_n) {
        if (auto s = left_sum(family, ps, half)) {
            HighComplex h = *s;
            if (p == 1) h -= HighComplex(a2_sum(family, half)) * z2;
            const double d_half = std::abs(to_complex(h) - *rep.predicted_limit);
            const double d_full = std::abs(rep.partial_sum - *rep.predicted_limit);
            if (d_half > 0.0 && d_full > 0.0) rep.convergence_rate_estimate = std::log2(d_half / d_full);
        }
    }
    return rep;
}

std::vector<Complex> partial_trace_sequence(const OperatorFamily& family, Complex z, int p, int N) {
    if (p != 0 && p != 1) throw Error(ErrorCode::InvalidParameter, "trace order p must be 0 or 1");
    const PolishedSpectrum ps = polished_left_spectrum(family, z, N);
    return sequence_from(family, ps, z, p, N, 1);
}

std::array<double, 3> trace_limit(const OperatorFamily& family) {
    const double a = family.growth_alpha();
    if (a > 0.5) throw Error(ErrorCode::AlphaOutOfRange, "the trace limit is only known for alpha <= 1/2");
    if (a < 0.5) return {0.0, 0.0, 0.0};
    const EllEstimate e = ell_limit(family);
    if (!e.value)
        throw Error(ErrorCode::NoLimit, "p_k / k has no limit (fit spread " + format_double(e.spread) + ")");
    return {0.0, 0.0, -*e.value / 2.0};
}

double cumulative_deviation(const OperatorFamily& family, Complex z, int n) {
    const Eigen::VectorXcd left = left_of_line_eigenvalues(family, z, n, std::max(64, 8 * n));
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < left.size(); ++i) s += left(i);
    for (int k = 1; k <= n; ++k) s -= family.q(k);
    return std::abs(s);
}

} // namespace trispec
