#include "trispec/window.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <functional>
#include <numbers>

namespace trispec {

void require_square_diagonal(const OperatorFamily& family) {
    if (!family.q_is_k_squared())
        throw Error(ErrorCode::UnsupportedFamily, "localization regions assume q_k = k^2; got " + family.describe());
}

namespace {

Eigen::VectorXcd select(const Eigen::VectorXcd& ev, const std::function<bool(Complex)>& keep) {
    std::vector<Complex> out;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        if (keep(ev(k))) out.push_back(ev(k));
    Eigen::VectorXcd v(static_cast<Eigen::Index>(out.size()));
    for (size_t k = 0; k < out.size(); ++k) v(static_cast<Eigen::Index>(k)) = out[k];
    return v;
}

int capped(const OperatorFamily& family, int N) {
    return family.max_index() > 0 ? std::min(N, family.max_index()) : N;
}

WindowResult adaptive_window(const OperatorFamily& family, Complex z, int n, double tol, bool require_disk) {
    require_square_diagonal(family);
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    const Regions reg = regions(family, n);
    if (require_disk && !region_contains(reg, z, Region::Delta))
        throw Error(ErrorCode::ZOutsideDisk, "|z| = " + format_double(std::abs(z)) + " exceeds R_n = " +
                                                 format_double(reg.R_n));
    const double M = family.growth_M();
    const double a = family.growth_alpha();
    auto in_window = [&](Complex l) { return region_contains(reg, l, Region::W); };

    constexpr int kMaxN = 4096;
    int N = capped(family, std::max(64, 4 * n));
    Eigen::VectorXcd previous;
    bool have_previous = false;
    for (;;) {
        const double half = N / 2.0;
        const bool certified = 2.0 * M * std::max(2.0, std::pow(2.0, a)) * std::pow(half, a - 1.0) * std::abs(z) < 1.0;
        Eigen::VectorXcd window = select(eigenvalues(family, z, N), in_window);
        const bool count_ok = window.size() == n;
        if (count_ok && certified && have_previous && previous.size() == n &&
            hausdorff_distance(window, previous) < tol)
            return {window, N};
        const int next = capped(family, 2 * N);
        if (next == N || next > kMaxN) {
            if (!count_ok) throw CountMismatchError(n, static_cast<int>(window.size()));
            if (next == N) return {window, N};
            throw Error(ErrorCode::NoConvergence, "window set not stable up to N = " + std::to_string(N));
        }
        previous = window;
        have_previous = true;
        N = next;
    }
}

} // namespace

WindowResult window_eigenvalues_detailed(const OperatorFamily& family, Complex z, int n, double tol) {
    return adaptive_window(family, z, n, tol, true);
}

WindowResult window_eigenvalues_counted(const OperatorFamily& family, Complex z, int n, double tol) {
    return adaptive_window(family, z, n, tol, false);
}

Eigen::VectorXcd window_eigenvalues(const OperatorFamily& family, Complex z, int n, double tol) {
    return window_eigenvalues_detailed(family, z, n, tol).values;
}

Eigen::VectorXcd left_of_line_eigenvalues(const OperatorFamily& family, Complex z, int n, int N) {
    require_square_diagonal(family);
    if (N <= 0) N = std::max(64, 4 * n);
    N = capped(family, N);
    const double line = double(n) * n + n;
    Eigen::VectorXcd left = select(eigenvalues(family, z, N), [&](Complex l) { return l.real() < line; });
    if (left.size() != n) throw CountMismatchError(n, static_cast<int>(left.size()));
    return left;
}

Complex resolvent_trace(const OperatorFamily& family, Complex z, Complex lambda, int N) {
    const Complex z2 = z * z;
    Complex r = 0.0, dr = 0.0, trace = 0.0;
    for (int k = 1; k <= N; ++k) {
        if (k == 1) {
            r = lambda - family.q(1);
            dr = 1.0;
        } else {
            const Complex w = z2 * family.coupling(k - 1) / r;
            const Complex dw = w * dr / r;
            r = lambda - family.q(k) - w;
            dr = 1.0 + dw;
        }
        if (std::abs(r) == 0.0) throw Error(ErrorCode::QuadratureFailure, "contour hits an eigenvalue");
        trace += dr / r;
    }
    return trace;
}

namespace {

using GL16 = boost::math::quadrature::gauss<double, 16>;
using Values = Eigen::VectorXcd;

Values gauss16(const std::function<Values(Complex)>& g, Complex a, Complex b) {
    const Complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const auto& x = GL16::abscissa();
    const auto& w = GL16::weights();
    Values sum;
    for (size_t i = 0; i < x.size(); ++i) {
        // boost stores the non-negative half of the symmetric rule
        Values term = x[i] == 0.0 ? g(mid) : Values(g(mid + half * x[i]) + g(mid - half * x[i]));
        sum = i == 0 ? Values(w[i] * term) : Values(sum + w[i] * term);
    }
    return sum * half;
}

/// Error is measured componentwise against tol[j].
Values adaptive(const std::function<Values(Complex)>& g, Complex a, Complex b, const Values& whole,
                const Eigen::VectorXd& tol, int depth) {
    const Complex m = 0.5 * (a + b);
    const Values left = gauss16(g, a, m), right = gauss16(g, m, b);
    const Values both = left + right;
    if (((both - whole).cwiseAbs().array() <= tol.array()).all()) return both;
    if (depth >= 40) throw Error(ErrorCode::QuadratureFailure, "adaptive quadrature did not settle");
    return adaptive(g, a, m, left, tol / 2, depth + 1) + adaptive(g, m, b, right, tol / 2, depth + 1);
}

} // namespace

std::vector<Complex> power_sums(const OperatorFamily& family, Complex z, int jmax, int n, SigmaMethod method,
                                double tol) {
    if (jmax < 1 || jmax > n) throw Error(ErrorCode::InvalidParameter, "power sums need 1 <= j <= n");
    // the disk is not required here: the window count is checked instead
    const WindowResult window = adaptive_window(family, z, n, std::max(tol, 1e-12), false);
    std::vector<Complex> out(jmax, 0.0);
    if (method == SigmaMethod::Eig) {
        for (Eigen::Index k = 0; k < window.values.size(); ++k) {
            Complex pw = 1.0;
            for (int j = 1; j <= jmax; ++j) out[j - 1] += (pw *= window.values(k));
        }
        return out;
    }

    const double nn = n;
    const double left = -nn, right = nn * nn + nn, height = nn;
    const Eigen::VectorXcd all = eigenvalues(family, z, window.N_used);
    for (Eigen::Index k = 0; k < all.size(); ++k) {
        const Complex l = all(k);
        const double dx = std::min(std::abs(l.real() - left), std::abs(l.real() - right));
        const double dy = std::abs(std::abs(l.imag()) - height);
        const bool near_vertical = dx < tol && std::abs(l.imag()) <= height + tol;
        const bool near_horizontal = dy < tol && l.real() >= left - tol && l.real() <= right + tol;
        if (near_vertical || near_horizontal)
            throw Error(ErrorCode::QuadratureFailure, "boundary of W_n passes within tol of an eigenvalue");
    }

    auto integrand = [&](Complex l) {
        const Complex t = resolvent_trace(family, z, l, window.N_used);
        Values v(jmax);
        Complex pw = t;
        for (int j = 0; j < jmax; ++j) v(j) = (pw *= l);
        return v;
    };
    Eigen::VectorXd abs_tol(jmax);
    for (int j = 1; j <= jmax; ++j) {
        double scale = 0.0;
        for (int k = 1; k <= n; ++k) scale += std::pow(double(k) * k, j);
        abs_tol(j - 1) = tol * std::max(1.0, scale);
    }

    const Complex corners[4] = {{left, -height}, {right, -height}, {right, height}, {left, height}};
    Values total = Values::Zero(jmax);
    for (int side = 0; side < 4; ++side) {
        const Complex a = corners[side], b = corners[(side + 1) % 4];
        const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / nn)));
        for (int p = 0; p < pieces; ++p) {
            const Complex s0 = a + (b - a) * (double(p) / pieces);
            const Complex s1 = a + (b - a) * (double(p + 1) / pieces);
            total += adaptive(integrand, s0, s1, gauss16(integrand, s0, s1), abs_tol / (4.0 * pieces), 0);
        }
    }
    for (int j = 0; j < jmax; ++j) out[j] = total(j) / Complex(0.0, 2.0 * std::numbers::pi);
    return out;
}

Complex power_sum_sigma(const OperatorFamily& family, Complex z, int j, int n, SigmaMethod method, double tol) {
    if (j < 1 || j > n) throw Error(ErrorCode::InvalidParameter, "power sum needs 1 <= j <= n");
    return power_sums(family, z, j, n, method, tol)[j - 1];
}

} // namespace trispec
