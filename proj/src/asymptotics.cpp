#include "trispec/asymptotics.hpp"

#include "trispec/continuation.hpp"
#include "trispec/regions.hpp"
#include "trispec/taylor.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace trispec {

ResidualFit fit_slope(std::string description, std::vector<std::pair<int, double>> samples, double target_slope,
                      double slope_tol) {
    if (samples.size() < 2) throw Error(ErrorCode::InvalidParameter, "slope fit needs at least two samples");
    ResidualFit fit;
    fit.description = std::move(description);
    fit.samples = std::move(samples);
    fit.target_slope = target_slope;
    fit.slope_tol = slope_tol;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(fit.samples.size());
    for (const auto& [n, r] : fit.samples) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw Error(ErrorCode::InvalidParameter, "slope fit needs positive residuals (n = " + std::to_string(n) + ")");
        const double x = std::log(double(n)), y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.fitted_intercept = (sy - fit.fitted_slope * sx) / m;
    fit.pass = std::abs(fit.fitted_slope - target_slope) <= slope_tol;
    return fit;
}

Complex eigen_deviation(const OperatorFamily& family, int n, Complex z, int N) {
    BranchOptions opt;
    opt.N = N > 0 ? N : std::max(512, 8 * n);
    return branch_deviation(family, n, z, opt);
}

Complex thm2_bracket(double a, Complex z, int n) {
    const double nn = n;
    return z * z *
           ((1 - 2 * a) / (2 * std::pow(nn, 2 - 2 * a)) + (a * a - a) / std::pow(nn, 3 - 2 * a) +
            (1 - 2 * a) * (8 * a * a - 14 * a + 3) / (24 * std::pow(nn, 4 - 2 * a)));
}

double thm2_target_slope(double a) { return std::max(2 * a - 5, 4 * a - 6); }

double thm2_residual(double alpha, Complex z, int n, int N) {
    if (!(alpha >= 0.0 && alpha <= 2.0 / 3.0)) throw Error(ErrorCode::AlphaOutOfRange, "the bracket expansion covers alpha in [0, 2/3]");
    if (z == Complex(0.0)) return 0.0;
    const OperatorFamily f = OperatorFamily::power(alpha);
    return std::abs(eigen_deviation(f, n, z, N) - thm2_bracket(alpha, z, n));
}

double thm4_residual(Complex z, int n, int N) {
    if (z == Complex(0.0)) return 0.0;
    const OperatorFamily f = OperatorFamily::power(Rational(1, 2));
    const double n2 = double(n) * n;
    const Complex z2 = z * z;
    return std::abs(eigen_deviation(f, n, z, N) + z2 / (4 * n2) + (2.0 * z2 + 3.0 * z2 * z2) / (32 * n2 * n2));
}

Complex P_k(int k, Complex z) {
    const Complex z2 = z * z, z4 = z2 * z2, z6 = z4 * z2, z8 = z4 * z4;
    switch (k) {
    case 1:
        return -z2 / 4.0;
    case 2:
        return -(2.0 * z2 + 3.0 * z4) / 32.0;
    case 3:
        return -(z2 + 5.0 * z4) / 64.0;
    case 4:
        return (-2.0 * z2 - 21.0 * z4 + 28.0 * z6) / 512.0;
    case 5:
        return (-8.0 * z2 - 144.0 * z4 + 1920.0 * z6 + 153.0 * z8) / 8192.0;
    case 6:
        return (-2.0 * z2 - 55.0 * z4 + 5192.0 * z6 + 880.0 * z8) / 8192.0;
    default:
        throw Error(ErrorCode::UnsupportedOrder, "P_k is tabulated for k = 1..6");
    }
}

int working_n_R(const OperatorFamily& family, Complex z) {
    for (int n = 1; n <= 1000000; ++n)
        if (std::abs(z) <= regions(family, n).R_n) return n;
    throw Error(ErrorCode::ZTooLarge, "no n <= 10^6 has z in Delta_n");
}

std::vector<PkFit> pk_expansion_check(const std::vector<Complex>& z_grid, const std::vector<int>& n_range, int terms,
                                      double rel_tol, double max_condition) {
    if (terms < 1 || terms > 6) throw Error(ErrorCode::InvalidParameter, "terms must be in 1..6");
    if (static_cast<int>(n_range.size()) < terms) throw Error(ErrorCode::InvalidParameter, "fewer samples than terms");
    const OperatorFamily f = OperatorFamily::power(Rational(1, 2));
    int n_min = n_range.front(), n_max = n_range.front();
    for (int n : n_range) {
        n_min = std::min(n_min, n);
        n_max = std::max(n_max, n);
    }
    // columns in x = (n_min/n)^2 keep the system scaled
    const int rows = static_cast<int>(n_range.size());
    Eigen::MatrixXd A(rows, terms);
    for (int i = 0; i < rows; ++i) {
        const double x = std::pow(double(n_min) / n_range[i], 2);
        double p = x;
        for (int j = 0; j < terms; ++j, p *= x) A(i, j) = p;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double cond = s(0) / s(s.size() - 1);
    if (!(cond <= max_condition))
        throw Error(ErrorCode::IllConditionedFit, "condition number " + format_double(cond) + " exceeds the threshold");

    std::vector<PkFit> out;
    for (Complex z : z_grid) {
        PkFit fit;
        fit.z = z;
        fit.terms = terms;
        fit.ns = n_range;
        fit.condition = cond;
        Eigen::VectorXd re(rows), im(rows);
        for (int i = 0; i < rows; ++i) {
            const Complex d = z == Complex(0.0) ? Complex(0.0) : eigen_deviation(f, n_range[i], z, 8 * n_max);
            re(i) = d.real();
            im(i) = d.imag();
        }
        const Eigen::VectorXd cre = svd.solve(re), cim = svd.solve(im);
        fit.pass = true;
        double scale = std::pow(double(n_min), 2);
        for (int j = 0; j < terms; ++j, scale *= double(n_min) * n_min) {
            const Complex rec = Complex(cre(j), cim(j)) * scale;
            const Complex exp = P_k(j + 1, z);
            fit.recovered.push_back(rec);
            fit.expected.push_back(exp);
            const double err = std::abs(exp) > 0.0 ? std::abs(rec - exp) / std::abs(exp) : std::abs(rec);
            fit.relative_error.push_back(err);
            if (!(err <= rel_tol)) fit.pass = false;
        }
        out.push_back(std::move(fit));
    }
    return out;
}

RadiusProbe radius_probe(const OperatorFamily& family, int n, int k_lo, int k_hi) {
    if (k_lo < 1 || k_hi <= k_lo) throw Error(ErrorCode::InvalidParameter, "need 1 <= k_lo < k_hi");
    RadiusProbe probe;
    probe.n = n;
    probe.R_n = regions(family, n).R_n;
    const TaylorSeries ts = solve_branch_equation(family, n, k_hi);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double a = std::abs(ts.coefficient(k));
        if (a == 0.0) continue;
        const double r = std::pow(a, -1.0 / (2.0 * k));
        probe.root_test.emplace_back(k, r);
        const double x = 1.0 / k;
        sx += x;
        sy += r;
        sxx += x * x;
        sxy += x * r;
        ++m;
    }
    if (m >= 2) {
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        probe.estimate = (sy - slope * sx) / m;
    } else if (m == 1) {
        probe.estimate = probe.root_test.front().second;
    } else {
        probe.estimate = std::numeric_limits<double>::infinity();
    }
    return probe;
}

ResidualFit coefficient_decay_fit(const OperatorFamily& family, int k, const std::vector<int>& ns, double target_slope,
                                  double slope_tol) {
    std::vector<std::pair<int, double>> samples;
    for (int n : ns) samples.emplace_back(n, std::abs(solve_branch_equation(family, n, k).coefficient(k)));
    return fit_slope("|a_" + std::to_string(2 * k) + "(n)| vs n", std::move(samples), target_slope, slope_tol);
}

} // namespace trispec
