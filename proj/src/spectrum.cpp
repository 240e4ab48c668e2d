#include "trispec/spectrum.hpp"
#include "trispec/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

namespace trispec {

void sort_spectrum(Eigen::VectorXcd& values) {
    std::sort(values.data(), values.data() + values.size(), [](const Complex& a, const Complex& b) {
        return std::make_tuple(a.real(), a.imag()) < std::make_tuple(b.real(), b.imag());
    });
}

Eigen::VectorXcd eigenvalues(const TruncatedMatrix& m) {
    Eigen::VectorXcd e(std::max(m.N - 1, 0));
    for (int k = 0; k + 1 < m.N; ++k) e(k) = std::sqrt(m.super(k) * m.sub(k));
    Eigen::VectorXcd values = complex_symmetric_tridiagonal_eigenvalues(m.diag, e);
    sort_spectrum(values);
    return values;
}

Eigen::VectorXcd eigenvalues(const OperatorFamily& family, Complex z, int N) {
    return eigenvalues(truncate(family, z, N));
}

double inverse_iteration_residual(const TruncatedMatrix& m, Complex lambda) {
    const int N = m.N;
    const double norm = std::max(m.frobenius_norm(), std::numeric_limits<double>::min());
    const double eps = std::numeric_limits<double>::epsilon();
    Eigen::VectorXcd shifted = m.diag.array() - lambda;
    // tiny perturbation keeps the factorization finite at an exact eigenvalue
    const Complex nudge = Complex(1.0, 0.5) * (eps * norm);
    Eigen::VectorXcd factored = shifted.array() - nudge;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(N) / std::sqrt(static_cast<double>(N));
    for (int it = 0; it < 3; ++it) {
        v = solve_tridiagonal(m.sub, factored, m.super, v, eps * norm);
        const double vn = v.norm();
        if (!(vn > 0.0) || !std::isfinite(vn)) return std::numeric_limits<double>::infinity();
        v /= vn;
    }
    Eigen::VectorXcd r = shifted.cwiseProduct(v);
    if (N > 1) {
        r.head(N - 1) += m.super.cwiseProduct(v.tail(N - 1));
        r.tail(N - 1) += m.sub.cwiseProduct(v.head(N - 1));
    }
    return r.norm() / norm;
}

SpectrumResult spectrum(const TruncatedMatrix& matrix, double tol) {
    if (matrix.N < 1) throw Error(ErrorCode::InvalidParameter, "N must be >= 1");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "tol must be > 0");
    SpectrumResult result;
    result.z = matrix.z;
    result.N = matrix.N;
    result.residual_tol = tol;
    result.eigenvalues = eigenvalues(matrix);
    result.residuals.resize(matrix.N);
    for (int k = 0; k < matrix.N; ++k) {
        const double res = inverse_iteration_residual(matrix, result.eigenvalues(k));
        result.residuals(k) = res;
        if (!(res <= tol))
            throw Error(ErrorCode::NoConvergence, "eigenvalue " + std::to_string(k) + " failed residual check (" +
                                                      format_double(res) + " > " + format_double(tol) + ")");
    }
    return result;
}

double hausdorff_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() == 0 || b.size() == 0)
        return a.size() == b.size() ? 0.0 : std::numeric_limits<double>::infinity();
    auto directed = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
        double worst = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) worst = std::max(worst, (y.array() - x(i)).abs().minCoeff());
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double multiset_matching_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const Eigen::Index n = a.size();
    std::vector<std::tuple<double, Eigen::Index, Eigen::Index>> pairs;
    pairs.reserve(static_cast<size_t>(n * n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) pairs.emplace_back(std::abs(a(i) - b(j)), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_a(n, false), used_b(n, false);
    double worst = 0.0;
    Eigen::Index matched = 0;
    for (const auto& [dist, i, j] : pairs) {
        if (used_a[i] || used_b[j]) continue;
        used_a[i] = used_b[j] = true;
        worst = std::max(worst, dist);
        if (++matched == n) break;
    }
    return worst;
}

} // namespace trispec
