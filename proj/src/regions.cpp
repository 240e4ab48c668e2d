#include "trispec/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trispec {

Eigen::MatrixXcd TruncatedMatrix::dense() const {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < N; ++k) A(k, k) = diag(k);
    for (int k = 0; k + 1 < N; ++k) {
        A(k, k + 1) = super(k);
        A(k + 1, k) = sub(k);
    }
    return A;
}

double TruncatedMatrix::frobenius_norm() const {
    return std::sqrt(diag.squaredNorm() + super.squaredNorm() + sub.squaredNorm());
}

TruncatedMatrix truncate(const OperatorFamily& family, Complex z, int N) {
    if (N < 1) throw Error(ErrorCode::InvalidParameter, "truncation size must be >= 1");
    TruncatedMatrix m;
    m.N = N;
    m.z = z;
    m.diag.resize(N);
    m.super.resize(std::max(N - 1, 0));
    m.sub.resize(std::max(N - 1, 0));
    for (int k = 1; k <= N; ++k) m.diag(k - 1) = family.q(k);
    for (int k = 1; k < N; ++k) {
        m.super(k - 1) = z * family.b(k);
        m.sub(k - 1) = z * family.c(k);
    }
    return m;
}

Regions regions(const OperatorFamily& family, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "region index must be >= 1");
    Regions r;
    r.n = n;
    r.R_n = std::pow(static_cast<double>(n), 1.0 - family.growth_alpha()) / (8.0 * family.growth_M());
    r.pi_height = n + 2.0;
    return r;
}

bool region_contains(const Regions& r, Complex p, Region which) {
    const double n = r.n;
    const double n2 = n * n;
    switch (which) {
        case Region::Delta: return std::abs(p) <= r.R_n;
        case Region::K: return std::abs(p - n2) < n;
        case Region::H: return p.real() >= n2 - n && p.real() <= n2 + n;
        case Region::W: return p.real() > -n && p.real() < n2 + n && std::abs(p.imag()) < n;
        case Region::HLine: return p.real() == n2 + n;
        case Region::Pi: return std::abs(p.real() - n2) <= n && std::abs(p.imag()) <= r.pi_height;
    }
    return false;
}

double resolvent_norm_bound(const OperatorFamily& family, int n, Complex lambda) {
    Regions r = regions(family, n);
    if (!region_contains(r, lambda, Region::H) || region_contains(r, lambda, Region::K))
        throw Error(ErrorCode::LambdaOutsideDomain, "lambda must lie in H_n but outside K_n");
    const double M = family.growth_M();
    const double a = family.growth_alpha();
    const double nn = n;
    const double t = std::abs(lambda.imag());
    const double c = 2.0 * M * std::max(2.0, std::pow(2.0, a));
    double bound = c * std::pow(nn, a - 1.0);
    if (t >= nn && t <= nn * nn) bound = std::min(bound, c * std::pow(nn, a) / t);
    if (t >= nn * nn) bound = std::min(bound, 4.0 * M * std::pow(2.0, a) * std::pow(t, (a - 2.0) / 2.0));
    return bound;
}

double coupling_resolvent_sup(const OperatorFamily& family, Complex lambda, int K) {
    double sup = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double num = std::abs(family.b(k)) + std::abs(family.c(k - 1));
        const double den = std::abs(lambda - family.q(k));
        if (den == 0.0) return std::numeric_limits<double>::infinity();
        sup = std::max(sup, num / den);
    }
    return sup;
}

} // namespace trispec
