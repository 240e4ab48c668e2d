#include "trispec/tridiagonal.hpp"
#include "trispec/error.hpp"

#include <cmath>
#include <limits>

namespace trispec {

Eigen::VectorXcd complex_symmetric_tridiagonal_eigenvalues(Eigen::VectorXcd d, Eigen::VectorXcd e, int max_sweeps) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return d;
    e.conservativeResize(n);
    e(n - 1) = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();

    Eigen::VectorXcd d_save, e_save;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int exceptional = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d(m)) + std::abs(d(m + 1));
                if (std::abs(e(m)) <= eps * dd || e(m) == 0.0) break;
            }
            if (m == l) break;
            if (++iter > max_sweeps)
                throw Error(ErrorCode::NoConvergence,
                            "QL iteration did not converge for eigenvalue " + std::to_string(l));

            Complex g = (d(l + 1) - d(l)) / (2.0 * e(l));
            Complex r = std::sqrt(g * g + 1.0);
            const Complex denom = std::abs(g + r) >= std::abs(g - r) ? g + r : g - r;
            if (exceptional > 0 || iter % 12 == 0) {
                // ad hoc shift to break cycles and isotropic stalls
                const double scale = std::abs(e(l)) * (1.0 + 0.37 * exceptional);
                g = d(m) - (d(l) + Complex(0.75 * scale, 0.43 * scale));
            } else {
                g = d(m) - d(l) + e(l) / denom;
            }

            d_save = d.segment(l, m - l + 1);
            e_save = e.segment(l, m - l + 1);
            Complex s = 1.0, c = 1.0, p = 0.0;
            bool breakdown = false;
            int i = m - 1;
            for (; i >= l; --i) {
                const Complex f = s * e(i);
                const Complex b = c * e(i);
                r = std::sqrt(f * f + g * g);
                const double size = std::abs(f) + std::abs(g);
                if (size == 0.0) {
                    // exact zero: split the matrix here
                    d(i + 1) -= p;
                    e(m) = 0.0;
                    break;
                }
                if (std::abs(r) < 1e-8 * size) {
                    breakdown = true;
                    break;
                }
                e(i + 1) = r;
                s = f / r;
                c = g / r;
                g = d(i + 1) - p;
                r = (d(i) - g) * s + 2.0 * c * b;
                p = s * r;
                d(i + 1) = g + p;
                g = c * r - b;
            }
            if (breakdown) {
                d.segment(l, m - l + 1) = d_save;
                e.segment(l, m - l + 1) = e_save;
                ++exceptional;
                continue;
            }
            exceptional = 0;
            if (i >= l) continue;
            d(l) -= p;
            e(l) = g;
            e(m) = 0.0;
        }
    }
    return d;
}

Eigen::VectorXcd solve_tridiagonal(const Eigen::VectorXcd& sub_in, const Eigen::VectorXcd& diag_in,
                                   const Eigen::VectorXcd& super_in, const Eigen::VectorXcd& rhs, double pivot_floor) {
    const int n = static_cast<int>(diag_in.size());
    Eigen::VectorXcd a = sub_in, b = diag_in, c = super_in, x = rhs;
    if (n == 1) {
        Complex piv = b(0) == 0.0 ? Complex(pivot_floor) : b(0);
        x(0) /= piv;
        return x;
    }
    Eigen::VectorXcd du2 = Eigen::VectorXcd::Zero(std::max(n - 2, 0));
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(b(i)) >= std::abs(a(i))) {
            if (b(i) == 0.0) b(i) = pivot_floor;
            const Complex fact = a(i) / b(i);
            b(i + 1) -= fact * c(i);
            x(i + 1) -= fact * x(i);
        } else {
            const Complex fact = b(i) / a(i);
            b(i) = a(i);
            const Complex temp = b(i + 1);
            b(i + 1) = c(i) - fact * temp;
            if (i < n - 2) {
                du2(i) = c(i + 1);
                c(i + 1) = -fact * c(i + 1);
            }
            c(i) = temp;
            const Complex xt = x(i);
            x(i) = x(i + 1);
            x(i + 1) = xt - fact * x(i + 1);
        }
    }
    if (b(n - 1) == 0.0) b(n - 1) = pivot_floor;
    x(n - 1) /= b(n - 1);
    x(n - 2) = (x(n - 2) - c(n - 2) * x(n - 1)) / b(n - 2);
    for (int i = n - 3; i >= 0; --i) x(i) = (x(i) - c(i) * x(i + 1) - du2(i) * x(i + 2)) / b(i);
    return x;
}

} // namespace trispec
