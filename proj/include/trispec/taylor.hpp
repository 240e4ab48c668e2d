#pragma once

#include "trispec/family.hpp"
#include "trispec/series.hpp"

#include <map>
#include <utility>
#include <variant>
#include <vector>

namespace trispec {

/// An exact rational or a float128 value.
using Coefficient = std::variant<Rational, HighFloat>;

double to_double(const Coefficient& c);
HighFloat to_high(const Coefficient& c);
std::string to_string(const Coefficient& c);
bool is_exact(const Coefficient& c);

enum class Backend { Auto, Exact, Float };

/// Order-by-order solution of zeta = sum_L z^L W_L(zeta), where zeta = E_n - q_n
/// and W_L is the sum over first-return walks of length L from n of
/// prod_{intermediate} 1/(zeta - (q_{n+delta} - q_n)) weighted by the couplings.
template <class S>
struct BranchEquationState {
    int n = 1;
    int order = 0; ///< highest power of z solved
    bool evenness_shortcut = true;
    Series<S> zeta;                     ///< zeta[m] multiplies z^m, zeta[0] = 0
    std::map<int, Series<S>> walk_sums; ///< L -> W_L expanded in zeta
};

/// With evenness_shortcut only even walk lengths and even z-orders are
/// visited; without it every order is solved and odd ones come out as
/// computed values (zero, since odd closed walks do not exist).
template <class S>
BranchEquationState<S> solve_branch_state(const OperatorFamily& family, int n, int max_order, bool evenness_shortcut);

/// sum_L z^L W_L(zeta(z)) - zeta(z) through z^order; all zero after a solve.
template <class S>
Series<S> branch_equation_residual(const BranchEquationState<S>& state);

/// Taylor coefficients a_{2k}(n), k = 1..k_max, of E_n at z = 0.
struct TaylorSeries {
    int n = 1;
    int k_max = 0;
    double M = 1.0;
    double alpha = 0.0;
    bool exact = false;
    double q_n = 1.0;
    std::vector<Coefficient> a; ///< a[k] = a_{2k}(n) for k >= 1; a[0] = q_n

    [[nodiscard]] double coefficient(int k) const { return to_double(a.at(k)); }
    [[nodiscard]] const Rational& exact_coefficient(int k) const;
    /// q_n + sum_{k=1}^{upto} a_{2k} z^{2k}; upto < 0 means k_max.
    [[nodiscard]] Complex partial_sum(Complex z, int upto = -1) const;
    [[nodiscard]] double tail_bound(Complex z, int from_k) const;
};

TaylorSeries solve_branch_equation(const OperatorFamily& family, int n, int k_max, Backend backend = Backend::Auto);

/// Both a-priori bounds on |a_k(n)| for even k >= 2: first the contour bound
/// 2(2k+1)(4M)^k n^{1-(1-alpha)k}, second (8M)^k n^{1-k(1-alpha)}.
std::pair<double, double> coefficient_bounds(const OperatorFamily& family, int n, int k);

/// sum_{k >= from_k} (8M)^{2k} n^{1-2k(1-alpha)} |z|^{2k} in closed form;
/// throws Divergent when |z| >= R_n.
double tail_bound(const TaylorSeries& series, Complex z, int from_k);
double tail_bound(double M, double alpha, int n, Complex z, int from_k);

/// phi_k(n) from the line-integral representation, evaluated by residues:
/// the sum over crossing walks of the residues left of Re lambda = n^2 + n.
template <class S>
S phi_by_residues(const OperatorFamily& family, int n, int k);

Coefficient phi_by_residues(const OperatorFamily& family, int n, int k, Backend backend);

/// Resolves Auto to Exact or Float for indices up to kmax.
Backend resolve_backend(const OperatorFamily& family, int kmax, Backend requested);

} // namespace trispec
