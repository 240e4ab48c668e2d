#include "trispec/taylor.hpp"

#include "trispec/regions.hpp"
#include "trispec/walks.hpp"
#include "trispec/window.hpp"

#include <cmath>
#include <algorithm>

namespace trispec {

double to_double(const Coefficient& c) {
    return std::visit([](const auto& v) { return to_double(v); }, c);
}

HighFloat to_high(const Coefficient& c) {
    if (const auto* r = std::get_if<Rational>(&c)) return from_rational<HighFloat>(*r);
    return std::get<HighFloat>(c);
}

std::string to_string(const Coefficient& c) {
    if (const auto* r = std::get_if<Rational>(&c)) return to_string(*r);
    return format_high(std::get<HighFloat>(c));
}

bool is_exact(const Coefficient& c) { return std::holds_alternative<Rational>(c); }

Backend resolve_backend(const OperatorFamily& family, int kmax, Backend requested) {
    if (requested == Backend::Float) return Backend::Float;
    const bool exact = family.exact_available(kmax);
    if (requested == Backend::Exact && !exact)
        throw Error(ErrorCode::ExactUnavailable, "exact arithmetic needs rational q_k and p_k; " + family.describe());
    return exact ? Backend::Exact : Backend::Float;
}

namespace {

/// W_L as a series in zeta: walks are grouped by their multiset of
/// intermediate displacements, which fixes the rational function.
template <class S>
Series<S> walk_sum(const OperatorFamily& family, int n, int L, int order) {
    std::map<std::vector<int>, S> grouped;
    for (const Walk& w : first_return_walks(n, L)) {
        std::vector<int> d = w.partial_sums();
        d.pop_back();
        std::sort(d.begin(), d.end());
        S weight(1);
        for (int i : w.up_step_origins()) weight *= family.coupling_as<S>(i);
        auto [it, inserted] = grouped.emplace(std::move(d), weight);
        if (!inserted) it->second += weight;
    }
    const S qn = family.q_as<S>(n);
    Series<S> out(order + 1, S(0));
    for (const auto& [deltas, weight] : grouped) {
        if (weight == S(0)) continue;
        Series<S> term = series_one<S>(order);
        for (size_t i = 0; i < deltas.size();) {
            size_t j = i;
            while (j < deltas.size() && deltas[j] == deltas[i]) ++j;
            const S gap = family.q_as<S>(n + deltas[i]) - qn;
            term = series_mul(term, series_inverse_power(S(-gap), static_cast<int>(j - i), order), order);
            i = j;
        }
        series_axpy(out, weight, term);
    }
    return out;
}

template <class S>
Series<S> right_hand_side(const BranchEquationState<S>& st) {
    const int order = st.order;
    int max_power = 0;
    for (const auto& [L, g] : st.walk_sums) max_power = std::max(max_power, static_cast<int>(g.size()) - 1);
    const auto powers = series_powers(st.zeta, max_power, order);
    Series<S> rhs(order + 1, S(0));
    for (const auto& [L, g] : st.walk_sums) {
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] == S(0)) continue;
            for (int m = L; m <= order; ++m) rhs[m] += g[i] * powers[i][m - L];
        }
    }
    return rhs;
}

} // namespace

template <class S>
BranchEquationState<S> solve_branch_state(const OperatorFamily& family, int n, int max_order, bool evenness_shortcut) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    if (max_order < 1) throw Error(ErrorCode::InvalidParameter, "order must be >= 1");
    const int step = evenness_shortcut ? 2 : 1;
    BranchEquationState<S> st;
    st.n = n;
    st.order = max_order;
    st.evenness_shortcut = evenness_shortcut;
    st.zeta.assign(max_order + 1, S(0));
    for (int L = step; L <= max_order; L += step) {
        // zeta = O(z^step), so zeta^i only matters for i <= (max_order - L) / step
        Series<S> g = walk_sum<S>(family, n, L, (max_order - L) / step);
        if (std::any_of(g.begin(), g.end(), [](const S& v) { return v != S(0); })) st.walk_sums.emplace(L, std::move(g));
    }
    for (int K = step; K <= max_order; K += step) {
        // the coefficient of z^K on the right only involves zeta_1..zeta_{K-1}
        BranchEquationState<S> partial = st;
        partial.order = K;
        partial.zeta.resize(K + 1);
        partial.zeta[K] = S(0);
        st.zeta[K] = right_hand_side(partial)[K];
    }
    return st;
}

template <class S>
Series<S> branch_equation_residual(const BranchEquationState<S>& state) {
    Series<S> rhs = right_hand_side(state);
    for (int m = 0; m <= state.order; ++m) rhs[m] -= state.zeta[m];
    return rhs;
}

template BranchEquationState<Rational> solve_branch_state<Rational>(const OperatorFamily&, int, int, bool);
template BranchEquationState<HighFloat> solve_branch_state<HighFloat>(const OperatorFamily&, int, int, bool);
template Series<Rational> branch_equation_residual<Rational>(const BranchEquationState<Rational>&);
template Series<HighFloat> branch_equation_residual<HighFloat>(const BranchEquationState<HighFloat>&);

TaylorSeries solve_branch_equation(const OperatorFamily& family, int n, int k_max, Backend backend) {
    if (k_max < 1) throw Error(ErrorCode::InvalidParameter, "k_max must be >= 1");
    const Backend b = resolve_backend(family, n + k_max + 1, backend);
    TaylorSeries ts;
    ts.n = n;
    ts.k_max = k_max;
    ts.M = family.growth_M();
    ts.alpha = family.growth_alpha();
    ts.exact = b == Backend::Exact;
    ts.q_n = family.q(n);
    auto fill = [&](const auto& st, auto q0) {
        ts.a.assign(1, Coefficient(q0));
        for (int k = 1; k <= k_max; ++k) ts.a.push_back(Coefficient(st.zeta[2 * k]));
    };
    if (ts.exact)
        fill(solve_branch_state<Rational>(family, n, 2 * k_max, true), family.q_as<Rational>(n));
    else
        fill(solve_branch_state<HighFloat>(family, n, 2 * k_max, true), family.q_as<HighFloat>(n));
    return ts;
}

const Rational& TaylorSeries::exact_coefficient(int k) const {
    if (const auto* r = std::get_if<Rational>(&a.at(k))) return *r;
    throw Error(ErrorCode::ExactUnavailable, "coefficient computed in floating point");
}

Complex TaylorSeries::partial_sum(Complex z, int upto) const {
    if (upto < 0 || upto > k_max) upto = k_max;
    const Complex z2 = z * z;
    Complex sum = 0.0;
    for (int k = upto; k >= 1; --k) sum = (sum + coefficient(k)) * z2;
    return q_n + sum;
}

double TaylorSeries::tail_bound(Complex z, int from_k) const { return trispec::tail_bound(M, alpha, n, z, from_k); }

std::pair<double, double> coefficient_bounds(const OperatorFamily& family, int n, int k) {
    if (n < 1 || k < 2) throw Error(ErrorCode::InvalidParameter, "coefficient bounds need n >= 1 and k >= 2");
    const double M = family.growth_M(), a = family.growth_alpha();
    const double e = 1.0 - (1.0 - a) * k;
    const double contour = 2.0 * (2.0 * k + 1.0) * std::pow(4.0 * M, k) * std::pow(double(n), e);
    const double disk = std::pow(8.0 * M, k) * std::pow(double(n), e);
    return {contour, disk};
}

double tail_bound(double M, double alpha, int n, Complex z, int from_k) {
    if (from_k < 1) throw Error(ErrorCode::InvalidParameter, "from_k must be >= 1");
    const double R = std::pow(double(n), 1.0 - alpha) / (8.0 * M);
    const double x = std::norm(z) / (R * R);
    if (x >= 1.0) throw Error(ErrorCode::Divergent, "|z| >= R_n, the coefficient bound series diverges");
    return n * std::pow(x, from_k) / (1.0 - x);
}

double tail_bound(const TaylorSeries& series, Complex z, int from_k) { return series.tail_bound(z, from_k); }

template <class S>
S phi_by_residues(const OperatorFamily& family, int n, int k) {
    require_square_diagonal(family);
    if (n < 1 || k < 2) throw Error(ErrorCode::InvalidParameter, "phi needs n >= 1 and k >= 2");
    if (k % 2) return S(0);
    S total(0);
    for (const Walk& w : crossing_walks(n, k)) {
        S weight(1);
        for (int i : w.up_step_origins()) weight *= family.coupling_as<S>(i);
        if (weight == S(0)) continue;
        // j_0 .. j_k with j_k = j_0: k + 1 resolvent factors
        std::map<int, int> mult;
        const std::vector<int> v = w.vertices();
        for (int j : v) ++mult[j];
        for (const auto& [pole, m] : mult) {
            if (pole > n) continue;
            const S a = family.q_as<S>(pole);
            // residue of lambda / prod (lambda - q_j)^{m_j} at lambda = a
            Series<S> f(m, S(0));
            f[0] = a;
            if (m > 1) f[1] = S(1);
            for (const auto& [other, mo] : mult) {
                if (other == pole) continue;
                f = series_mul(f, series_inverse_power(S(a - family.q_as<S>(other)), mo, m - 1), m - 1);
            }
            total += weight * f[m - 1];
        }
    }
    return total;
}

template Rational phi_by_residues<Rational>(const OperatorFamily&, int, int);
template HighFloat phi_by_residues<HighFloat>(const OperatorFamily&, int, int);

Coefficient phi_by_residues(const OperatorFamily& family, int n, int k, Backend backend) {
    if (resolve_backend(family, n + k / 2 + 1, backend) == Backend::Exact)
        return phi_by_residues<Rational>(family, n, k);
    return phi_by_residues<HighFloat>(family, n, k);
}

} // namespace trispec
