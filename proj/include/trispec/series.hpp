#pragma once

#include <algorithm>
#include <vector>

namespace trispec {

/// Truncated power series over a coefficient ring S; c[i] multiplies x^i.
template <class S>
using Series = std::vector<S>;

template <class S>
Series<S> series_one(int order) {
    Series<S> s(order + 1, S(0));
    s[0] = S(1);
    return s;
}

template <class S>
Series<S> series_mul(const Series<S>& a, const Series<S>& b, int order) {
    Series<S> out(order + 1, S(0));
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int i = 0; i < na && i <= order; ++i) {
        if (a[i] == S(0)) continue;
        for (int j = 0; j < nb && i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

template <class S>
void series_axpy(Series<S>& y, const S& w, const Series<S>& x) {
    if (y.size() < x.size()) y.resize(x.size(), S(0));
    for (size_t i = 0; i < x.size(); ++i) y[i] += w * x[i];
}

/// 1/(x - d) = -sum_i x^i / d^{i+1}, d != 0.
template <class S>
Series<S> series_inverse_linear(const S& d, int order) {
    Series<S> out(order + 1, S(0));
    S inv = S(1) / d;
    S pw = -inv;
    for (int i = 0; i <= order; ++i) {
        out[i] = pw;
        pw *= inv;
    }
    return out;
}

/// (x + d)^{-m} for d != 0.
template <class S>
Series<S> series_inverse_power(const S& d, int m, int order) {
    Series<S> base = series_inverse_linear(S(-d), order);
    // 1/(x - (-d)) = 1/(x + d)
    Series<S> out = series_one<S>(order);
    for (int k = 0; k < m; ++k) out = series_mul(out, base, order);
    return out;
}

/// Powers x^0..x^max_power of a series, each truncated at `order`.
template <class S>
std::vector<Series<S>> series_powers(const Series<S>& x, int max_power, int order) {
    std::vector<Series<S>> p;
    p.reserve(max_power + 1);
    p.push_back(series_one<S>(order));
    for (int i = 1; i <= max_power; ++i) p.push_back(series_mul(p.back(), x, order));
    return p;
}

} // namespace trispec
