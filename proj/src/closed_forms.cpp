#include "trispec/closed_forms.hpp"

#include "trispec/window.hpp"

#include <cmath>
#include <functional>

namespace trispec {

namespace {

template <class S>
struct General {
    std::function<S(int)> p; // p(j) = j^{2 alpha}, zero for j < 1
    int n;

    S N(int a, int b) const { return S(a * n + b); }

    S a2() const { return p(n - 1) / N(2, -1) - p(n) / N(2, 1); }

    S sigma3() const {
        const S m = N(2, -1), pl = N(2, 1);
        return p(n - 1) / (m * m) + p(n) / (pl * pl);
    }

    S a4() const {
        const S m = N(2, -1), pl = N(2, 1);
        S out = -a2() * sigma3() - p(n) * p(n + 1) / (pl * pl * N(4, 4));
        if (n >= 3) out += p(n - 1) * p(n - 2) / (m * m * N(4, -4));
        return out;
    }

    S sigma1() const {
        const S m = N(2, -1), pl = N(2, 1), f4p = N(4, 4);
        S out = -p(n) * p(n + 1) * p(n + 1) / (pl * pl * pl * f4p * f4p) -
                p(n) * p(n + 1) * p(n + 2) / (pl * pl * f4p * f4p * N(6, 9));
        if (n >= 3) {
            const S f4m = N(4, -4);
            out += p(n - 1) * p(n - 2) * p(n - 2) / (m * m * m * f4m * f4m);
            if (n >= 4) out += p(n - 1) * p(n - 2) * p(n - 3) / (m * m * f4m * f4m * N(6, -9));
        }
        return out;
    }

    S sigma2() const {
        const S m = N(2, -1), pl = N(2, 1), f4p = N(4, 4);
        // the last pair carries a factor a_2(n): it comes from the zeta^2 term
        // of the z^2 part, which is a_2^2 z^4
        S out = p(n) * p(n + 1) / (pl * pl * f4p) * (S(2) / pl + S(1) / f4p) +
                a2() * (p(n) / (pl * pl * pl) - p(n - 1) / (m * m * m));
        if (n >= 3) {
            const S f4m = N(4, -4);
            out += p(n - 1) * p(n - 2) / (m * m * f4m) * (S(2) / m + S(1) / f4m);
        }
        return out;
    }

    S a6() const { return sigma1() - a2() * sigma2() - a4() * sigma3(); }
};

Rational ipow(long long base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational half_special(int n, int k) {
    const Rational N(n);
    switch (k) {
    case 2:
        return Rational(-1) / (4 * N * N - 1);
    case 4:
        return Rational(1) / (4 * ipow(2 * n + 1, 3)) - Rational(1) / (4 * ipow(2 * n - 1, 3));
    case 6:
        return psi(n) - psi(n - 1);
    case 8: {
        const Rational n2 = N * N;
        const Rational num = -327 - 16080 * n2 - 63136 * n2 * n2 + 29440 * n2 * n2 * n2 + 39168 * n2 * n2 * n2 * n2;
        const Rational den = 32 * (N - 1) * (N + 1) * (2 * N - 3) * (2 * N + 3) * ipow(2 * n - 1, 7) * ipow(2 * n + 1, 7);
        return num / den;
    }
    case 10: {
        const Rational n2 = N * N, n4 = n2 * n2;
        const Rational num = 3915 + 280676 * n2 + 2496992 * n4 + 2635904 * n4 * n2 - 3111168 * n4 * n4 -
                             1158144 * n4 * n4 * n2;
        const Rational den = 8 * (N - 1) * (N + 1) * (2 * N - 3) * (2 * N + 3) * (2 * N - 5) * (2 * N + 5) *
                             ipow(2 * n - 1, 9) * ipow(2 * n + 1, 9);
        return num / den;
    }
    default:
        break;
    }
    throw Error(ErrorCode::UnsupportedOrder, "no alpha = 1/2 formula for k = " + std::to_string(k));
}

/// n = 1 values, where the general formulas are not stated.
template <class S>
S first_branch(int k, const std::function<S(int)>& p) {
    // p(1) = 1, p(2) = 2^{2 alpha}, p(3) = 3^{2 alpha}
    const S p2 = p(2), p3 = p(3);
    switch (k) {
    case 2:
        return S(-1) / S(3);
    case 4:
        return S(1) / S(27) - p2 / S(72);
    case 6:
        return -p2 * p2 / S(27 * 64) - p2 * p3 / S(27 * 64 * 5) + p2 / S(3 * 64) - S(2) / S(243);
    default:
        throw Error(ErrorCode::UnsupportedOrder, "no n = 1 formula for k = " + std::to_string(k));
    }
}

template <class S>
S general_coefficient(const std::function<S(int)>& p, int n, int k) {
    if (n == 1) return first_branch<S>(k, p);
    General<S> g{p, n};
    switch (k) {
    case 2:
        return g.a2();
    case 4:
        return g.a4();
    case 6:
        return g.a6();
    default:
        throw Error(ErrorCode::UnsupportedOrder, "general-alpha formulas stop at k = 6");
    }
}

int general_floor(int k) { return k == 2 ? 2 : k == 4 ? 3 : 4; }

void check_order(int k, bool half) {
    if (k < 2 || k > 10 || (k > 6 && !half))
        throw Error(ErrorCode::UnsupportedOrder,
                    "no closed form for k = " + std::to_string(k) + (half ? "" : " at this alpha"));
}

} // namespace

int closed_form_floor(int k, bool half, ClosedForm form) {
    check_order(k, half);
    if (form == ClosedForm::HalfSpecial || (form == ClosedForm::Auto && half && k >= 8)) {
        if (!half) throw Error(ErrorCode::UnsupportedOrder, "alpha = 1/2 formulas need alpha = 1/2");
        return k == 2 ? 1 : k <= 6 ? 2 : 3;
    }
    return general_floor(k);
}

Rational psi(int n) {
    if (n < 1) return Rational(0);
    return Rational(-1) / ((2 * n - 1) * ipow(2 * n + 1, 5) * (2 * n + 3));
}

namespace {

template <class S>
Coefficient select(const std::function<S(int)>& p, bool half, int n, int k, ClosedForm form,
                   const std::function<Coefficient(int, int)>& special) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    if (k % 2 != 0 && k > 0) return Coefficient(S(0));
    check_order(k, half);
    if (form == ClosedForm::HalfSpecial && !half)
        throw Error(ErrorCode::UnsupportedOrder, "alpha = 1/2 formulas need alpha = 1/2");
    const bool use_half = form == ClosedForm::HalfSpecial || (half && k >= 8);
    if (use_half) {
        const int floor = closed_form_floor(k, true, ClosedForm::HalfSpecial);
        if (n < floor) {
            if (n == 1 && k <= 6) return Coefficient(first_branch<S>(k, p));
            throw Error(ErrorCode::FormulaFloor, "k = " + std::to_string(k) + " formula holds for n >= " +
                                                     std::to_string(floor) + "; use the branch-equation solver");
        }
        return special(n, k);
    }
    // general formulas, with the stated n = 1 values and alpha = 1/2 fallbacks
    if (n == 1) return Coefficient(first_branch<S>(k, p));
    if (n < general_floor(k)) {
        if (form == ClosedForm::Auto && half) return special(n, k);
        throw Error(ErrorCode::FormulaFloor, "k = " + std::to_string(k) + " formula holds for n >= " +
                                                 std::to_string(general_floor(k)) +
                                                 "; use the branch-equation solver");
    }
    return Coefficient(general_coefficient<S>(p, n, k));
}

} // namespace

Coefficient closed_coefficient(const Rational& alpha, int n, int k, ClosedForm form) {
    if (alpha < 0 || alpha >= 2) throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 2)");
    const Rational two_alpha = 2 * alpha;
    const bool half = alpha == Rational(1, 2);
    if (boost::multiprecision::denominator(two_alpha) == 1) {
        const int e = static_cast<int>(boost::multiprecision::numerator(two_alpha).convert_to<long>());
        std::function<Rational(int)> p = [e](int j) { return j < 1 ? Rational(0) : ipow(j, e); };
        return select<Rational>(p, half, n, k, form,
                                [](int nn, int kk) { return Coefficient(half_special(nn, kk)); });
    }
    const HighFloat ta = from_rational<HighFloat>(two_alpha);
    std::function<HighFloat(int)> p = [ta](int j) {
        return j < 1 ? HighFloat(0) : HighFloat(boost::multiprecision::pow(HighFloat(j), ta));
    };
    return select<HighFloat>(p, false, n, k, form, [](int, int) -> Coefficient {
        throw Error(ErrorCode::UnsupportedOrder, "alpha = 1/2 formulas need alpha = 1/2");
    });
}

Coefficient closed_coefficient(double alpha, int n, int k, ClosedForm form) {
    if (!(alpha >= 0.0 && alpha < 2.0)) throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 2)");
    if (two_alpha_is_integer(alpha)) return closed_coefficient(Rational(std::lround(2 * alpha), 2), n, k, form);
    const HighFloat ta = HighFloat(2.0 * alpha);
    std::function<HighFloat(int)> p = [ta](int j) {
        return j < 1 ? HighFloat(0) : HighFloat(boost::multiprecision::pow(HighFloat(j), ta));
    };
    return select<HighFloat>(p, false, n, k, form, [](int, int) -> Coefficient {
        throw Error(ErrorCode::UnsupportedOrder, "alpha = 1/2 formulas need alpha = 1/2");
    });
}

namespace {

template <class S>
S phi_value(const OperatorFamily& family, int k, int n) {
    auto p = [&](int j) { return family.coupling_as<S>(j); };
    const S pl(2 * n + 1);
    if (k == 2) return -p(n) / pl;
    return p(n) * p(n) / (pl * pl * pl) - p(n) * p(n + 1) / (pl * pl * S(4 * n + 4)) -
           p(n - 1) * p(n) / (S(4 * n) * pl * pl);
}

} // namespace

Coefficient phi_closed(const OperatorFamily& family, int k, int n, Backend backend) {
    if (k != 2 && k != 4) throw Error(ErrorCode::UnsupportedOrder, "phi closed forms exist for k = 2, 4 only");
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
    require_square_diagonal(family);
    if (resolve_backend(family, n + 1, backend) == Backend::Exact) return phi_value<Rational>(family, k, n);
    return phi_value<HighFloat>(family, k, n);
}

} // namespace trispec
