#pragma once

#include "trispec/error.hpp"
#include "trispec/numeric.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trispec {

enum class FamilyKind { Power, WhittakerHill, Custom };
enum class Parity { Even, Odd };

/// User-supplied sequences for a custom pencil. Indices start at 1.
///
/// Either generators or tables may be given; tables take precedence when the
/// generator is empty. The exact_* hooks enable the rational backend.
struct CustomSequences {
    std::function<double(int)> q;
    std::function<Complex(int)> b;
    std::function<Complex(int)> c;
    std::function<std::optional<Rational>(int)> exact_q;
    std::function<std::optional<Rational>(int)> exact_coupling;

    std::vector<double> q_table;
    std::vector<Complex> b_table;
    std::vector<Complex> c_table;
    /// Exact copies of the tables when every entry is a real rational; kept
    /// for serialization, the exact_* hooks are what the solvers use.
    std::vector<Rational> exact_q_table;
    std::vector<Rational> exact_b_table;
    std::vector<Rational> exact_c_table;

    std::string label;
};

/// The pencil L + zB: diagonal q_k, B e_k = b_{k-1} e_{k-1} + c_k e_{k+1}.
class OperatorFamily {
public:
    static OperatorFamily power(const Rational& alpha);
    static OperatorFamily power(double alpha);
    static OperatorFamily whittaker_hill(const Rational& t, Parity parity);
    static OperatorFamily whittaker_hill(double t, Parity parity);
    /// Spot-checks |b_k|, |c_k| <= M k^alpha and monotone q on k = 1..10^4
    /// (or the table length); throws InvalidCertificate otherwise.
    static OperatorFamily custom(CustomSequences seq, double M, double alpha);

    [[nodiscard]] FamilyKind kind() const { return kind_; }
    [[nodiscard]] double growth_M() const { return M_; }
    [[nodiscard]] double growth_alpha() const { return alpha_; }
    [[nodiscard]] const std::optional<Rational>& exact_alpha() const { return alpha_exact_; }
    [[nodiscard]] double t() const { return t_exact_.convert_to<double>(); }
    [[nodiscard]] const Rational& t_exact() const { return t_exact_; }
    [[nodiscard]] Parity parity() const { return parity_; }
    [[nodiscard]] const CustomSequences* custom_sequences() const { return custom_.get(); }

    [[nodiscard]] double q(int k) const;
    [[nodiscard]] Complex b(int k) const;
    [[nodiscard]] Complex c(int k) const;
    /// p_k = b_k c_k, with p_k = 0 for k < 1.
    [[nodiscard]] Complex coupling(int k) const;

    [[nodiscard]] std::optional<Rational> exact_q(int k) const;
    [[nodiscard]] std::optional<Rational> exact_coupling(int k) const;
    /// True when q_k and p_k are exact rationals for k = 1..kmax.
    [[nodiscard]] bool exact_available(int kmax) const;
    [[nodiscard]] bool couplings_real() const { return real_couplings_; }
    [[nodiscard]] bool q_is_k_squared() const { return q_k_squared_; }
    /// Largest valid index, or -1 for unbounded generators.
    [[nodiscard]] int max_index() const { return max_index_; }

    /// q_k converted to a scalar type (double, Complex, HighFloat, HighComplex, Rational).
    template <class F>
    [[nodiscard]] F q_as(int k) const;
    /// p_k converted to a scalar type; real types require a real coupling.
    template <class F>
    [[nodiscard]] F coupling_as(int k) const;

    [[nodiscard]] std::string describe() const;

private:
    OperatorFamily() = default;
    void check_index(int k) const;
    [[nodiscard]] HighFloat power_coupling_high(int k) const;

    FamilyKind kind_ = FamilyKind::Power;
    double M_ = 1.0;
    double alpha_ = 0.0;
    std::optional<Rational> alpha_exact_;
    Rational t_exact_ = 0;
    Parity parity_ = Parity::Even;
    std::shared_ptr<const CustomSequences> custom_;
    bool real_couplings_ = true;
    bool q_k_squared_ = true;
    int max_index_ = -1;
};

template <class F>
F OperatorFamily::q_as(int k) const {
    if constexpr (std::is_same_v<F, Rational>) {
        auto e = exact_q(k);
        if (!e) throw Error(ErrorCode::ExactUnavailable, "q_" + std::to_string(k) + " is not exact");
        return *e;
    } else if constexpr (std::is_same_v<F, HighFloat> || std::is_same_v<F, HighComplex>) {
        if (auto e = exact_q(k)) return from_rational<F>(*e);
        return F(HighFloat(q(k)));
    } else {
        return F(q(k));
    }
}

template <class F>
F OperatorFamily::coupling_as(int k) const {
    if (k < 1) return F(0);
    if constexpr (std::is_same_v<F, Rational>) {
        auto e = exact_coupling(k);
        if (!e) throw Error(ErrorCode::ExactUnavailable, "p_" + std::to_string(k) + " is not exact");
        return *e;
    } else {
        if (kind_ == FamilyKind::Power) {
            if constexpr (std::is_same_v<F, HighFloat> || std::is_same_v<F, HighComplex>)
                return F(power_coupling_high(k));
            else
                return F(coupling(k).real());
        }
        if (auto e = exact_coupling(k)) return from_rational<F>(*e);
        Complex p = coupling(k);
        if constexpr (is_complex_v<F>) {
            using R = real_of_t<F>;
            return F(R(p.real()), R(p.imag()));
        } else {
            if (p.imag() != 0.0)
                throw Error(ErrorCode::UnsupportedFamily, "complex coupling requested as a real scalar");
            return F(p.real());
        }
    }
}

} // namespace trispec
