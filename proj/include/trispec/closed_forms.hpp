#pragma once

#include "trispec/family.hpp"
#include "trispec/taylor.hpp"

namespace trispec {

/// Which printed formula closed_coefficient evaluates. General uses the
/// expressions valid for every alpha, HalfSpecial the alpha = 1/2 rational
/// functions of n; Auto prefers General for k <= 6 and HalfSpecial above.
enum class ClosedForm { Auto, General, HalfSpecial };

/// a_k(alpha, n) for the power family from the closed forms. Exact when
/// 2 alpha is an integer. Odd k gives 0.
Coefficient closed_coefficient(const Rational& alpha, int n, int k, ClosedForm form = ClosedForm::Auto);
Coefficient closed_coefficient(double alpha, int n, int k, ClosedForm form = ClosedForm::Auto);

/// First n with a printed formula for (k, form); 1 when n = 1 has its own.
int closed_form_floor(int k, bool half, ClosedForm form);

/// phi_2(n) = -p_n/(2n+1) and
/// phi_4(n) = p_n^2/(2n+1)^3 - p_n p_{n+1}/((2n+1)^2 (4n+4)) - p_{n-1} p_n/(4n (2n+1)^2).
Coefficient phi_closed(const OperatorFamily& family, int k, int n, Backend backend = Backend::Auto);

/// psi(n) = -1/((2n-1)(2n+1)^5(2n+3)), whose differences give a_6(1/2, n).
Rational psi(int n);

} // namespace trispec
