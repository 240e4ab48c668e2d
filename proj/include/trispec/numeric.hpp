#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <string>
#include <type_traits>

namespace trispec {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::mpq_rational;
using HighFloat = boost::multiprecision::float128;
using HighComplex = boost::multiprecision::complex128;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <>
struct is_complex<HighComplex> : std::true_type {};

template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Real field underlying a (possibly complex) scalar type.
template <class T>
struct real_of {
    using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
    using type = T;
};
template <>
struct real_of<HighComplex> {
    using type = HighFloat;
};
template <class T>
using real_of_t = typename real_of<T>::type;

/// Parses "p/q", an integer, or a decimal literal ("0.05", "1e-3") exactly.
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Shortest decimal that round-trips a double.
std::string format_double(double value);

/// 36 significant digits, enough to round-trip float128.
std::string format_high(const HighFloat& value);

/// Parses "re+imi", "re-imi", "imi", "re", or the JSON form "[re,im]".
Complex parse_complex(const std::string& text);

std::string format_complex(Complex value);

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const HighFloat& v) { return v.convert_to<double>(); }
inline double to_double(double v) { return v; }

inline Complex to_complex(const HighComplex& v) {
    return {v.real().convert_to<double>(), v.imag().convert_to<double>()};
}

/// Converts an exact rational into a floating scalar type.
template <class F>
F from_rational(const Rational& v) {
    if constexpr (std::is_same_v<F, Rational>) {
        return v;
    } else if constexpr (std::is_same_v<F, HighFloat> || std::is_same_v<F, HighComplex>) {
        HighFloat num(boost::multiprecision::numerator(v).str());
        HighFloat den(boost::multiprecision::denominator(v).str());
        return F(num / den);
    } else {
        return F(v.convert_to<double>());
    }
}

/// True when 2*alpha is an integer, i.e. k^{2 alpha} is an integer for every k.
bool two_alpha_is_integer(double alpha);

} // namespace trispec
