#include "trispec/numeric.hpp"
#include "trispec/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trispec {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Rational parse_decimal(const std::string& s) {
    using boost::multiprecision::mpz_int;
    size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    int scale = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) ++scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw Error(ErrorCode::InvalidParameter, "not a number: '" + s + "'");
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::string rest = s.substr(i + 1);
        if (rest.empty() || rest == "+") throw Error(ErrorCode::InvalidParameter, "bad exponent in '" + s + "'");
        auto [ptr, ec] = std::from_chars(rest.data() + (rest[0] == '+' ? 1 : 0), rest.data() + rest.size(), exponent);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            throw Error(ErrorCode::InvalidParameter, "bad exponent in '" + s + "'");
        i = s.size();
    }
    if (i != s.size()) throw Error(ErrorCode::InvalidParameter, "trailing characters in '" + s + "'");
    // a leading zero would make the mpz constructor read octal
    auto first = digits.find_first_not_of('0');
    mpz_int num(first == std::string::npos ? std::string("0") : digits.substr(first));
    long shift = exponent - scale;
    Rational r(num);
    mpz_int ten_pow = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(std::labs(shift)));
    if (shift >= 0)
        r *= Rational(ten_pow);
    else
        r /= Rational(ten_pow);
    return negative ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_decimal(s);
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::InvalidParameter, "zero denominator in '" + s + "'");
    return num / den;
}

std::string to_string(const Rational& value) {
    auto den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string format_high(const HighFloat& value) {
    std::ostringstream os;
    os.precision(36);
    os << value;
    return os.str();
}

Complex parse_complex(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw Error(ErrorCode::InvalidParameter, "empty complex literal");
    if (s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorCode::InvalidParameter, "bad complex literal '" + s + "'");
        std::string inner = s.substr(1, s.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::InvalidParameter, "bad complex literal '" + s + "'");
        return {to_double(parse_rational(inner.substr(0, comma))), to_double(parse_rational(inner.substr(comma + 1)))};
    }
    if (s.back() != 'i' && s.back() != 'j') return {to_double(parse_rational(s)), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not part of an exponent and not leading
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return to_double(parse_rational(t));
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {to_double(parse_rational(body.substr(0, split))), imag_of(body.substr(split))};
}

std::string format_complex(Complex value) {
    return "[" + format_double(value.real()) + "," + format_double(value.imag()) + "]";
}

bool two_alpha_is_integer(double alpha) {
    double twice = 2.0 * alpha;
    return std::isfinite(twice) && twice == std::round(twice);
}

} // namespace trispec
