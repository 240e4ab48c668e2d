#include "trispec/family.hpp"

#include <cmath>
#include <sstream>

namespace trispec {

namespace {

constexpr int kCertificateProbe = 10000;

Rational rational_from_double(double v) {
    // exact binary value of the double
    return Rational(v);
}

} // namespace

OperatorFamily OperatorFamily::power(const Rational& alpha) {
    if (alpha < 0 || alpha >= 2)
        throw Error(ErrorCode::InvalidParameter, "power family needs alpha in [0,2), got " + to_string(alpha));
    OperatorFamily f;
    f.kind_ = FamilyKind::Power;
    f.M_ = 1.0;
    f.alpha_ = alpha.convert_to<double>();
    f.alpha_exact_ = alpha;
    return f;
}

OperatorFamily OperatorFamily::power(double alpha) {
    if (!(alpha >= 0.0 && alpha < 2.0))
        throw Error(ErrorCode::InvalidParameter, "power family needs alpha in [0,2), got " + format_double(alpha));
    OperatorFamily f = power(rational_from_double(alpha));
    return f;
}

OperatorFamily OperatorFamily::whittaker_hill(const Rational& t, Parity parity) {
    if (t < 0) throw Error(ErrorCode::InvalidParameter, "Whittaker-Hill needs t >= 0");
    OperatorFamily f;
    f.kind_ = FamilyKind::WhittakerHill;
    f.t_exact_ = t;
    f.parity_ = parity;
    f.alpha_ = 1.0;
    f.M_ = 1.0 + t.convert_to<double>();
    f.q_k_squared_ = parity == Parity::Even;
    return f;
}

OperatorFamily OperatorFamily::whittaker_hill(double t, Parity parity) {
    if (!(t >= 0.0 && std::isfinite(t))) throw Error(ErrorCode::InvalidParameter, "Whittaker-Hill needs t >= 0");
    return whittaker_hill(rational_from_double(t), parity);
}

OperatorFamily OperatorFamily::custom(CustomSequences seq, double M, double alpha) {
    if (!(M > 0.0 && std::isfinite(M)) || !std::isfinite(alpha))
        throw Error(ErrorCode::InvalidCertificate, "custom family needs a finite growth certificate (M > 0, alpha)");
    if (alpha >= 2.0)
        throw Error(ErrorCode::InvalidParameter, "alpha >= 2: the diagonal no longer dominates the off-diagonal");
    const bool has_b = static_cast<bool>(seq.b) || !seq.b_table.empty();
    const bool has_c = static_cast<bool>(seq.c) || !seq.c_table.empty();
    if (!has_b || !has_c) throw Error(ErrorCode::InvalidParameter, "custom family needs b and c");

    OperatorFamily f;
    f.kind_ = FamilyKind::Custom;
    f.M_ = M;
    f.alpha_ = alpha;
    f.max_index_ = -1;
    auto bound_table = [&](size_t len) {
        if (len == 0) return;
        int l = static_cast<int>(len);
        f.max_index_ = f.max_index_ < 0 ? l : std::min(f.max_index_, l);
    };
    if (!seq.b) bound_table(seq.b_table.size());
    if (!seq.c) bound_table(seq.c_table.size());
    if (!seq.q) bound_table(seq.q_table.size());
    f.custom_ = std::make_shared<const CustomSequences>(std::move(seq));

    const int probe = f.max_index_ < 0 ? kCertificateProbe : std::min(kCertificateProbe, f.max_index_);
    bool real = true;
    double prev_q = -INFINITY;
    bool k_squared = true;
    for (int k = 1; k <= probe; ++k) {
        const double cap = M * std::pow(static_cast<double>(k), alpha) * (1.0 + 1e-12);
        const Complex bk = f.b(k), ck = f.c(k);
        if (!(std::abs(bk) <= cap) || !(std::abs(ck) <= cap)) {
            std::ostringstream os;
            os << "|b_k| or |c_k| exceeds M k^alpha at k = " << k;
            throw Error(ErrorCode::InvalidCertificate, os.str());
        }
        const double qk = f.q(k);
        if (!(qk > prev_q)) throw Error(ErrorCode::InvalidCertificate, "q is not strictly increasing at k = " + std::to_string(k));
        prev_q = qk;
        if (qk != static_cast<double>(k) * k) k_squared = false;
        if ((bk * ck).imag() != 0.0) real = false;
    }
    f.real_couplings_ = real;
    f.q_k_squared_ = k_squared;
    return f;
}

void OperatorFamily::check_index(int k) const {
    if (max_index_ >= 0 && k > max_index_)
        throw Error(ErrorCode::InvalidParameter,
                    "index " + std::to_string(k) + " beyond custom table length " + std::to_string(max_index_));
}

double OperatorFamily::q(int k) const {
    switch (kind_) {
        case FamilyKind::Power: return static_cast<double>(k) * k;
        case FamilyKind::WhittakerHill:
            return parity_ == Parity::Even ? static_cast<double>(k) * k : static_cast<double>(2 * k + 1) * (2 * k + 1);
        case FamilyKind::Custom:
            check_index(k);
            if (custom_->q) return custom_->q(k);
            if (!custom_->q_table.empty()) return custom_->q_table[k - 1];
            return static_cast<double>(k) * k;
    }
    return 0.0;
}

Complex OperatorFamily::b(int k) const {
    if (k < 1) return 0.0;
    switch (kind_) {
        case FamilyKind::Power: return std::pow(static_cast<double>(k), alpha_);
        case FamilyKind::WhittakerHill: return t() - k;
        case FamilyKind::Custom:
            check_index(k);
            return custom_->b ? custom_->b(k) : custom_->b_table[k - 1];
    }
    return 0.0;
}

Complex OperatorFamily::c(int k) const {
    if (k < 1) return 0.0;
    switch (kind_) {
        case FamilyKind::Power: return std::pow(static_cast<double>(k), alpha_);
        case FamilyKind::WhittakerHill: return t() + k;
        case FamilyKind::Custom:
            check_index(k);
            return custom_->c ? custom_->c(k) : custom_->c_table[k - 1];
    }
    return 0.0;
}

Complex OperatorFamily::coupling(int k) const {
    if (k < 1) return 0.0;
    if (kind_ == FamilyKind::Power) return std::pow(static_cast<double>(k), 2.0 * alpha_);
    if (auto e = exact_coupling(k)) return e->convert_to<double>();
    return b(k) * c(k);
}

std::optional<Rational> OperatorFamily::exact_q(int k) const {
    switch (kind_) {
        case FamilyKind::Power:
        case FamilyKind::WhittakerHill: return Rational(static_cast<long long>(q(k)));
        case FamilyKind::Custom:
            check_index(k);
            if (custom_->exact_q) return custom_->exact_q(k);
            if (!custom_->q && custom_->q_table.empty()) return Rational(static_cast<long long>(k) * k);
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Rational> OperatorFamily::exact_coupling(int k) const {
    if (k < 1) return Rational(0);
    switch (kind_) {
        case FamilyKind::Power: {
            if (!alpha_exact_) return std::nullopt;
            Rational twice = 2 * *alpha_exact_;
            if (boost::multiprecision::denominator(twice) != 1) return std::nullopt;
            auto e = boost::multiprecision::numerator(twice).convert_to<unsigned>();
            boost::multiprecision::mpz_int base(k);
            return Rational(boost::multiprecision::pow(base, e));
        }
        case FamilyKind::WhittakerHill: return t_exact_ * t_exact_ - Rational(k) * k;
        case FamilyKind::Custom:
            check_index(k);
            if (custom_->exact_coupling) return custom_->exact_coupling(k);
            return std::nullopt;
    }
    return std::nullopt;
}

bool OperatorFamily::exact_available(int kmax) const {
    for (int k = 1; k <= kmax; ++k)
        if (!exact_coupling(k) || !exact_q(k)) return false;
    return true;
}

HighFloat OperatorFamily::power_coupling_high(int k) const {
    if (two_alpha_is_integer(alpha_)) {
        HighFloat r = 1;
        for (int e = static_cast<int>(2.0 * alpha_); e > 0; --e) r *= k;
        return r;
    }
    HighFloat a = alpha_exact_ ? from_rational<HighFloat>(*alpha_exact_) : HighFloat(alpha_);
    return boost::multiprecision::pow(HighFloat(k), 2 * a);
}

std::string OperatorFamily::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::Power:
            os << "power(alpha=" << (alpha_exact_ ? to_string(*alpha_exact_) : format_double(alpha_)) << ")";
            break;
        case FamilyKind::WhittakerHill:
            os << "whittaker-hill(t=" << to_string(t_exact_) << ", " << (parity_ == Parity::Even ? "even" : "odd")
               << ")";
            break;
        case FamilyKind::Custom:
            os << "custom(" << (custom_->label.empty() ? "unnamed" : custom_->label) << ", M=" << format_double(M_)
               << ", alpha=" << format_double(alpha_) << ")";
            break;
    }
    return os.str();
}

} // namespace trispec
