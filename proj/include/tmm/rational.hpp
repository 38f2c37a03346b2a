#ifndef TMM_RATIONAL_HPP
#define TMM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tmm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms, denominator always positive.
/// Comparisons cross-multiply; nothing here touches floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Smallest integer >= value.
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_)
            ++q;
        return q;
    }

    /// "num/den", always with the slash ("2/1" for integers).
    std::string str() const { return num_.str() + "/" + den_.str(); }

    /// Value pretty-printed: integers without the slash ("2", "5/2").
    std::string pretty() const { return den_ == 1 ? num_.str() : str(); }

    /// Decimal rendering rounded half away from zero; presentation only.
    std::string decimal(unsigned places = 6) const;

    /// Parses "num/den" or a bare integer.
    static Rational parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

inline std::string Rational::decimal(unsigned places) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i)
        scale *= 10;
    BigInt scaled_abs = (num_ < 0 ? BigInt(-num_) : num_) * scale;
    BigInt rounded = (scaled_abs + den_ / 2) / den_;
    const BigInt whole = rounded / scale;
    std::string frac = BigInt(rounded % scale).str();
    frac.insert(0, places > frac.size() ? places - frac.size() : 0, '0');
    std::string out;
    if (num_ < 0)
        out.push_back('-');
    out += whole.str();
    if (places > 0) {
        out.push_back('.');
        out += frac;
    }
    return out;
}

inline Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

} // namespace tmm

#endif
