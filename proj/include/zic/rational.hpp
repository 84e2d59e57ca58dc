#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zic {

/// Exact rational number over 64-bit integers, always stored normalized
/// (gcd 1, positive denominator). Intermediate products go through
/// __int128, which is plenty for the magnitudes this project handles
/// (level counts, dyadic entropies with denominator <= 2^24 * 24).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// mutualInfoBits and similar JSON fields always carry the denominator.
    std::string str_ratio() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Accepts "3", "-3", "3/4", and plain decimals like "0.25" (parsed exactly).
    static Rational parse(const std::string& text);

private:
    using i128 = __int128;

    static Rational make(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        Rational r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::size_t p1 = 0, p2 = 0;
        std::int64_t n = std::stoll(text.substr(0, slash), &p1);
        std::int64_t d = std::stoll(text.substr(slash + 1), &p2);
        if (p1 != slash || p2 != text.size() - slash - 1)
            throw std::invalid_argument("bad rational literal: " + text);
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t pos = 0;
        std::int64_t n = std::stoll(digits, &pos);
        if (pos != digits.size()) throw std::invalid_argument("bad rational literal: " + text);
        std::int64_t d = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) {
            if (d > INT64_MAX / 10) throw std::overflow_error("rational literal too precise: " + text);
            d *= 10;
        }
        return Rational(n, d);
    }
    std::size_t pos = 0;
    std::int64_t n = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad rational literal: " + text);
    return Rational(n);
}

}  // namespace zic
