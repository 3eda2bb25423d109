#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace opalg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational; denominator kept positive and the pair reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Rational of(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    struct unchecked {};
    Rational(BigInt n, BigInt d, unchecked) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

// a + b*i with exact rational parts; i^2 = -1 folds into the pair.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i_unit() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return a + (-b); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }

    GaussRat inverse() const {
        Rational n = re * re + im * im;
        if (n.is_zero()) throw std::domain_error("inverse of zero gaussian rational");
        return GaussRat(re / n, -im / n);
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

}  // namespace opalg
