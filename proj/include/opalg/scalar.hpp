#pragma once

#include "opalg/rational.hpp"

namespace opalg {

// Coefficient of a term: gaussian rational times integer powers of hbar and c.
// The zero scalar is canonical: value (0,0) with both exponents zero.
struct Scalar {
    GaussRat q;
    int hbar_exp = 0;
    int c_exp = 0;

    Scalar() = default;
    Scalar(GaussRat v, int hb = 0, int c = 0) : q(std::move(v)), hbar_exp(hb), c_exp(c) {
        canonicalize();
    }

    static Scalar one() { return Scalar(GaussRat(Rational(1))); }
    static Scalar zero() { return Scalar(); }
    static Scalar rational(Rational r) { return Scalar(GaussRat(std::move(r))); }
    static Scalar integer(long long n) { return rational(Rational(n)); }
    static Scalar i_unit() { return Scalar(GaussRat::i_unit()); }
    static Scalar hbar(int k = 1) { return Scalar(GaussRat(Rational(1)), k, 0); }
    static Scalar c(int k = 1) { return Scalar(GaussRat(Rational(1)), 0, k); }

    bool is_zero() const { return q.is_zero(); }
    bool is_one() const { return q.re.is_one() && q.im.is_zero() && hbar_exp == 0 && c_exp == 0; }

    Scalar operator-() const { return Scalar(-q, hbar_exp, c_exp); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.q * b.q, a.hbar_exp + b.hbar_exp, a.c_exp + b.c_exp);
    }

    // 1/s, defined because units are invertible and q is a field element.
    Scalar inverse() const {
        return Scalar(q.inverse(), -hbar_exp, -c_exp);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.q == b.q && a.hbar_exp == b.hbar_exp && a.c_exp == b.c_exp;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void canonicalize() {
        if (q.is_zero()) {
            hbar_exp = 0;
            c_exp = 0;
        }
    }
};

}  // namespace opalg
