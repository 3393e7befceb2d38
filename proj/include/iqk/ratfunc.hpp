#pragma once

#include "iqk/laurent.hpp"

#include <stdexcept>
#include <string>

namespace iqk {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of Q(v) as a reduced fraction of Laurent polynomials.
// Canonical form: den is a genuine polynomial (nonzero constant term), monic in the
// leading (highest-exponent) coefficient, and gcd(num, den) is a unit. Equal values
// compare bit-identically.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly(1)) {}
    RatFunc(long c) : num_(LaurentPoly(c)), den_(LaurentPoly(1)) {}
    RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly(1)) {}
    RatFunc(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly(1)) {}
    RatFunc(LaurentPoly n, LaurentPoly d);

    static RatFunc v_pow(int e, Rational c = Rational(1)) { return RatFunc(LaurentPoly::v_pow(e, std::move(c))); }
    static RatFunc v() { return v_pow(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inv() const;
    RatFunc mul_v_pow(int e) const;  // multiply by v^e

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // exact evaluation at v = x; throws PoleError if den(x) = 0 or x = 0 with
    // negative powers present
    Rational eval(const Rational& x) const;
    // value at v = 1 of the reduced fraction; PoleError if den(1) = 0
    Rational limit_v1() const;

    size_t hash() const { return num_.hash() * 2246822519u ^ den_.hash(); }

    std::string str() const;                       // "num" or "(num)/(den)"
    static RatFunc parse(const std::string& text); // round-trips str()

private:
    void normalize();
    LaurentPoly num_, den_;
};

// quantum integer [n] = (v^n - v^-n)/(v - v^-1)
RatFunc q_int(int n);
// [n]! for n >= 0
RatFunc q_factorial(int n);
// quantum binomial [n; r] = [n][n-1]...[n-r+1] / [r]!, r >= 0
RatFunc q_binom(int n, int r);

}  // namespace iqk
