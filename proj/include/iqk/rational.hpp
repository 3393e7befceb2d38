#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iqk {

// Exact rational numbers, canonical form: gcd(|num|, den) = 1, den >= 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const std::string& s) : q_(s) { q_.canonicalize(); }

    static Rational from_mpz(const mpz_class& n) { return Rational(mpq_class(n)); }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    // "n" or "n/d"
    std::string str() const { return q_.get_str(); }

    size_t hash() const {
        // cheap but adequate: fold limbs of num and den
        auto fold = [](const mpz_class& z) {
            size_t h = static_cast<size_t>(mpz_fdiv_ui(z.get_mpz_t(), 0x7fffffffULL));
            return h ^ (static_cast<size_t>(mpz_sgn(z.get_mpz_t()) + 1) << 30);
        };
        return fold(q_.get_num()) * 1000003u ^ fold(q_.get_den());
    }

private:
    mpq_class q_;
};

// gcd of rationals as "content": gcd of numerators / lcm-free, used for content
// extraction of integer-normalised polynomial rows.
inline mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline mpz_class int_lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace iqk
