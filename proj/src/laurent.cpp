#include "iqk/laurent.hpp"

#include <sstream>

namespace iqk {

Rational LaurentPoly::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (x.is_zero()) {
        if (min_exp() < 0) throw PoleErrorCompat();
        Rational c0(0);
        for (const auto& t : terms_)
            if (t.first == 0) c0 = t.second;
        return c0;
    }
    // Horner over the exponent gaps, from the highest exponent down.
    Rational acc(0);
    int prev_exp = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = 0; k < prev_exp - it->first; ++k) acc *= x;
        acc += it->second;
        prev_exp = it->first;
    }
    if (prev_exp > 0)
        for (int k = 0; k < prev_exp; ++k) acc *= x;
    else
        for (int k = 0; k < -prev_exp; ++k) acc /= x;
    return acc;
}

void LaurentPoly::divrem(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly::divrem: division by zero");
    q = LaurentPoly();
    r = a;
    const int db = b.max_exp();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.max_exp() >= db) {
        int e = r.max_exp() - db;
        Rational c = r.leading_coeff() / lb;
        LaurentPoly m = LaurentPoly::v_pow(e, c);
        q += m;
        r -= b.shifted_scaled(e, c);
    }
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return {};
    // allow Laurent operands: shift both to polynomials, track net shift
    int sa = a.min_exp(), sb = b.min_exp();
    LaurentPoly q, r;
    divrem(a.to_poly(), b.to_poly(), q, r);
    if (!r.is_zero()) throw std::domain_error("LaurentPoly::divexact: not divisible");
    return q.shifted_scaled(sa - sb, Rational(1));
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.to_poly(), y = b.to_poly();
    // primitive euclidean remainder sequence
    auto prim = [](LaurentPoly& p) {
        if (p.is_zero()) return;
        Rational c;
        p = p.primitive_part(c);
    };
    prim(x);
    prim(y);
    while (!y.is_zero()) {
        LaurentPoly q, r;
        divrem(x, y, q, r);
        x = std::move(y);
        y = r.to_poly();
        prim(y);
    }
    if (x.is_zero()) return {};
    // monic normalisation
    return x.shifted_scaled(0, Rational(1) / x.leading_coeff());
}

LaurentPoly LaurentPoly::primitive_part(Rational& content) const {
    if (is_zero()) {
        content = Rational(0);
        return {};
    }
    mpz_class gn = 0, gl = 1;
    for (const auto& t : terms_) {
        gn = int_gcd(gn, t.second.num());
        gl = int_lcm(gl, t.second.den());
    }
    Rational c(mpq_class(gn, gl));
    if (leading_coeff().sign() < 0) c = -c;
    LaurentPoly p;
    for (const auto& t : terms_) p.terms_.emplace_back(t.first, t.second / c);
    content = c;
    return p;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace iqk
