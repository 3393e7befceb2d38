#pragma once

#include "iqk/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace iqk {

// Sparse Laurent polynomial in one variable v over Rational.
// Terms kept sorted by ascending exponent, no zero coefficients stored.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (!c.is_zero()) terms_.emplace_back(0, c);
    }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly v_pow(int e, Rational c = Rational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
    // nonzero scalar multiple of a single power of v
    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }
    const Rational& leading_coeff() const { return terms_.back().second; }
    const Rational& trailing_coeff() const { return terms_.front().second; }

    Rational coeff(int e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return Rational(0);
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->first < ib->first) r.terms_.push_back(*ia++);
            else if (ib->first < ia->first) r.terms_.push_back(*ib++);
            else {
                Rational c = ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia; ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.shifted_scaled(b.terms_[0].first, b.terms_[0].second);
        if (a.is_monomial()) return b.shifted_scaled(a.terms_[0].first, a.terms_[0].second);
        std::map<int, Rational> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                auto [it, fresh] = acc.try_emplace(ta.first + tb.first, Rational(0));
                it->second += ta.second * tb.second;
            }
        LaurentPoly r;
        for (auto& [e, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly shifted_scaled(int de, const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.emplace_back(t.first + de, t.second * c);
        return r;
    }

    // v^k * p with k chosen so the result is a polynomial with nonzero constant term.
    LaurentPoly to_poly() const {
        if (is_zero()) return {};
        return shifted_scaled(-min_exp(), Rational(1));
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    // divrem for honest polynomials (min_exp >= 0, b != 0)
    static void divrem(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
    // exact division; throws if not exact
    static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
    // monic gcd of a, b as polynomials (Laurent inputs shifted first)
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    // strip rational content: returns primitive integer-coefficient polynomial p
    // and sets content c such that *this = c * p. Zero maps to (0, 0).
    LaurentPoly primitive_part(Rational& content) const;

    size_t hash() const {
        size_t h = 1469598103u;
        for (const auto& t : terms_) {
            h = (h ^ static_cast<size_t>(t.first * 2654435761u)) * 16777619u;
            h = (h ^ t.second.hash()) * 16777619u;
        }
        return h;
    }

    std::string str() const;  // e.g. "v^2 + 1 + v^-2" (descending exponents)

private:
    std::vector<Term> terms_;
};

}  // namespace iqk
