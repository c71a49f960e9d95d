#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace cqv {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Finite Laurent polynomial in t with exact rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants embed implicitly
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(long exponent, const Rational& coeff = 1);

    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coeff(long exponent) const;
    void add_term(long exponent, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    long min_exponent() const;  // requires !is_zero()
    long max_exponent() const;
    Rational coefficient_sum() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // t -> t^k (k may be negative)
    LaurentPoly substitute_power(long k) const;
    LaurentPoly shift(long k) const;

    // Exact quotient a/b if b divides a in Q[t, t^-1].
    friend std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned n);

// Unreduced quotient num/den; equality by cross-multiplication.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalFn(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::optional<LaurentPoly> as_polynomial() const { return divide_exact(num_, den_); }
    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace cqv
