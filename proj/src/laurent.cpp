#include "cqv/laurent.hpp"

#include <sstream>

#include "cqv/error.hpp"

namespace cqv {

std::string to_string(const Rational& q) { return q.get_str(); }

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

Rational LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long LaurentPoly::min_exponent() const { return terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

Rational LaurentPoly::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

LaurentPoly LaurentPoly::shift(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Long division from the top; b's lowest term fixes the window.
    LaurentPoly rem = a;
    LaurentPoly quot;
    const long bmax = b.max_exponent();
    const long bmin = b.min_exponent();
    const Rational lead = b.coeff(bmax);
    while (!rem.is_zero() && rem.max_exponent() - bmax >= rem.min_exponent() - bmin) {
        long e = rem.max_exponent() - bmax;
        Rational c = rem.coeff(rem.max_exponent()) / lead;
        quot.add_term(e, c);
        rem -= b.shift(e) * LaurentPoly(c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r(1);
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str() << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace cqv
