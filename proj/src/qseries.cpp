#include "cqv/qseries.hpp"

#include "cqv/beads.hpp"
#include "cqv/error.hpp"

namespace cqv {

LaurentPoly q_int(long n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "[n]_t needs n >= 1");
    LaurentPoly p;
    for (long e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

LaurentPoly q_poch(long n, long step) {
    if (n < 0 || step < 1) throw Error(ErrorCode::InvalidArgument, "q_poch needs n >= 0 and step >= 1");
    LaurentPoly p(1);
    for (long i = 1; i <= n; ++i) p *= LaurentPoly(1) - LaurentPoly::monomial(step * i);
    return p;
}

LaurentPoly hook_length_poly(const Partition& mu) {
    LaurentPoly p(1);
    for (const Cell& c : cells(mu)) p *= LaurentPoly(1) - LaurentPoly::monomial(hook_length(mu, c));
    return p;
}

RationalFn schur_principal(const Partition& mu) {
    return RationalFn(LaurentPoly::monomial(n_stat(mu)), hook_length_poly(mu));
}

LaurentPoly fake_degree(const Multipartition& la) {
    const long l = static_cast<long>(la.l());
    LaurentPoly num = LaurentPoly::monomial(r_stat(la)) * q_poch(la.size(), l);
    LaurentPoly den(1);
    for (const auto& c : la.components()) {
        num = num.shift(l * n_stat(c));
        den *= hook_length_poly(c).substitute_power(l);
    }
    auto q = divide_exact(num, den);
    if (!q) throw Error(ErrorCode::NonPolynomial, "fake degree of " + la.to_string() + " does not divide out");
    return *q;
}

RationalFn qhook_rhs(const Multipartition& nu, long N) {
    const long l = static_cast<long>(nu.l());
    const long n = nu.size();
    if (n == 0) throw Error(ErrorCode::EmptyMultipartition, "no restrictions of the empty multipartition");
    if (N != n * l)
        throw Error(ErrorCode::InvalidArgument, "N=" + std::to_string(N) + " but n*l=" + std::to_string(n * l));
    LaurentPoly sum;
    for (const auto& la : restrictions(nu)) sum += fake_degree(la);
    return RationalFn(q_int(N) * sum, fake_degree(nu));
}

QHookCheck qhook_verify(const Partition& mu, long l) {
    if (!core(mu, l).empty()) throw Error(ErrorCode::NonTrivialCore, mu.to_string() + " has a non-empty core");
    LaurentPoly lhs = residue(mu);
    if (mu.empty()) return {true, lhs, RationalFn()};
    RationalFn rhs = qhook_rhs(reverse(quotient(mu, l)), mu.size());
    return {RationalFn(lhs) == rhs, lhs, rhs};
}

}  // namespace cqv
