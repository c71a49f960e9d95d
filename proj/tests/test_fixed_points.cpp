#include <random>

#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "cqv/fixed_points.hpp"
#include "doctest.h"

using namespace cqv;

namespace {

AffineForm th(std::size_t l, std::size_t i) { return AffineForm::symbol(l, i); }

LaurentPoly t(long e) { return LaurentPoly::monomial(e); }

std::vector<Partition> upto(long n) {
    std::vector<Partition> out;
    for (long k = 0; k <= n; ++k)
        for (const auto& mu : partitions_of(k)) out.push_back(mu);
    return out;
}

// Independent recurrence on coefficient lists: a'_{lj+i} = a_{lj+i+1} + a_{lj+i-1} - a_{lj+i} (+1 at 0 for i=0).
LaurentPoly reflect_oracle(const LaurentPoly& p, long i, long l) {
    LaurentPoly out;
    long lo = p.is_zero() ? -1 : std::min(p.min_exponent(), 0L) - 1;
    long hi = p.is_zero() ? 1 : std::max(p.max_exponent(), 0L) + 1;
    for (long e = lo; e <= hi; ++e) {
        Rational c = p.coeff(e);
        if (mod(e, l) == i) c = p.coeff(e + 1) + p.coeff(e - 1) - p.coeff(e) + (e == 0 ? 1 : 0);
        out.add_term(e, c);
    }
    return out;
}

}  // namespace

TEST_CASE("single hook matrices") {
    auto A = a_small(8, 5, 3);
    const std::size_t l = 3;
    std::vector<AffineForm> want{th(l, 1),
                                 th(l, 1) + th(l, 0),
                                 th(l, 2) + th(l, 1) + th(l, 0),
                                 th(l, 2) + th(l, 1) * Rational(2) + th(l, 0),
                                 -th(l, 2) - th(l, 1) - th(l, 0),
                                 -th(l, 1) - th(l, 0),
                                 -th(l, 0)};
    for (std::size_t j = 0; j < want.size(); ++j) CHECK(A(j + 1, j) == want[j]);
    for (std::size_t p = 0; p < 8; ++p)
        for (std::size_t q = 0; q < 8; ++q)
            if (p != q + 1) CHECK(A(p, q).is_zero());
    CHECK(a_small(1, 1, 2)(0, 0).is_zero());
    CHECK(a_small(2, 1, 2)(1, 0) == -th(2, 1));
    CHECK(commutator_check_small(1, 1, 2) == std::vector<AffineForm>{AffineForm(2)});
    auto diag = commutator_check_small(8, 5, 3);
    CHECK(diag[0] == th(l, 1));
    HookBlock h{3, 4, 5, 8, 5, 0};
    CHECK(diag[4] + beta_form(h, 3) == th(l, 0));
}

TEST_CASE("the 9x9 example for (3,1|2,1)") {
    const std::size_t l = 3;
    const AffineForm h = th(l, 2) + th(l, 1) + th(l, 0);
    SymbolicRep rep = build_fixed_point(from_frobenius({{3, 1}, {2, 1}}), 3);
    REQUIRE(rep.dim() == 9);
    Matrix<AffineForm> want(9, 9, AffineForm(l));
    auto set = [&](std::size_t p, std::size_t q, const AffineForm& v) { want(p - 1, q - 1) = v; };
    set(2, 1, th(l, 2));
    set(3, 2, th(l, 2) + th(l, 1));
    set(4, 3, -h);
    set(5, 4, -th(l, 1) - th(l, 0));
    set(6, 5, -th(l, 0));
    set(4, 8, h * Rational(-2));
    set(5, 9, h * Rational(-2));
    set(7, 1, h);
    set(8, 2, h);
    set(8, 7, th(l, 1));
    set(9, 8, -th(l, 2));
    CHECK(rep.Y == want);
    CHECK(quiver_grading_check(rep).ok);
    CHECK(moment_map_check(rep).ok);
}

TEST_CASE("small fixed points") {
    SymbolicRep one = build_fixed_point({1}, 1);
    REQUIRE(one.dim() == 1);
    CHECK(one.X(0, 0).is_zero());
    CHECK(one.Y(0, 0).is_zero());
    CHECK(one.I(0, 0) == AffineForm(1, 1));
    CHECK(one.J(0, 0) == th(1, 0));
    CHECK(moment_map(one)(0, 0) == th(1, 0));

    SymbolicRep r = build_fixed_point({5, 5, 4, 2}, 4);
    std::vector<long> q;
    for (const auto& b : r.blocks) q.push_back(b.q);
    CHECK(q == std::vector<long>{4, 11, 15});
    for (long qi : q) CHECK(r.psi[static_cast<std::size_t>(qi - 1)] == 0);

    SymbolicRep empty = build_fixed_point({}, 2);
    CHECK(empty.dim() == 0);
    CHECK(moment_map_check(empty).ok);
}

TEST_CASE("grading check rejects a misplaced entry") {
    SymbolicRep rep = build_fixed_point({3, 1}, 2);
    CHECK(quiver_grading_check(rep).ok);
    for (std::size_t p = 0; p < rep.dim(); ++p)
        if (rep.psi[p] == rep.psi[0]) {
            rep.Y(0, p) = th(2, 0);
            break;
        }
    CHECK_FALSE(quiver_grading_check(rep).ok);
}

TEST_CASE("moment map and witness over all small partitions") {
    for (long l = 1; l <= 3; ++l)
        for (const auto& mu : upto(l == 1 ? 8 : 9)) {
            SymbolicRep rep = build_fixed_point(mu, l);
            REQUIRE(rep.dim() == static_cast<std::size_t>(mu.size()));
            REQUIRE(quiver_grading_check(rep).ok);
            REQUIRE(moment_map_check(rep).ok);
            DimVector d(static_cast<std::size_t>(l), 0);
            for (long c : rep.psi) ++d[static_cast<std::size_t>(c)];
            if (l >= 2) {
                Partition nu = core(mu, l);
                DimVector dc = dim_vector(transpose(nu), l);
                for (std::size_t k = 0; k < d.size(); ++k) REQUIRE(d[k] == dc[k] + (mu.size() - nu.size()) / l);
            }
            if (l >= 2 && mu.size() <= 7) REQUIRE(conjugation_witness(rep, Rational(-3, 7)).ok);
        }
}

TEST_CASE("mu-grading and fibre character") {
    CHECK(mu_grading({1}, 2).poincare == LaurentPoly(1));
    CHECK(mu_grading({2, 1}, 2).poincare == t(-1) + 1 + t(1));
    CHECK(mu_grading({6, 5, 3, 3, 1, 1}, 3).poincare == residue({6, 4, 4, 2, 2, 1}));
    CHECK(fibre_character({1}, 2) == LaurentPoly(1));
    CHECK(fibre_character({5, 5, 4, 2}, 3) == residue({5, 5, 4, 2}));
    CHECK(fibre_character({}, 3).is_zero());
    for (long l = 1; l <= 3; ++l)
        for (const auto& mu : upto(9)) {
            REQUIRE(fibre_character(mu, l) == residue(mu));
            REQUIRE(mu_grading(mu, l).poincare == residue(transpose(mu)));
        }
}

TEST_CASE("eigenvalues") {
    CHECK(eig_direct({}, 2).empty());
    CHECK(eig_closed({}, 3).empty());
    CHECK(eig_multipartition({}, 2) == Multipartition::empty(2));
    CHECK(eig_direct({1}, 1) == eig_closed({1}, 1));
    CHECK(eig_direct({2}, 2).size() == 1);
    CHECK_THROWS_AS(eig_direct({1}, 2), Error);
    for (long l = 1; l <= 3; ++l)
        for (long n = 0; n <= (l == 1 ? 6 : 4); ++n)
            for (const auto& mu : partitions_of(n * l)) {
                if (!core(mu, l).empty()) continue;
                auto d = eig_direct(mu, l);
                long count = 0;
                for (const auto& [f, k] : d) count += k;
                REQUIRE(count == n);
                REQUIRE(d == eig_closed(mu, l));
                REQUIRE(eig_multipartition(mu, l) == reverse(quotient(mu, l)));
                if (l == 1) REQUIRE(eig_multipartition(mu, l) == Multipartition({mu}));
            }
}

TEST_CASE("hook types") {
    for (const auto& mu : partitions_of(6))
        for (const auto& ht : hook_types(mu, 3)) {
            CHECK(ht.type_L >= 0);
            CHECK(ht.type_L < 3);
        }
    // Arms shorter than l-1 contribute nothing on the arm side.
    for (const auto& ht : hook_types({2, 1, 1, 1, 1}, 3)) CHECK(ht.xi_A.empty());
    for (const auto& ht : hook_types({6}, 3)) CHECK(ht.xi_L.empty());
}

TEST_CASE("reflected Poincaré polynomials") {
    CHECK(reflected_poincare(1, 1, 2) == t(-1) + 1 + t(1));
    CHECK(reflected_poincare(LaurentPoly(), 0, 2) == LaurentPoly(1));
    for (long l = 2; l <= 3; ++l)
        for (const auto& mu : upto(9))
            for (long i = 0; i < l; ++i) {
                LaurentPoly p = residue(transpose(mu));
                LaurentPoly r = reflected_poincare(p, i, l);
                REQUIRE(r == reflect_oracle(p, i, l));
                REQUIRE(reflected_poincare(r, i, l) == p);
                REQUIRE(r_action(mu, i, l) == transpose(t_action(transpose(mu), i, l)));
            }
    CHECK(r_action({1}, 1, 2) == Partition{2, 1});
}

TEST_CASE("numeric reflection functor") {
    std::mt19937_64 rng(11);
    int done = 0;
    for (long l = 2; l <= 3; ++l)
        for (const auto& mu : upto(6))
            for (long i = 0; i < l; ++i) {
                ParamVector theta;
                for (long k = 0; k < l; ++k) theta.push_back(Rational(static_cast<long>(rng() % 97) + 3 + k * 101, 7));
                ReflectionResult res = reflect_numeric(mu, i, l, theta);
                INFO(mu.to_string(), " i=", i, " l=", l, " ", res.moment_map.detail, res.dims.detail, res.graded.detail,
                     res.condition_c.detail);
                REQUIRE(res.ok());
                Partition R = r_action(mu, i, l);
                REQUIRE(res.rep.dim() == static_cast<std::size_t>(R.size()));
                REQUIRE(res.poincare == residue(transpose(R)));
                REQUIRE(res.theta == act_on_parameter(i, theta));
                ++done;
            }
    CHECK(done > 100);
    ParamVector bad{Rational(1), Rational(0)};
    CHECK_THROWS_AS(reflect_numeric({1}, 1, 2, bad), Error);
}
