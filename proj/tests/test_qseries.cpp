#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "cqv/qseries.hpp"
#include "doctest.h"

using namespace cqv;

namespace {

LaurentPoly t(long e) { return LaurentPoly::monomial(e); }

LaurentPoly one_minus(long e) { return LaurentPoly(1) - t(e); }

// Standard tableaux count: f^λ = n! / ∏ hooks.
Rational hook_formula_count(const Partition& mu) {
    Rational r = 1;
    for (long k = 2; k <= mu.size(); ++k) r *= k;
    for (const auto& c : cells(mu)) r /= hook_length(mu, c);
    return r;
}

}  // namespace

TEST_CASE("q-integers and q-Pochhammer symbols") {
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(2) == 1 + t(1));
    CHECK(q_int(6) == 1 + t(1) + t(2) + t(3) + t(4) + t(5));
    CHECK(q_poch(0) == LaurentPoly(1));
    CHECK(q_poch(2) == one_minus(1) * one_minus(2));
    CHECK(q_poch(1, 3) == one_minus(3));
}

TEST_CASE("hook-length polynomials and principal specialisation") {
    CHECK(hook_length_poly({4}) == q_poch(4));
    CHECK(hook_length_poly({}) == LaurentPoly(1));
    CHECK(hook_length_poly({2, 1}) == one_minus(3) * one_minus(1) * one_minus(1));
    CHECK(schur_principal({3}) == RationalFn(1, q_poch(3)));
    CHECK(schur_principal({1, 1}) == RationalFn(t(1), one_minus(1) * one_minus(2)));
    CHECK(schur_principal({}) == RationalFn(1));
}

TEST_CASE("fake degrees") {
    for (long n = 0; n <= 6; ++n) {
        CHECK(fake_degree(Multipartition({Partition(std::vector<long>(n ? 1 : 0, n))})) == LaurentPoly(1));
        CHECK(fake_degree(Multipartition({Partition(std::vector<long>(static_cast<std::size_t>(n), 1))})) == t(n * (n - 1) / 2));
    }
    CHECK(fake_degree(Multipartition({{}, {1}})) == t(1));
    // f_λ(1) counts standard tableaux at l = 1.
    for (long n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) REQUIRE(fake_degree(Multipartition({mu})).coefficient_sum() == hook_formula_count(mu));
    for (long l = 1; l <= 3; ++l)
        for (long n = 0; n <= (l == 1 ? 6 : 4); ++n)
            for (const auto& la : multipartitions_of(n, static_cast<std::size_t>(l))) {
                LaurentPoly f = fake_degree(la);
                REQUIRE(!f.is_zero());
                for (const auto& [e, c] : f.terms()) REQUIRE(c > 0);
            }
}

TEST_CASE("q-hook right-hand side") {
    CHECK(qhook_rhs(Multipartition({Partition{2}}), 2) == RationalFn(1 + t(1)));
    CHECK(qhook_rhs(Multipartition({Partition{1, 1}}), 2) == RationalFn(t(-1) + 1));
    CHECK(qhook_rhs(Multipartition({Partition{1}}), 1) == RationalFn(1));
    CHECK_THROWS_AS(qhook_rhs(Multipartition::empty(1), 0), Error);
    CHECK_THROWS_AS(qhook_rhs(Multipartition({Partition{2}}), 3), Error);
}

TEST_CASE("q-hook formula") {
    CHECK(qhook_verify({2}, 1).holds);
    CHECK(qhook_verify({2}, 1).lhs == 1 + t(1));
    CHECK(qhook_verify({1, 1}, 1).holds);
    int trivial_core = 0;
    for (const auto& mu : partitions_of(4))
        if (core(mu, 2).empty()) {
            ++trivial_core;
            CHECK(qhook_verify(mu, 2).holds);
        }
    CHECK(trivial_core == 5);
    CHECK_THROWS_AS(qhook_verify({1}, 2), Error);
    for (long l = 1; l <= 3; ++l)
        for (long n = 1; n <= (l == 1 ? 8 : 4); ++n)
            for (const auto& mu : partitions_of(n * l))
                if (core(mu, l).empty()) REQUIRE(qhook_verify(mu, l).holds);
}
