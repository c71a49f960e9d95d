#include <set>

#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "cqv/json_io.hpp"
#include "cqv/verify.hpp"
#include "doctest.h"

using namespace cqv;

TEST_CASE("enumerate_with_core") {
    CHECK(enumerate_with_core(2, {}, 2) == std::vector<Partition>{{2}, {1, 1}});
    CHECK(enumerate_with_core(3, {2, 1}, 2) == std::vector<Partition>{{2, 1}});
    for (long l = 2; l <= 3; ++l)
        for (long n = 0; n <= 4; ++n)
            CHECK(enumerate_with_core(n * l, {}, l).size() == multipartitions_of(n, static_cast<std::size_t>(l)).size());
}

TEST_CASE("twisted quotient bijection") {
    Multipartition la({{2}, {}, {1}});
    CHECK(tau_w(la, {}, 3) == from_core_quotient({}, la, 3));
    for (const GeneratorWord& w : {GeneratorWord{}, GeneratorWord{0}, GeneratorWord{1, 0}, GeneratorWord{2, 1, 0, 2}}) {
        Partition img = tau_w(la, w, 3);
        CHECK(core(img, 3) == apply_word_partition(w, {}, 3));
        CHECK(img.size() == 3 * la.size() + apply_word_partition(w, {}, 3).size());
    }
    for (long n = 0; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(induced_bijection(Multipartition({mu}), {}, 1) == transpose(mu));
    for (long l = 2; l <= 3; ++l)
        for (long n = 0; n <= 4; ++n) {
            std::set<Partition> seen;
            auto all = multipartitions_of(n, static_cast<std::size_t>(l));
            for (const auto& m : all) seen.insert(induced_bijection(m, {1, 0, 1}, l));
            CHECK(seen.size() == all.size());
        }
}

TEST_CASE("parameters in the h basis") {
    HParams p{Rational(3), {Rational(1), Rational(-5, 2)}};
    CHECK(p.H0() == Rational(3, 2));
    ParamVector th = theta_from_h(p);
    CHECK(th == ParamVector{Rational(-3) + Rational(3, 2), Rational(1), Rational(-5, 2)});
    HParams back = h_from_theta(th);
    CHECK(back.h == p.h);
    CHECK(back.H == p.H);
}

TEST_CASE("c-function") {
    for (long n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            HParams p{Rational(5, 3), {}};
            Rational want = -(Rational(n * (n - 1), 2) + n_stat(mu) - n_stat(transpose(mu))) * p.h;
            CHECK(c_function(Multipartition({mu}), p) == want);
        }
    const Partition mu{6, 3, 2, 2, 2};
    for (long k = -3; k <= 3; ++k) {
        HParams p{Rational(k, 7), {}};
        CHECK(c_function(Multipartition({mu}), p) == c_function(Multipartition({transpose(mu)}), p));
    }
    HParams p{Rational(1), {Rational(2)}};
    // l=2: 2·|λ^1|·H_1 − 2(n(n−1)/2 + Σ n(λ^i) − n(λ^i^t))h
    CHECK(c_function(Multipartition({{1}, {1, 1}}), p) == Rational(2 * 2 * 2) - Rational(2) * (3 + 1));
}

TEST_CASE("combinatorial order") {
    Multipartition a({{2}, {}}), b({{1, 1}, {}});
    CHECK(order_compare(a, a, {}, 2) == Dominance::Equal);
    CHECK_THROWS_AS(order_compare(a, Multipartition({{1}, {}}), {}, 2), Error);
    auto all = multipartitions_of(2, 2);
    for (const auto& x : all)
        for (const auto& y : all) {
            Dominance d = order_compare(x, y, {}, 2), e = order_compare(y, x, {}, 2);
            if (d == Dominance::Less) CHECK(e == Dominance::Greater);
            if (d == Dominance::Equal) CHECK(x == y);
            if (d == Dominance::Incomparable) CHECK(e == Dominance::Incomparable);
        }
    CHECK(order_compare(a, b, {}, 2) == dominance_compare(induced_bijection(b, {}, 2), induced_bijection(a, {}, 2)));
}

TEST_CASE("report plumbing") {
    Report r = check_bead_example();
    CHECK(r.passed());
    CHECK(r.instances == 1);
    SuiteOptions o;
    o.inject_fault = true;
    o.max_size = 4;
    Report bad = run_suite("momentmap", o);
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0].actual.find("entry (") != std::string::npos);
    CHECK_THROWS_AS(run_suite("nope", {}), Error);
    auto j = to_json(bad);
    for (const char* key : {"suite", "params", "instances", "failures", "millis"}) CHECK(j.contains(key));
}

TEST_CASE("reports are deterministic for a fixed seed") {
    SuiteOptions o;
    o.seed = 42;
    o.max_size = 6;
    for (const char* s : {"weyl-relations", "reflect-numeric", "orderings"}) {
        Report a = run_suite(s, o), b = run_suite(s, o);
        a.millis = b.millis = 0;
        CHECK(to_json(a).dump() == to_json(b).dump());
        CHECK(a.passed());
    }
}

TEST_CASE("parsing") {
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_multipartition("2,2/-/1") == Multipartition({{2, 2}, {}, {1}}));
    CHECK(parse_word("1,0") == GeneratorWord{1, 0});
    CHECK_THROWS_AS(parse_partition("3,x"), Error);
    CHECK(to_json(Partition{6, 5, 3, 3, 1, 1}).dump() == "[6,5,3,3,1,1]");
    CHECK(to_json(Multipartition({{2, 2}, {}, {1}})).dump() == "[[2,2],[],[1]]");
}
