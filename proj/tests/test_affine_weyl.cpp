#include <random>

#include "cqv/affine_weyl.hpp"
#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "doctest.h"

using namespace cqv;

namespace {

// Toggle every addable and removable cell of residue k.
Partition t_oracle(const Partition& mu, long k, long l) {
    std::vector<long> rows = mu.parts();
    rows.push_back(0);
    std::vector<long> out = rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        long row = static_cast<long>(r) + 1;
        long next = r + 1 < rows.size() ? rows[r + 1] : 0;
        long prev = r == 0 ? -1 : rows[r - 1];
        bool addable = prev < 0 || rows[r] < prev;
        if (addable && mod(rows[r] + 1 - row, l) == k) ++out[r];
        bool removable = rows[r] > 0 && rows[r] > next;
        if (removable && mod(rows[r] - row, l) == k) --out[r];
    }
    return Partition(out);
}

}  // namespace

TEST_CASE("T_i on small partitions") {
    CHECK(t_action({}, 0, 2) == Partition{1});
    CHECK(t_action({1}, 1, 2) == Partition{2, 1});
    CHECK(t_action({}, 1, 2) == Partition{});
    CHECK_THROWS_AS(t_action({}, 0, 1), Error);
    for (long l = 2; l <= 4; ++l)
        for (long n = 0; n <= 10; ++n)
            for (const auto& mu : partitions_of(n))
                for (long k = 0; k < l; ++k) REQUIRE(t_action(mu, k, l) == t_oracle(mu, k, l));
}

TEST_CASE("words act right to left") {
    CHECK(apply_word_partition({}, {3, 1}, 3) == Partition{3, 1});
    CHECK(apply_word_partition({0}, {}, 2) == Partition{1});
    CHECK(apply_word_partition({1, 0}, {}, 2) == Partition{2, 1});
}

TEST_CASE("dimension vector action") {
    CHECK(act_on_dim_vector(0, {0, 0, 0}) == DimVector{1, 0, 0});
    CHECK(act_on_dim_vector(1, {2, 2, 2}) == DimVector{2, 2, 2});
    CHECK(act_on_dim_vector(0, dim_vector({}, 2)) == dim_vector({1}, 2));
    CHECK(act_on_dim_vector(0, {0, 0}) == DimVector{1, 0});
}

TEST_CASE("parameter action") {
    const Rational a(2), b(-3), c(7, 2);
    CHECK(act_on_parameter(1, {a, b, c}) == ParamVector{a + b, -b, c + b});
    CHECK(act_on_parameter(0, {a, b, c}) == ParamVector{-a, b + a, c + a});
    CHECK(act_on_parameter(1, {a, b}) == ParamVector{a + 2 * b, -b});
    CHECK(apply_word_parameter({1, 1}, {a, b, c}) == ParamVector{a, b, c});
    CHECK(apply_word_parameter({0, 2}, {a, b, c}) == act_on_parameter(0, act_on_parameter(2, {a, b, c})));
    // h is invariant under every generator.
    for (long i = 0; i < 3; ++i) CHECK(h_of(act_on_parameter(i, {a, b, c})) == h_of({a, b, c}));
}

TEST_CASE("projection to the finite group") {
    Multipartition la({{1}, {2}, {1, 1}});
    CHECK(pr_action({1}, la) == Multipartition({{2}, {1}, {1, 1}}));
    CHECK(pr_action({}, la) == la);
    CHECK(pr_action({0}, la) == Multipartition({{1, 1}, {2}, {1}}));
}

TEST_CASE("word_for_core") {
    CHECK(word_for_core({}, 3).empty());
    CHECK(word_for_core({1}, 2) == GeneratorWord{0});
    CHECK(word_for_core({2, 1}, 2) == GeneratorWord{1, 0});
    CHECK_THROWS_AS(word_for_core({2}, 2), Error);
    for (long l = 2; l <= 4; ++l)
        for (long n = 0; n <= 10; ++n)
            for (const auto& mu : partitions_of(n))
                if (is_core(mu, l)) REQUIRE(apply_word_partition(word_for_core(mu, l), {}, l) == mu);
}

TEST_CASE("Coxeter relations and equivariance on random partitions") {
    std::mt19937_64 rng(7);
    for (long l = 2; l <= 5; ++l)
        for (int s = 0; s < 150; ++s) {
            auto all = partitions_of(std::uniform_int_distribution<long>(0, 12)(rng));
            Partition mu = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
            for (long i = 0; i < l; ++i) {
                int a = static_cast<int>(i), b = static_cast<int>((i + 1) % l);
                REQUIRE(apply_word_partition({a, a}, mu, l) == mu);
                if (l >= 3) REQUIRE(apply_word_partition({a, b, a}, mu, l) == apply_word_partition({b, a, b}, mu, l));
                Partition t = t_action(mu, i, l);
                REQUIRE(core(t, l) == t_action(core(mu, l), i, l));
                REQUIRE(quotient(t, l) == pr_action({a}, quotient(mu, l)));
                REQUIRE(dim_vector(t, l) == act_on_dim_vector(i, dim_vector(mu, l)));
            }
        }
}
