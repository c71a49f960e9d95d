#include "cqv/affine_weyl.hpp"
#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "doctest.h"

using namespace cqv;

namespace {

// Core by repeatedly stripping any l-rim-hook from the diagram.
Partition core_oracle(Partition mu, long l) {
    for (;;) {
        auto hooks = removable_l_rim_hooks(mu, l);
        if (hooks.empty()) return mu;
        mu = remove_rim_hook(mu, hooks.back());
    }
}

// Quotient read straight from first-column hook lengths with a padded p.
Multipartition quotient_oracle(const Partition& mu, long l) {
    long p = ((static_cast<long>(mu.length()) + l - 1) / l + 1) * l;
    std::vector<std::vector<long>> runner(static_cast<std::size_t>(l));
    for (long i = 1; i <= p; ++i) {
        long b = mu.part(static_cast<std::size_t>(i)) + p - i;
        runner[static_cast<std::size_t>(b % l)].push_back(b / l);
    }
    std::vector<Partition> comps;
    for (auto& run : runner) {
        std::vector<long> parts;
        long k = static_cast<long>(run.size());
        for (long s = 0; s < k; ++s) parts.push_back(run[static_cast<std::size_t>(s)] - (k - 1 - s));
        comps.push_back(Partition(parts));
    }
    return Multipartition(comps);
}

std::vector<std::vector<int>> rows01(const BeadDiagram& b) {
    std::vector<std::vector<int>> out;
    for (const auto& r : b.rows) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace

TEST_CASE("beta numbers") {
    CHECK(beta_numbers({6, 5, 3, 3, 1, 1}, 6).values == std::vector<long>{11, 9, 6, 5, 2, 1});
    CHECK(beta_numbers({}, 3).values == std::vector<long>{2, 1, 0});
    CHECK(beta_numbers({1}, 1).values == std::vector<long>{1});
    CHECK_THROWS_AS(beta_numbers({2, 1}, 1), Error);
    for (long n = 0; n <= 10; ++n)
        for (const auto& mu : partitions_of(n))
            for (long p = static_cast<long>(mu.length()); p <= static_cast<long>(mu.length()) + 3; ++p)
                REQUIRE(partition_from_beta(beta_numbers(mu, p)) == mu);
}

TEST_CASE("bead diagrams") {
    BeadDiagram b = bead_diagram({6, 5, 3, 3, 1, 1}, 3);
    CHECK(rows01(b) == std::vector<std::vector<int>>{{0, 1, 1}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}});
    CHECK(beta_from_diagram(b).values == std::vector<long>{11, 9, 6, 5, 2, 1});
    CHECK(bead_diagram({}, 2).rows.empty());
    CHECK(rows01(bead_diagram({1}, 2)) == std::vector<std::vector<int>>{{1, 0}, {1, 0}});
    CHECK(b.to_string() == "○ ● ●\n○ ○ ●\n● ○ ○\n● ○ ●\n");
}

TEST_CASE("example: core and quotient of (6,5,3,3,1,1)") {
    const Partition mu{6, 5, 3, 3, 1, 1};
    CHECK(core(mu, 3) == Partition{3, 1});
    CHECK(quotient(mu, 3) == Multipartition({{2, 2}, {}, {1}}));
    CHECK(from_core_quotient({3, 1}, Multipartition({{2, 2}, {}, {1}}), 3) == mu);
}

TEST_CASE("core and quotient against oracles") {
    CHECK(core({2, 1, 1}, 4) == Partition{});
    CHECK(quotient({2, 1, 1}, 4).size() == 1);
    CHECK(quotient({3, 1}, 3) == Multipartition::empty(3));
    for (long l = 1; l <= 5; ++l)
        for (long n = 0; n <= 12; ++n)
            for (const auto& mu : partitions_of(n)) {
                Partition c = core(mu, l);
                REQUIRE(c == core_oracle(mu, l));
                REQUIRE(is_core(c, l));
                REQUIRE(quotient(mu, l) == quotient_oracle(mu, l));
            }
}

TEST_CASE("from_core_quotient") {
    CHECK(from_core_quotient({2, 1}, Multipartition::empty(2), 2) == Partition{2, 1});
    Partition two = from_core_quotient({}, Multipartition({{1}, {}}), 2);
    int hits = 0;
    for (const auto& mu : partitions_of(2)) hits += core(mu, 2).empty() && quotient(mu, 2) == Multipartition({{1}, {}});
    CHECK(hits == 1);
    CHECK(quotient(two, 2) == Multipartition({{1}, {}}));
    CHECK_THROWS_AS(from_core_quotient({2}, Multipartition::empty(2), 2), Error);
    for (long l = 2; l <= 5; ++l)
        for (long n = 0; n <= 14; ++n)
            for (const auto& mu : partitions_of(n)) REQUIRE(from_core_quotient(core(mu, l), quotient(mu, l), l) == mu);
}

TEST_CASE("dimension vectors") {
    CHECK(dim_vector({}, 3) == DimVector{0, 0, 0});
    CHECK(dim_vector({3, 1}, 3) == DimVector{1, 1, 2});
    CHECK(dim_vector({6, 5, 3, 3, 1, 1}, 3) == DimVector{6, 6, 7});
    CHECK(core_from_dim_vector({0, 0, 0}) == Partition{});
    CHECK(core_from_dim_vector({1, 1, 2}) == Partition{3, 1});
    CHECK(core_from_dim_vector({1, 0}) == Partition{1});
    CHECK_THROWS_AS(core_from_dim_vector({0, 1}), Error);
    for (long l = 2; l <= 4; ++l)
        for (long n = 0; n <= 12; ++n)
            for (const auto& mu : partitions_of(n)) {
                DimVector d = dim_vector(mu, l), dc = dim_vector(core(mu, l), l);
                long k = (n - core(mu, l).size()) / l;
                for (std::size_t i = 0; i < d.size(); ++i) REQUIRE(d[i] == dc[i] + k);
                if (is_core(mu, l)) REQUIRE(core_from_dim_vector(d) == mu);
            }
}
