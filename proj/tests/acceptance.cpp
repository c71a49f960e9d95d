#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cqv/verify.hpp"

using namespace cqv;

namespace {

struct Criterion {
    int id;
    const char* name;
    long budget_ms;
    std::function<std::vector<Report>()> run;
};

}  // namespace

int main() {
    const std::uint64_t seed = 20241015;
    const std::vector<Criterion> criteria{
        {1, "bead example for (6,5,3,3,1,1), l=3", 1000, [] { return std::vector{check_bead_example()}; }},
        {2, "core/quotient roundtrip and size law, |mu|<=14, l=2..5", 10000,
         [] { return std::vector{check_roundtrip(14, {2, 3, 4, 5})}; }},
        {3, "affine Weyl relations and equivariance", 30000,
         [&] {
             return std::vector{check_weyl_relations(500, 15, {2, 3, 4}, seed), check_equivariance(200, 6, 12, {2, 3, 4}, seed)};
         }},
        {4, "symbolic moment map, |mu|<=10, l=1..3, and the 9x9 matrix", 60000,
         [] { return std::vector{check_momentmap(10, {1, 2, 3}), check_hook_matrix()}; }},
        {5, "fibre character and Poincare polynomial, |mu|<=10", 10000, [] { return std::vector{check_character(10, {1, 2, 3})}; }},
        {6, "eigenvalues equal the reversed quotient", 60000, [] { return std::vector{check_eig({2, 3}, 4, 6)}; }},
        {7, "higher-level q-hook formula", 60000, [] { return std::vector{check_qhook({2, 3}, 4, 8)}; }},
        {8, "reflection action on partitions, cores and quotients", 60000,
         [] { return std::vector{check_reflect_comb(12, 4, {2, 3})}; }},
        {9, "numeric reflection functor, 50 random triples", 120000,
         [&] { return std::vector{check_reflect_numeric(50, 8, {2, 3}, seed)}; }},
        {10, "c-function ties", 10000, [&] { return std::vector{check_c_function(seed)}; }},
        {11, "conjugation witness for 5 random t, |mu|<=8, l=2,3", 30000,
         [&] { return std::vector{check_witness(8, {2, 3}, 5, seed)}; }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> reports = c.run();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        long instances = 0, failures = 0;
        for (const auto& r : reports) {
            instances += r.instances;
            failures += static_cast<long>(r.failures.size());
        }
        bool ok = failures == 0 && ms <= c.budget_ms;
        failed += !ok;
        std::printf("[%s] %2d %s: %ld instances, %ld failures, %ld ms (budget %ld ms)\n", ok ? "PASS" : "FAIL", c.id, c.name, instances,
                    failures, ms, c.budget_ms);
        for (const auto& r : reports)
            for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k)
                std::printf("       %s\n         expected %s\n         actual   %s\n", r.failures[k].input.c_str(),
                            r.failures[k].expected.c_str(), r.failures[k].actual.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
