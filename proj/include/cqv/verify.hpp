#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cqv/affine_weyl.hpp"
#include "cqv/partitions.hpp"
#include "json.hpp"

namespace cqv {

std::vector<Partition> enumerate_with_core(long K, const Partition& nu, long l);

Partition tau_w(const Multipartition& la, const GeneratorWord& w, long l);
Partition induced_bijection(const Multipartition& la, const GeneratorWord& w, long l);

struct HParams {
    Rational h = 0;
    std::vector<Rational> H;  // H_1..H_{l-1}
    Rational H0() const;
};
ParamVector theta_from_h(const HParams& p);
HParams h_from_theta(const ParamVector& theta);

Rational c_function(const Multipartition& la, const HParams& p);
// Relation of λ to μ in the combinatorial order twisted by w.
Dominance order_compare(const Multipartition& la, const Multipartition& mu, const GeneratorWord& w, long l);

Partition random_partition(long max_size, std::mt19937_64& rng);
ParamVector sample_generic_theta(long l, std::mt19937_64& rng);

struct Failure {
    std::string input, expected, actual;
};

struct Report {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    long instances = 0;
    std::vector<Failure> failures;
    long millis = 0;
    bool passed() const { return failures.empty(); }
    void fail(std::string input, std::string expected, std::string actual);
    void absorb(const Report& other);
};

nlohmann::json to_json(const Report& r);

Report check_bead_example();
Report check_roundtrip(long max_size, const std::vector<long>& ls);
Report check_weyl_relations(long samples, long max_size, const std::vector<long>& ls, std::uint64_t seed);
Report check_equivariance(long samples, long max_word, long max_size, const std::vector<long>& ls, std::uint64_t seed);
Report check_momentmap(long max_size, const std::vector<long>& ls, bool inject_fault = false);
Report check_hook_matrix();
Report check_witness(long max_size, const std::vector<long>& ls, long t_count, std::uint64_t seed);
Report check_character(long max_size, const std::vector<long>& ls);
Report check_eig(const std::vector<long>& ls, long max_n, long l1_max_n);
Report check_qhook(const std::vector<long>& ls, long max_n, long l1_max_n);
Report check_reflect_comb(long max_size, long max_core, const std::vector<long>& ls);
Report check_reflect_numeric(long samples, long max_size, const std::vector<long>& ls, std::uint64_t seed);
Report check_c_function(std::uint64_t seed);
Report check_orderings(const std::vector<long>& ls, long max_n, long max_word, std::uint64_t seed);

struct SuiteOptions {
    std::optional<std::vector<long>> ls;
    std::optional<long> max_size;
    std::uint64_t seed = 1;
    bool inject_fault = false;
};

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& id, const SuiteOptions& opts);

}  // namespace cqv
