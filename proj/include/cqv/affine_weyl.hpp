#pragma once

#include <vector>

#include "cqv/beads.hpp"
#include "cqv/laurent.hpp"
#include "cqv/partitions.hpp"

namespace cqv {

// w = σ_{i_1}⋯σ_{i_m}; the last letter acts first.
using GeneratorWord = std::vector<int>;
using ParamVector = std::vector<Rational>;

Partition t_action(const Partition& mu, long k, long l);
Partition apply_word_partition(const GeneratorWord& w, const Partition& mu, long l);

DimVector act_on_dim_vector(long i, const DimVector& d);
DimVector apply_word_dim_vector(const GeneratorWord& w, const DimVector& d);

ParamVector act_on_parameter(long i, const ParamVector& theta);
ParamVector apply_word_parameter(const GeneratorWord& w, const ParamVector& theta);
Rational h_of(const ParamVector& theta);

Multipartition pr_action(const GeneratorWord& w, const Multipartition& la);

GeneratorWord word_for_core(const Partition& nu, long l);

}  // namespace cqv
