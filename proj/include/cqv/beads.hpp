#pragma once

#include <vector>

#include "cqv/partitions.hpp"

namespace cqv {

// Distinct non-negative integers, stored in decreasing order.
struct BetaSet {
    std::vector<long> values;
    std::size_t p() const { return values.size(); }
    friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

// Row rho (0-based here, 1-based in print) holds values rho*l + j on runner j.
struct BeadDiagram {
    long l = 1;
    std::vector<std::vector<bool>> rows;
    friend bool operator==(const BeadDiagram&, const BeadDiagram&) = default;
    std::string to_string() const;  // ● / ○ glyphs, one line per row
};

using DimVector = std::vector<long>;

BetaSet beta_numbers(const Partition& mu, long p);
Partition partition_from_beta(const BetaSet& beta);
long canonical_bead_count(const Partition& mu, long l);

BeadDiagram bead_diagram(const Partition& mu, long l);
BetaSet beta_from_diagram(const BeadDiagram& b);

Partition core(const Partition& mu, long l);
bool is_core(const Partition& mu, long l);
Multipartition quotient(const Partition& mu, long l);
Partition from_core_quotient(const Partition& nu, const Multipartition& q, long l);

DimVector dim_vector(const Partition& mu, long l);
Partition core_from_dim_vector(const DimVector& d);

}  // namespace cqv
