#pragma once

#include <string>

#include "cqv/beads.hpp"
#include "cqv/fixed_points.hpp"
#include "cqv/laurent.hpp"
#include "cqv/partitions.hpp"
#include "json.hpp"

namespace cqv {

using nlohmann::json;

json to_json(const Partition& mu);
json to_json(const Multipartition& la);
json to_json(const Cell& c);
json to_json(const FrobeniusForm& f);
json to_json(const LaurentPoly& p);  // sorted [exponent, numerator, denominator]
json to_json(const BeadDiagram& b);
json to_json(const AffineForm& f);   // [const, c_0, ..., c_{l-1}]
json to_json(const ParamBasisForm& f);  // [const, h, H_1, ..., H_{l-1}]
json to_json(const Matrix<AffineForm>& m);
json to_json(const SymbolicRep& rep);
json to_json(const SymbolicMonomialSum& s);
json to_json(const GeneratorWord& w);

Partition parse_partition(const std::string& text);
// Components separated by '/', each comma-separated; "", "-", "0" and "∅" denote ∅.
Multipartition parse_multipartition(const std::string& text);
GeneratorWord parse_word(const std::string& text);

}  // namespace cqv
