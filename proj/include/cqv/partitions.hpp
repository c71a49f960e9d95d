#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cqv/laurent.hpp"

namespace cqv {

class Partition {
public:
    Partition() = default;
    // Validating constructor; strips trailing zeros.
    explicit Partition(const std::vector<long>& parts);
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long size() const;
    // 1-indexed part, 0 beyond the length.
    long part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const;

private:
    std::vector<long> parts_;
};

Partition make_partition(const std::vector<long>& parts);

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}
    static Multipartition empty(std::size_t l) { return Multipartition(std::vector<Partition>(l)); }

    std::size_t l() const { return comps_.size(); }
    const std::vector<Partition>& components() const { return comps_; }
    // Index taken modulo l.
    const Partition& operator[](long i) const;
    Partition& operator[](long i);
    long size() const;

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) { return a.comps_ <=> b.comps_; }

    std::string to_string() const;

private:
    std::vector<Partition> comps_;
};

struct Cell {
    long row;
    long col;
    long content() const { return col - row; }
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct FrobeniusForm {
    std::vector<long> arms;
    std::vector<long> legs;
    std::size_t rank() const { return arms.size(); }
    friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

struct RimHook {
    std::vector<Cell> cells;  // sorted
    std::size_t length() const { return cells.size(); }
    friend bool operator==(const RimHook&, const RimHook&) = default;
    friend auto operator<=>(const RimHook&, const RimHook&) = default;
};

enum class Dominance { Less, Greater, Equal, Incomparable };
const char* to_string(Dominance d);

long mod(long a, long l);

std::vector<Cell> cells(const Partition& mu);
bool contains(const Partition& mu, Cell c);
long arm_length(const Partition& mu, Cell c);
long leg_length(const Partition& mu, Cell c);
long hook_length(const Partition& mu, Cell c);

Partition transpose(const Partition& mu);
Multipartition transpose(const Multipartition& la);
Multipartition reverse(const Multipartition& la);

LaurentPoly residue(const Partition& mu);
std::vector<long> l_residue(const Partition& mu, long l);
// Inverse of residue; DecodeFailure unless p is the residue of a partition.
Partition partition_from_residue(const LaurentPoly& p);

long n_stat(const Partition& mu);
long r_stat(const Multipartition& la);

FrobeniusForm frobenius_form(const Partition& mu);
Partition from_frobenius(const FrobeniusForm& f);

std::vector<Multipartition> restrictions(const Multipartition& la);
Dominance dominance_compare(const Partition& mu, const Partition& la);

std::vector<Cell> addable_cells(const Partition& mu, long k, long l);
std::vector<Cell> removable_cells(const Partition& mu, long k, long l);
std::vector<Cell> all_addable_cells(const Partition& mu);
std::vector<Cell> all_removable_cells(const Partition& mu);
Partition from_row_lengths(std::vector<long> rows);

// The rim hook attached to a cell: rim cells weakly south-east of it.
RimHook rim_hook_at(const Partition& mu, Cell c);
std::vector<RimHook> removable_l_rim_hooks(const Partition& mu, long l);
Partition remove_rim_hook(const Partition& mu, const RimHook& h);

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(long n);
std::vector<Multipartition> multipartitions_of(long n, std::size_t l);

}  // namespace cqv
