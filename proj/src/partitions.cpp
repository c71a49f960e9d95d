#include "cqv/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cqv/error.hpp"

namespace cqv {

Partition::Partition(const std::vector<long>& parts) : parts_(parts) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw Error(ErrorCode::NegativePart, "negative part " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorCode::NotWeaklyDecreasing, "parts must be weakly decreasing");
        if (parts_[i] == 0) throw Error(ErrorCode::NotWeaklyDecreasing, "zero part before a positive part");
    }
}

Partition make_partition(const std::vector<long>& parts) { return Partition(parts); }

long Partition::size() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "∅";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

const Partition& Multipartition::operator[](long i) const { return comps_.at(mod(i, static_cast<long>(l()))); }
Partition& Multipartition::operator[](long i) { return comps_.at(mod(i, static_cast<long>(l()))); }

long Multipartition::size() const {
    long s = 0;
    for (const auto& c : comps_) s += c.size();
    return s;
}

std::string Multipartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + comps_[i].to_string();
    return s + ")";
}

const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Less: return "Less";
        case Dominance::Greater: return "Greater";
        case Dominance::Equal: return "Equal";
        case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

long mod(long a, long l) {
    long r = a % l;
    return r < 0 ? r + l : r;
}

std::vector<Cell> cells(const Partition& mu) {
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        for (long j = 1; j <= mu.part(i); ++j) out.push_back({static_cast<long>(i), j});
    return out;
}

bool contains(const Partition& mu, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.col <= mu.part(static_cast<std::size_t>(c.row));
}

long arm_length(const Partition& mu, Cell c) { return mu.part(static_cast<std::size_t>(c.row)) - c.col; }

long leg_length(const Partition& mu, Cell c) {
    long r = c.row;
    while (contains(mu, {r + 1, c.col})) ++r;
    return r - c.row;
}

long hook_length(const Partition& mu, Cell c) { return arm_length(mu, c) + leg_length(mu, c) + 1; }

Partition transpose(const Partition& mu) {
    std::vector<long> cols;
    for (long j = 1; j <= mu.part(1); ++j) {
        long len = 0;
        while (mu.part(static_cast<std::size_t>(len + 1)) >= j) ++len;
        cols.push_back(len);
    }
    return Partition(cols);
}

Multipartition transpose(const Multipartition& la) {
    std::vector<Partition> comps;
    for (const auto& c : la.components()) comps.push_back(transpose(c));
    return Multipartition(comps);
}

Multipartition reverse(const Multipartition& la) {
    std::vector<Partition> comps(la.components().rbegin(), la.components().rend());
    return Multipartition(comps);
}

LaurentPoly residue(const Partition& mu) {
    LaurentPoly p;
    for (const Cell& c : cells(mu)) p.add_term(c.content(), 1);
    return p;
}

std::vector<long> l_residue(const Partition& mu, long l) {
    std::vector<long> d(static_cast<std::size_t>(l), 0);
    for (const Cell& c : cells(mu)) ++d[static_cast<std::size_t>(mod(c.content(), l))];
    return d;
}

Partition partition_from_residue(const LaurentPoly& p) {
    if (p.is_zero()) return Partition();
    auto count = [&p](long c) -> long {
        Rational q = p.coeff(c);
        if (q.get_den() != 1 || q < 0)
            throw Error(ErrorCode::DecodeFailure, "coefficient of t^" + std::to_string(c) + " is not a count");
        return q.get_num().get_si();
    };
    long k = count(0);
    // Diagonal lengths must drop by 0 or 1 moving away from the main diagonal.
    for (long dir : {1L, -1L}) {
        long prev = k;
        for (long c = dir;; c += dir) {
            long cur = count(c);
            if (cur > prev || prev - cur > 1)
                throw Error(ErrorCode::DecodeFailure, "diagonal counts are not those of a partition");
            if (cur == 0) break;
            prev = cur;
        }
    }
    FrobeniusForm f;
    for (long s = 1; s <= k; ++s) {
        long a = 0, b = 0;
        while (count(a + 1) >= s) ++a;
        while (count(-(b + 1)) >= s) ++b;
        f.arms.push_back(a);
        f.legs.push_back(b);
    }
    Partition mu = from_frobenius(f);
    if (residue(mu) != p) throw Error(ErrorCode::DecodeFailure, "not the residue of a partition: " + p.to_string());
    return mu;
}

long n_stat(const Partition& mu) {
    long s = 0;
    for (std::size_t i = 1; i < mu.length(); ++i) s += static_cast<long>(i) * mu.part(i + 1);
    return s;
}

long r_stat(const Multipartition& la) {
    long s = 0;
    for (std::size_t i = 1; i < la.l(); ++i) s += static_cast<long>(i) * la.components()[i].size();
    return s;
}

FrobeniusForm frobenius_form(const Partition& mu) {
    FrobeniusForm f;
    for (long i = 1; contains(mu, {i, i}); ++i) {
        f.arms.push_back(arm_length(mu, {i, i}));
        f.legs.push_back(leg_length(mu, {i, i}));
    }
    return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
    if (f.arms.size() != f.legs.size())
        throw Error(ErrorCode::NotStrictlyDecreasing, "arms and legs differ in length");
    std::size_t k = f.arms.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0) throw Error(ErrorCode::NegativePart, "negative arm or leg");
        if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
            throw Error(ErrorCode::NotStrictlyDecreasing, "arms and legs must strictly decrease");
    }
    // Row i (i <= k) has length i + a_i; lower rows are read from the legs.
    std::vector<long> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(static_cast<long>(i) + 1 + f.arms[i]);
    long depth = k == 0 ? 0 : 1 + f.legs[0];
    for (long r = static_cast<long>(k) + 1; r <= depth; ++r) {
        long len = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (static_cast<long>(j) + 1 + f.legs[j] >= r) len = static_cast<long>(j) + 1;
        rows.push_back(len);
    }
    return Partition(rows);
}

std::vector<Multipartition> restrictions(const Multipartition& la) {
    std::vector<Multipartition> out;
    for (std::size_t i = 0; i < la.l(); ++i) {
        for (const Cell& c : all_removable_cells(la.components()[i])) {
            Multipartition m = la;
            std::vector<long> rows = m[static_cast<long>(i)].parts();
            --rows[static_cast<std::size_t>(c.row - 1)];
            m[static_cast<long>(i)] = Partition(rows);
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Dominance dominance_compare(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size())
        throw Error(ErrorCode::SizeMismatch, mu.to_string() + " vs " + la.to_string());
    bool le = true, ge = true;
    long sm = 0, sl = 0;
    std::size_t n = std::max(mu.length(), la.length());
    for (std::size_t i = 1; i <= n; ++i) {
        sm += mu.part(i);
        sl += la.part(i);
        if (sm > sl) le = false;
        if (sm < sl) ge = false;
    }
    if (le && ge) return Dominance::Equal;
    if (le) return Dominance::Less;
    if (ge) return Dominance::Greater;
    return Dominance::Incomparable;
}

std::vector<Cell> all_addable_cells(const Partition& mu) {
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= mu.length() + 1; ++i)
        if (i == 1 || mu.part(i) < mu.part(i - 1))
            out.push_back({static_cast<long>(i), mu.part(i) + 1});
    return out;
}

std::vector<Cell> all_removable_cells(const Partition& mu) {
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > mu.part(i + 1)) out.push_back({static_cast<long>(i), mu.part(i)});
    return out;
}

std::vector<Cell> addable_cells(const Partition& mu, long k, long l) {
    std::vector<Cell> out;
    for (const Cell& c : all_addable_cells(mu))
        if (mod(c.content(), l) == mod(k, l)) out.push_back(c);
    return out;
}

std::vector<Cell> removable_cells(const Partition& mu, long k, long l) {
    std::vector<Cell> out;
    for (const Cell& c : all_removable_cells(mu))
        if (mod(c.content(), l) == mod(k, l)) out.push_back(c);
    return out;
}

Partition from_row_lengths(std::vector<long> rows) { return Partition(rows); }

RimHook rim_hook_at(const Partition& mu, Cell c) {
    RimHook h;
    for (const Cell& x : cells(mu))
        if (x.row >= c.row && x.col >= c.col && !contains(mu, {x.row + 1, x.col + 1})) h.cells.push_back(x);
    return h;
}

std::vector<RimHook> removable_l_rim_hooks(const Partition& mu, long l) {
    std::vector<RimHook> out;
    for (const Cell& c : cells(mu))
        if (hook_length(mu, c) == l) out.push_back(rim_hook_at(mu, c));
    std::sort(out.begin(), out.end());
    return out;
}

Partition remove_rim_hook(const Partition& mu, const RimHook& h) {
    if (h.cells.empty()) throw Error(ErrorCode::InvalidHook, "empty hook");
    long r0 = h.cells.front().row, c0 = h.cells.front().col;
    for (const Cell& x : h.cells) {
        r0 = std::min(r0, x.row);
        c0 = std::min(c0, x.col);
    }
    std::vector<Cell> sorted = h.cells;
    std::sort(sorted.begin(), sorted.end());
    if (!contains(mu, {r0, c0}) || rim_hook_at(mu, {r0, c0}).cells != sorted)
        throw Error(ErrorCode::InvalidHook, "cells are not a rim hook of " + mu.to_string());
    std::vector<long> rows = mu.parts();
    for (const Cell& x : sorted) --rows[static_cast<std::size_t>(x.row - 1)];
    return Partition(rows);
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions_of(long n, std::size_t l) {
    std::vector<Multipartition> out;
    std::vector<Partition> cur(l);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
        if (i + 1 == l) {
            for (const auto& p : partitions_of(remaining)) {
                cur[i] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (long s = remaining; s >= 0; --s)
            for (const auto& p : partitions_of(s)) {
                cur[i] = p;
                rec(i + 1, remaining - s);
            }
    };
    if (l == 0) return out;
    rec(0, n);
    return out;
}

}  // namespace cqv
