#include "cqv/beads.hpp"

#include <algorithm>
#include <numeric>

#include "cqv/affine_weyl.hpp"
#include "cqv/error.hpp"

namespace cqv {

std::string BeadDiagram::to_string() const {
    std::string s;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::string(row[j] ? "●" : "○");
        s += "\n";
    }
    return s;
}

BetaSet beta_numbers(const Partition& mu, long p) {
    if (p < static_cast<long>(mu.length()))
        throw Error(ErrorCode::PTooSmall, "p=" + std::to_string(p) + " < length of " + mu.to_string());
    BetaSet b;
    for (long i = 1; i <= p; ++i) b.values.push_back(mu.part(static_cast<std::size_t>(i)) + p - i);
    return b;
}

Partition partition_from_beta(const BetaSet& beta) {
    std::vector<long> v = beta.values;
    std::sort(v.rbegin(), v.rend());
    if (std::adjacent_find(v.begin(), v.end()) != v.end() || (!v.empty() && v.back() < 0))
        throw Error(ErrorCode::InvalidArgument, "beta numbers must be distinct and non-negative");
    long p = static_cast<long>(v.size());
    std::vector<long> parts;
    for (long i = 1; i <= p; ++i) parts.push_back(v[static_cast<std::size_t>(i - 1)] - (p - i));
    return Partition(parts);
}

long canonical_bead_count(const Partition& mu, long l) {
    long len = static_cast<long>(mu.length());
    return (len + l - 1) / l * l;
}

BeadDiagram bead_diagram(const Partition& mu, long l) {
    BeadDiagram d;
    d.l = l;
    BetaSet b = beta_numbers(mu, canonical_bead_count(mu, l));
    if (b.values.empty()) return d;
    long nrows = b.values.front() / l + 1;
    d.rows.assign(static_cast<std::size_t>(nrows), std::vector<bool>(static_cast<std::size_t>(l), false));
    for (long v : b.values) d.rows[static_cast<std::size_t>(v / l)][static_cast<std::size_t>(v % l)] = true;
    return d;
}

BetaSet beta_from_diagram(const BeadDiagram& b) {
    BetaSet s;
    for (std::size_t r = 0; r < b.rows.size(); ++r)
        for (std::size_t j = 0; j < b.rows[r].size(); ++j)
            if (b.rows[r][j]) s.values.push_back(static_cast<long>(r) * b.l + static_cast<long>(j));
    std::sort(s.values.rbegin(), s.values.rend());
    return s;
}

namespace {

// Positions (in runner units) of the beads on each runner.
std::vector<std::vector<long>> runners(const BetaSet& b, long l) {
    std::vector<std::vector<long>> r(static_cast<std::size_t>(l));
    for (long v : b.values) r[static_cast<std::size_t>(v % l)].push_back(v / l);
    for (auto& run : r) std::sort(run.rbegin(), run.rend());
    return r;
}

}  // namespace

Partition core(const Partition& mu, long l) {
    BetaSet b = beta_numbers(mu, canonical_bead_count(mu, l));
    auto r = runners(b, l);
    BetaSet slid;
    for (long j = 0; j < l; ++j)
        for (long k = 0; k < static_cast<long>(r[static_cast<std::size_t>(j)].size()); ++k)
            slid.values.push_back(k * l + j);
    return partition_from_beta(slid);
}

bool is_core(const Partition& mu, long l) { return core(mu, l) == mu; }

Multipartition quotient(const Partition& mu, long l) {
    BetaSet b = beta_numbers(mu, canonical_bead_count(mu, l));
    auto r = runners(b, l);
    std::vector<Partition> comps;
    for (const auto& run : r) comps.push_back(partition_from_beta(BetaSet{run}));
    return Multipartition(comps);
}

Partition from_core_quotient(const Partition& nu, const Multipartition& q, long l) {
    if (static_cast<long>(q.l()) != l)
        throw Error(ErrorCode::InvalidArgument, "quotient has " + std::to_string(q.l()) + " components, l=" + std::to_string(l));
    if (!is_core(nu, l)) throw Error(ErrorCode::NotACore, nu.to_string() + " is not a " + std::to_string(l) + "-core");
    long p = canonical_bead_count(nu, l);
    for (;;) {
        auto r = runners(beta_numbers(nu, p), l);
        bool fits = true;
        for (long j = 0; j < l; ++j)
            if (r[static_cast<std::size_t>(j)].size() < q[j].length()) fits = false;
        if (fits) break;
        p += l;
    }
    auto r = runners(beta_numbers(nu, p), l);
    BetaSet out;
    for (long j = 0; j < l; ++j) {
        long c = static_cast<long>(r[static_cast<std::size_t>(j)].size());
        for (long k : beta_numbers(q[j], c).values) out.values.push_back(k * l + j);
    }
    return partition_from_beta(out);
}

DimVector dim_vector(const Partition& mu, long l) { return l_residue(mu, l); }

Partition core_from_dim_vector(const DimVector& d) {
    const long l = static_cast<long>(d.size());
    if (l < 2) {
        for (long x : d)
            if (x != 0) throw Error(ErrorCode::NotACoreVector, "the only 1-core is empty");
        return Partition();
    }
    DimVector cur = d;
    GeneratorWord applied;  // letters in application order
    auto total = [](const DimVector& v) { return std::accumulate(v.begin(), v.end(), 0L); };
    while (total(cur) != 0) {
        for (long x : cur)
            if (x < 0) throw Error(ErrorCode::NotACoreVector, "negative entry reached");
        bool moved = false;
        for (long i = 0; i < l && !moved; ++i) {
            DimVector next = act_on_dim_vector(i, cur);
            if (total(next) < total(cur)) {
                cur = next;
                applied.push_back(static_cast<int>(i));
                moved = true;
            }
        }
        if (!moved) throw Error(ErrorCode::NotACoreVector, "no generator decreases the vector");
    }
    Partition nu;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) nu = t_action(nu, *it, l);
    if (dim_vector(nu, l) != d) throw Error(ErrorCode::NotACoreVector, "reduction does not reproduce the vector");
    return nu;
}

}  // namespace cqv
