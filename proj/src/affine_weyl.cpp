#include "cqv/affine_weyl.hpp"

#include <map>

#include "cqv/error.hpp"

namespace cqv {

namespace {

void check_letter(long i, long l) {
    if (l < 2) throw Error(ErrorCode::InvalidArgument, "the affine Weyl action needs l >= 2");
    if (i < 0 || i >= l) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
}

}  // namespace

Partition t_action(const Partition& mu, long k, long l) {
    check_letter(k, l);
    std::vector<long> rows = mu.parts();
    rows.push_back(0);
    for (const Cell& c : removable_cells(mu, k, l)) --rows[static_cast<std::size_t>(c.row - 1)];
    for (const Cell& c : addable_cells(mu, k, l)) ++rows[static_cast<std::size_t>(c.row - 1)];
    return Partition(rows);
}

Partition apply_word_partition(const GeneratorWord& w, const Partition& mu, long l) {
    Partition r = mu;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = t_action(r, *it, l);
    return r;
}

DimVector act_on_dim_vector(long i, const DimVector& d) {
    const long l = static_cast<long>(d.size());
    check_letter(i, l);
    DimVector r = d;
    auto at = [&](long j) { return d[static_cast<std::size_t>(mod(j, l))]; };
    r[static_cast<std::size_t>(i)] = at(i + 1) + at(i - 1) - at(i) + (i == 0 ? 1 : 0);
    return r;
}

DimVector apply_word_dim_vector(const GeneratorWord& w, const DimVector& d) {
    DimVector r = d;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = act_on_dim_vector(*it, r);
    return r;
}

ParamVector act_on_parameter(long i, const ParamVector& theta) {
    const long l = static_cast<long>(theta.size());
    check_letter(i, l);
    ParamVector r = theta;
    for (auto& x : r) x.canonicalize();
    const Rational ti = r[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(i)] = -ti;
    // For l = 2 both neighbour rules land on the same index.
    r[static_cast<std::size_t>(mod(i - 1, l))] += ti;
    r[static_cast<std::size_t>(mod(i + 1, l))] += ti;
    return r;
}

ParamVector apply_word_parameter(const GeneratorWord& w, const ParamVector& theta) {
    ParamVector r = theta;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = act_on_parameter(*it, r);
    return r;
}

Rational h_of(const ParamVector& theta) {
    Rational s = 0;
    for (const auto& t : theta) s -= t;
    return s;
}

Multipartition pr_action(const GeneratorWord& w, const Multipartition& la) {
    const long l = static_cast<long>(la.l());
    std::vector<Partition> comps = la.components();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        long i = *it;
        check_letter(i, l);
        long a = i == 0 ? l - 1 : i - 1;
        std::swap(comps[static_cast<std::size_t>(a)], comps[static_cast<std::size_t>(i)]);
    }
    return Multipartition(comps);
}

GeneratorWord word_for_core(const Partition& nu, long l) {
    if (l < 2) {
        if (!nu.empty()) throw Error(ErrorCode::NotACore, "the only 1-core is empty");
        return {};
    }
    if (!is_core(nu, l)) throw Error(ErrorCode::NotACore, nu.to_string() + " is not a " + std::to_string(l) + "-core");
    std::map<Partition, GeneratorWord> seen{{Partition(), {}}};
    std::map<Partition, GeneratorWord> frontier = seen;
    while (!seen.count(nu)) {
        std::map<Partition, GeneratorWord> next;
        for (const auto& [c, w] : frontier)
            for (long i = 0; i < l; ++i) {
                Partition d = t_action(c, i, l);
                if (seen.count(d)) continue;
                GeneratorWord cand{static_cast<int>(i)};
                cand.insert(cand.end(), w.begin(), w.end());
                auto it = next.find(d);
                if (it == next.end() || cand < it->second) next[d] = cand;
            }
        if (next.empty()) throw Error(ErrorCode::NotACore, "search exhausted");
        for (const auto& kv : next) seen.insert(kv);
        frontier = std::move(next);
    }
    return seen.at(nu);
}

}  // namespace cqv
