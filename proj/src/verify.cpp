#include "cqv/verify.hpp"

#include <chrono>
#include <map>
#include <set>

#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "cqv/fixed_points.hpp"
#include "cqv/json_io.hpp"
#include "cqv/qseries.hpp"

namespace cqv {

std::vector<Partition> enumerate_with_core(long K, const Partition& nu, long l) {
    std::vector<Partition> out;
    if (K < 0) return out;
    for (const auto& mu : partitions_of(K))
        if (core(mu, l) == nu) out.push_back(mu);
    return out;
}

Partition tau_w(const Multipartition& la, const GeneratorWord& w, long l) {
    return apply_word_partition(w, from_core_quotient(Partition(), la, l), l);
}

Partition induced_bijection(const Multipartition& la, const GeneratorWord& w, long l) {
    return tau_w(transpose(la), w, l);
}

Rational HParams::H0() const {
    Rational s = 0;
    for (const auto& x : H) s -= x;
    return s;
}

ParamVector theta_from_h(const HParams& p) {
    ParamVector th{-p.h + p.H0()};
    for (const auto& x : p.H) th.push_back(x);
    return th;
}

HParams h_from_theta(const ParamVector& theta) {
    HParams p;
    p.h = h_of(theta);
    p.H.assign(theta.begin() + 1, theta.end());
    return p;
}

Rational c_function(const Multipartition& la, const HParams& p) {
    const long l = static_cast<long>(la.l());
    if (static_cast<long>(p.H.size()) != l - 1) throw Error(ErrorCode::InvalidArgument, "HParams needs l-1 entries H_1..H_{l-1}");
    Rational c = 0, prefix = 0;
    for (long i = 1; i < l; ++i) {
        prefix += p.H[static_cast<std::size_t>(i - 1)];
        c += Rational(l * la[i].size()) * prefix;
    }
    long n = la.size();
    Rational inner = Rational(n * (n - 1), 2);
    for (const auto& comp : la.components()) inner += n_stat(comp) - n_stat(transpose(comp));
    return c - Rational(l) * inner * p.h;
}

Dominance order_compare(const Multipartition& la, const Multipartition& mu, const GeneratorWord& w, long l) {
    if (la.size() != mu.size()) throw Error(ErrorCode::SizeMismatch, la.to_string() + " vs " + mu.to_string());
    // λ ⪯ μ iff τ_w(μ^t) ⊴ τ_w(λ^t)
    return dominance_compare(induced_bijection(mu, w, l), induced_bijection(la, w, l));
}

Partition random_partition(long max_size, std::mt19937_64& rng) {
    static thread_local std::map<long, std::vector<Partition>> cache;
    long n = std::uniform_int_distribution<long>(0, max_size)(rng);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, partitions_of(n)).first;
    const auto& all = it->second;
    return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

ParamVector sample_generic_theta(long l, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-100, 100);
    for (;;) {
        ParamVector th;
        for (long i = 0; i < l; ++i) th.push_back(Rational(dist(rng)));
        bool ok = true;
        for (long start = 0; start < l && ok; ++start) {
            Rational s = 0;
            for (long len = 1; len <= l; ++len) {
                s += th[static_cast<std::size_t>((start + len - 1) % l)];
                if (s == 0) ok = false;
            }
        }
        if (ok) return th;
    }
}

void Report::fail(std::string input, std::string expected, std::string actual) {
    failures.push_back({std::move(input), std::move(expected), std::move(actual)});
}

void Report::absorb(const Report& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    millis += other.millis;
    if (other.suite == suite)
        params.update(other.params);
    else if (!other.suite.empty())
        params[other.suite] = other.params;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : r.failures) f.push_back({{"input", x.input}, {"expected", x.expected}, {"actual", x.actual}});
    return {{"suite", r.suite}, {"params", r.params}, {"instances", r.instances}, {"failures", f}, {"millis", r.millis}};
}

namespace {

class Timer {
public:
    explicit Timer(Report& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        r_.millis += std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    Report& r_;
    std::chrono::steady_clock::time_point t0_;
};

template <class T>
std::string str(const T& x) {
    return x.to_string();
}

std::string str(const DimVector& d) { return nlohmann::json(d).dump(); }
std::string str(const SymbolicMonomialSum& s) { return to_string(s); }
std::string str(const std::vector<LaurentPoly>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + "]";
}

template <class T>
void expect_eq(Report& r, const std::string& input, const T& expected, const T& actual) {
    if (!(expected == actual)) r.fail(input, str(expected), str(actual));
}

std::string tag(const Partition& mu, long l) { return mu.to_string() + " l=" + std::to_string(l); }

std::vector<Partition> partitions_up_to(long max_size) {
    std::vector<Partition> out;
    for (long n = 0; n <= max_size; ++n)
        for (auto& mu : partitions_of(n)) out.push_back(mu);
    return out;
}

GeneratorWord random_word(long max_len, long l, std::mt19937_64& rng) {
    long len = std::uniform_int_distribution<long>(0, max_len)(rng);
    GeneratorWord w;
    for (long k = 0; k < len; ++k) w.push_back(static_cast<int>(std::uniform_int_distribution<long>(0, l - 1)(rng)));
    return w;
}

}  // namespace

Report check_bead_example() {
    Report r;
    r.suite = "example411";
    Timer timer(r);
    const Partition mu{6, 5, 3, 3, 1, 1};
    r.instances = 1;
    BetaSet beta = beta_numbers(mu, 6);
    if (beta.values != std::vector<long>{11, 9, 6, 5, 2, 1})
        r.fail("beta_numbers((6,5,3,3,1,1), 6)", "[11,9,6,5,2,1]", nlohmann::json(beta.values).dump());
    BeadDiagram b = bead_diagram(mu, 3);
    nlohmann::json want_rows = nlohmann::json::parse("[[0,1,1],[0,0,1],[1,0,0],[1,0,1]]");
    if (to_json(b) != want_rows) r.fail("bead_diagram((6,5,3,3,1,1), 3)", want_rows.dump(), to_json(b).dump());
    expect_eq(r, "core((6,5,3,3,1,1), 3)", Partition{3, 1}, core(mu, 3));
    const Multipartition q({Partition{2, 2}, Partition{}, Partition{1}});
    expect_eq(r, "quotient((6,5,3,3,1,1), 3)", q, quotient(mu, 3));
    expect_eq(r, "from_core_quotient((3,1), ((2,2),∅,(1)), 3)", mu, from_core_quotient(Partition{3, 1}, q, 3));
    return r;
}

Report check_roundtrip(long max_size, const std::vector<long>& ls) {
    Report r;
    r.suite = "roundtrip";
    r.params = {{"max_size", max_size}, {"l", ls}};
    Timer timer(r);
    for (long l : ls)
        for (const auto& mu : partitions_up_to(max_size)) {
            ++r.instances;
            Partition nu = core(mu, l);
            Multipartition q = quotient(mu, l);
            expect_eq(r, "roundtrip " + tag(mu, l), mu, from_core_quotient(nu, q, l));
            if (mu.size() != nu.size() + l * q.size())
                r.fail("size law " + tag(mu, l), std::to_string(mu.size()), std::to_string(nu.size() + l * q.size()));
        }
    return r;
}

Report check_weyl_relations(long samples, long max_size, const std::vector<long>& ls, std::uint64_t seed) {
    Report r;
    r.suite = "weyl-relations";
    r.params = {{"samples", samples}, {"max_size", max_size}, {"l", ls}, {"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    for (long s = 0; s < samples; ++s) {
        Partition mu = random_partition(max_size, rng);
        for (long l : ls) {
            ++r.instances;
            for (long i = 0; i < l; ++i) {
                std::string in = tag(mu, l) + " i=" + std::to_string(i);
                Partition ti = t_action(mu, i, l);
                expect_eq(r, "T_i T_i " + in, mu, t_action(ti, i, l));
                expect_eq(r, "dim-vector equivariance " + in, act_on_dim_vector(i, dim_vector(mu, l)), dim_vector(ti, l));
                if (l >= 3) {
                    long j = (i + 1) % l;
                    expect_eq(r, "braid " + in, apply_word_partition({static_cast<int>(i), static_cast<int>(j), static_cast<int>(i)}, mu, l),
                              apply_word_partition({static_cast<int>(j), static_cast<int>(i), static_cast<int>(j)}, mu, l));
                }
                for (long j = 0; j < l; ++j) {
                    long gap = mod(j - i, l);
                    if (gap < 2 || gap > l - 2) continue;
                    expect_eq(r, "commuting letters " + in + " j=" + std::to_string(j),
                              apply_word_partition({static_cast<int>(i), static_cast<int>(j)}, mu, l),
                              apply_word_partition({static_cast<int>(j), static_cast<int>(i)}, mu, l));
                }
            }
        }
    }
    return r;
}

Report check_equivariance(long samples, long max_word, long max_size, const std::vector<long>& ls, std::uint64_t seed) {
    Report r;
    r.suite = "equivariance";
    r.params = {{"samples", samples}, {"max_word", max_word}, {"max_size", max_size}, {"l", ls}, {"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    for (long s = 0; s < samples; ++s) {
        long l = ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)];
        GeneratorWord w = random_word(max_word, l, rng);
        Partition mu = random_partition(max_size, rng);
        ++r.instances;
        std::string in = tag(mu, l) + " w=" + nlohmann::json(w).dump();
        Partition wm = apply_word_partition(w, mu, l);
        expect_eq(r, "Core(w*μ) " + in, apply_word_partition(w, core(mu, l), l), core(wm, l));
        expect_eq(r, "Quot(w*μ) " + in, pr_action(w, quotient(mu, l)), quotient(wm, l));
        expect_eq(r, "d(w*μ) " + in, apply_word_dim_vector(w, dim_vector(mu, l)), dim_vector(wm, l));
    }
    return r;
}

Report check_momentmap(long max_size, const std::vector<long>& ls, bool inject_fault) {
    Report r;
    r.suite = "momentmap";
    r.params = {{"max_size", max_size}, {"l", ls}};
    if (inject_fault) r.params["inject_fault"] = true;
    Timer timer(r);
    bool injected = false;
    for (long l : ls)
        for (const auto& mu : partitions_up_to(max_size)) {
            ++r.instances;
            SymbolicRep rep = build_fixed_point(mu, l);
            for (std::size_t p = 0; inject_fault && !injected && p < rep.dim(); ++p)
                for (std::size_t q = 0; !injected && q < rep.dim(); ++q)
                    if (!rep.Y(p, q).is_zero()) {
                        rep.Y(p, q) = rep.Y(p, q) * Rational(2);
                        injected = true;
                    }
            CheckResult g = quiver_grading_check(rep);
            if (!g.ok) r.fail("quiver grading " + tag(mu, l), "graded", g.detail);
            CheckResult m = moment_map_check(rep);
            if (!m.ok) r.fail("moment map " + tag(mu, l), "diag(θ_ψ(j))", m.detail);
        }
    return r;
}

Report check_hook_matrix() {
    Report r;
    r.suite = "hook-matrix";
    Timer timer(r);
    r.instances = 1;
    const std::size_t l = 3;
    auto th = [&](std::size_t i) { return AffineForm::symbol(l, i); };
    const AffineForm h = th(2) + th(1) + th(0);
    Matrix<AffineForm> want(9, 9, AffineForm(l));
    // 1-based positions as printed
    auto set = [&](std::size_t p, std::size_t q, const AffineForm& v) { want(p - 1, q - 1) = v; };
    set(2, 1, th(2));
    set(3, 2, th(2) + th(1));
    set(4, 3, -th(2) - th(1) - th(0));
    set(5, 4, -th(1) - th(0));
    set(6, 5, -th(0));
    set(4, 8, h * Rational(-2));
    set(5, 9, h * Rational(-2));
    set(7, 1, h);
    set(8, 2, h);
    set(8, 7, th(1));
    set(9, 8, -th(2));
    Partition mu = from_frobenius({{3, 1}, {2, 1}});
    SymbolicRep rep = build_fixed_point(mu, 3);
    for (std::size_t p = 0; p < 9; ++p)
        for (std::size_t q = 0; q < 9; ++q)
            if (rep.Y(p, q) != want(p, q))
                r.fail("A((3,1|2,1)) entry (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")", want(p, q).to_string(),
                       rep.Y(p, q).to_string());
    return r;
}

Report check_witness(long max_size, const std::vector<long>& ls, long t_count, std::uint64_t seed) {
    Report r;
    r.suite = "witness";
    r.params = {{"max_size", max_size}, {"l", ls}, {"t_count", t_count}, {"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    std::vector<Rational> ts;
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    while (static_cast<long>(ts.size()) < t_count) {
        Rational t(num(rng), den(rng));
        t.canonicalize();
        if (t != 0 && t != 1 && t != -1) ts.push_back(t);
    }
    r.params["t"] = nlohmann::json::array();
    for (const auto& t : ts) r.params["t"].push_back(t.get_str());
    for (long l : ls)
        for (const auto& mu : partitions_up_to(max_size)) {
            SymbolicRep rep = build_fixed_point(mu, l);
            for (const auto& t : ts) {
                ++r.instances;
                CheckResult c = conjugation_witness(rep, t);
                if (!c.ok) r.fail("witness " + tag(mu, l) + " t=" + t.get_str(), "restored", c.detail);
            }
        }
    return r;
}

Report check_character(long max_size, const std::vector<long>& ls) {
    Report r;
    r.suite = "character";
    r.params = {{"max_size", max_size}, {"l", ls}};
    Timer timer(r);
    for (long l : ls)
        for (const auto& mu : partitions_up_to(max_size)) {
            ++r.instances;
            try {
                expect_eq(r, "fibre character " + tag(mu, l), residue(mu), fibre_character(mu, l));
                expect_eq(r, "P_μ " + tag(mu, l), residue(transpose(mu)), mu_grading(mu, l).poincare);
            } catch (const Error& e) {
                r.fail(tag(mu, l), "no error", e.what());
            }
        }
    return r;
}

Report check_eig(const std::vector<long>& ls, long max_n, long l1_max_n) {
    Report r;
    r.suite = "eig";
    r.params = {{"l", ls}, {"max_n", max_n}, {"l1_max_n", l1_max_n}};
    Timer timer(r);
    std::vector<std::pair<long, long>> sweep;
    for (long l : ls)
        if (l != 1) sweep.push_back({l, max_n});
    sweep.push_back({1, l1_max_n});
    for (auto [l, nmax] : sweep)
        for (long n = 0; n <= nmax; ++n)
            for (const auto& mu : enumerate_with_core(n * l, Partition(), l)) {
                ++r.instances;
                std::string in = tag(mu, l);
                try {
                    Multipartition qf = reverse(quotient(mu, l));
                    SymbolicMonomialSum direct = eig_direct(mu, l);
                    expect_eq(r, "eig_direct = eig_closed " + in, eig_closed(mu, l), direct);
                    expect_eq(r, "eig_direct = e-residue(Quot^♭) " + in, e_residue(qf), direct);
                    expect_eq(r, "eig_multipartition " + in, qf, eig_multipartition(mu, l));
                    std::vector<LaurentPoly> want;
                    const Multipartition q = quotient(mu, l);
                    for (const auto& c : q.components()) want.push_back(residue(c));
                    expect_eq(r, "component residue formula " + in, want, component_residue_formula(mu, l));
                } catch (const Error& e) {
                    r.fail(in, "no error", e.what());
                }
            }
    return r;
}

Report check_qhook(const std::vector<long>& ls, long max_n, long l1_max_n) {
    Report r;
    r.suite = "qhook";
    r.params = {{"l", ls}, {"max_n", max_n}, {"l1_max_n", l1_max_n}};
    Timer timer(r);
    std::vector<std::pair<long, long>> sweep;
    for (long l : ls)
        if (l != 1) sweep.push_back({l, max_n});
    sweep.push_back({1, l1_max_n});
    for (auto [l, nmax] : sweep)
        for (long n = 1; n <= nmax; ++n)
            for (const auto& mu : enumerate_with_core(n * l, Partition(), l)) {
                ++r.instances;
                try {
                    QHookCheck c = qhook_verify(mu, l);
                    if (!c.holds) r.fail("q-hook " + tag(mu, l), c.lhs.to_string(), c.rhs.to_string());
                } catch (const Error& e) {
                    r.fail("q-hook " + tag(mu, l), "no error", e.what());
                }
            }
    return r;
}

Report check_reflect_comb(long max_size, long max_core, const std::vector<long>& ls) {
    Report r;
    r.suite = "reflect-comb";
    r.params = {{"max_size", max_size}, {"max_core", max_core}, {"l", ls}};
    Timer timer(r);
    for (long l : ls)
        for (const auto& mu : partitions_up_to(max_size)) {
            Partition c = core(mu, l);
            if (c.size() > max_core) continue;
            Partition nu = transpose(c);
            for (long i = 0; i < l; ++i) {
                ++r.instances;
                std::string in = tag(mu, l) + " i=" + std::to_string(i);
                try {
                    Partition R = r_action(mu, i, nu, l);
                    expect_eq(r, "R_i = (T_i μ^t)^t " + in, transpose(t_action(transpose(mu), i, l)), R);
                    expect_eq(r, "Core(R_i μ) " + in, transpose(t_action(nu, i, l)), core(R, l));
                    GeneratorWord s{static_cast<int>(mod(l - i, l))};
                    expect_eq(r, "Quot(R_i μ) " + in, pr_action(s, quotient(mu, l)), quotient(R, l));
                } catch (const Error& e) {
                    r.fail(in, "no error", e.what());
                }
            }
        }
    return r;
}

Report check_reflect_numeric(long samples, long max_size, const std::vector<long>& ls, std::uint64_t seed) {
    Report r;
    r.suite = "reflect-numeric";
    r.params = {{"samples", samples}, {"max_size", max_size}, {"l", ls}, {"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    long resamples = 0;
    for (long s = 0; s < samples; ++s) {
        long l = ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)];
        Partition mu = random_partition(max_size, rng);
        long i = std::uniform_int_distribution<long>(0, l - 1)(rng);
        ++r.instances;
        std::string in = tag(mu, l) + " i=" + std::to_string(i);
        for (int attempt = 0;; ++attempt) {
            ParamVector th = sample_generic_theta(l, rng);
            try {
                ReflectionResult res = reflect_numeric(mu, i, l, th);
                std::string at = in + " θ=(";
                for (std::size_t k = 0; k < th.size(); ++k) at += (k ? "," : "") + th[k].get_str();
                at += ")";
                if (!res.moment_map.ok) r.fail("moment map " + at, "diag((σ_i·θ)_ψ')", res.moment_map.detail);
                if (!res.dims.ok) r.fail("dimension vector " + at, str(res.expected_dims), res.dims.detail);
                if (!res.graded.ok) r.fail("graded dimensions " + at, "cell counts and recurrence", res.graded.detail);
                if (!res.condition_c.ok) r.fail("condition (C) " + at, "homogeneous", res.condition_c.detail);
                break;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegenerateParameter || attempt >= 20) {
                    r.fail(in, "no error", e.what());
                    break;
                }
                ++resamples;
            }
        }
    }
    r.params["resamples"] = resamples;
    return r;
}

Report check_c_function(std::uint64_t seed) {
    Report r;
    r.suite = "c-function";
    r.params = {{"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    const Partition mu{6, 3, 2, 2, 2};
    const Partition mut = transpose(mu);
    r.instances += 1;
    expect_eq(r, "transpose((6,3,2,2,2))", Partition{5, 5, 2, 1, 1, 1}, mut);
    if (n_stat(mu) != 21 || n_stat(mut) != 21)
        r.fail("n((6,3,2,2,2)), n((5,5,2,1,1,1))", "21, 21", std::to_string(n_stat(mu)) + ", " + std::to_string(n_stat(mut)));
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
    for (int k = 0; k < 10; ++k) {
        ++r.instances;
        HParams p;
        p.h = Rational(num(rng), den(rng));
        p.h.canonicalize();
        Rational a = c_function(Multipartition({mu}), p), b = c_function(Multipartition({mut}), p);
        if (a != b) r.fail("c(μ) = c(μ^t) at h=" + p.h.get_str(), a.get_str(), b.get_str());
    }
    HParams probe;
    probe.h = 1;
    for (long n = 0; n <= 8; ++n)
        for (const auto& nu : partitions_of(n)) {
            if (transpose(nu) != nu) continue;
            ++r.instances;
            if (c_function(Multipartition({nu}), probe) != c_function(Multipartition({transpose(nu)}), probe))
                r.fail("symmetric self-tie " + nu.to_string(), "tie", "no tie");
        }
    long ties = 0;
    for (const auto& nu : partitions_of(15)) {
        Partition t = transpose(nu);
        if (t == nu || !(nu < t)) continue;
        ++r.instances;
        if (c_function(Multipartition({nu}), probe) == c_function(Multipartition({t}), probe)) ++ties;
    }
    r.params["non_symmetric_ties_n15"] = ties;
    if (ties == 0) r.fail("non-symmetric c-ties at n=15", ">= 1", "0");
    return r;
}

Report check_orderings(const std::vector<long>& ls, long max_n, long max_word, std::uint64_t seed) {
    Report r;
    r.suite = "orderings";
    r.params = {{"l", ls}, {"max_n", max_n}, {"max_word", max_word}, {"seed", seed}};
    Timer timer(r);
    std::mt19937_64 rng(seed);
    for (long l : ls) {
        std::vector<GeneratorWord> words{{}};
        if (l >= 2)
            for (int k = 0; k < 3; ++k) words.push_back(random_word(max_word, l, rng));
        for (const auto& w : words) {
            Partition core_w = l >= 2 ? apply_word_partition(w, Partition(), l) : Partition();
            for (long n = 0; n <= max_n; ++n) {
                auto all = multipartitions_of(n, static_cast<std::size_t>(l));
                std::set<Partition> images;
                std::string wtag = " l=" + std::to_string(l) + " w=" + nlohmann::json(w).dump();
                for (const auto& la : all) {
                    ++r.instances;
                    Partition img = induced_bijection(la, w, l);
                    images.insert(img);
                    expect_eq(r, "image core " + la.to_string() + wtag, core_w, core(img, l));
                    if (img.size() != n * l + core_w.size())
                        r.fail("image size " + la.to_string() + wtag, std::to_string(n * l + core_w.size()), std::to_string(img.size()));
                }
                if (images.size() != all.size())
                    r.fail("injectivity n=" + std::to_string(n) + wtag, std::to_string(all.size()), std::to_string(images.size()));
                if (n > 3) continue;
                // Partial-order axioms on P(l,n).
                std::map<std::pair<std::size_t, std::size_t>, Dominance> rel;
                for (std::size_t a = 0; a < all.size(); ++a)
                    for (std::size_t b = 0; b < all.size(); ++b) rel[{a, b}] = order_compare(all[a], all[b], w, l);
                auto le = [&](std::size_t a, std::size_t b) {
                    Dominance d = rel[{a, b}];
                    return d == Dominance::Less || d == Dominance::Equal;
                };
                for (std::size_t a = 0; a < all.size(); ++a) {
                    if (rel[{a, a}] != Dominance::Equal) r.fail("reflexive " + all[a].to_string() + wtag, "Equal", to_string(rel[{a, a}]));
                    for (std::size_t b = 0; b < all.size(); ++b) {
                        if (a != b && rel[{a, b}] == Dominance::Equal)
                            r.fail("antisymmetric " + all[a].to_string() + " " + all[b].to_string() + wtag, "distinct", "Equal");
                        for (std::size_t c = 0; c < all.size(); ++c)
                            if (le(a, b) && le(b, c) && !le(a, c))
                                r.fail("transitive " + all[a].to_string() + " " + all[b].to_string() + " " + all[c].to_string() + wtag,
                                       "a ⪯ c", to_string(rel[{a, c}]));
                    }
                }
            }
        }
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"roundtrip", "weyl-relations",  "momentmap", "character", "eig",
                                                "qhook",     "reflect-comb",    "reflect-numeric", "orderings", "example411"};
    return names;
}

Report run_suite(const std::string& id, const SuiteOptions& o) {
    auto ls = [&](std::vector<long> d) { return o.ls.value_or(d); };
    auto size = [&](long d) { return o.max_size.value_or(d); };
    Report r;
    r.suite = id;
    if (id == "example411") {
        r.absorb(check_bead_example());
    } else if (id == "roundtrip") {
        r.absorb(check_roundtrip(size(14), ls({2, 3, 4, 5})));
    } else if (id == "weyl-relations") {
        r.absorb(check_weyl_relations(500, size(15), ls({2, 3, 4}), o.seed));
        r.absorb(check_equivariance(200, 6, std::min(size(15), 12L), ls({2, 3, 4}), o.seed));
    } else if (id == "momentmap") {
        r.absorb(check_momentmap(size(10), ls({1, 2, 3}), o.inject_fault));
        r.absorb(check_hook_matrix());
        r.absorb(check_witness(std::min(size(10), 8L), ls({2, 3}), 5, o.seed));
    } else if (id == "character") {
        r.absorb(check_character(size(10), ls({1, 2, 3})));
    } else if (id == "eig") {
        r.absorb(check_eig(ls({2, 3}), 4, 6));
    } else if (id == "qhook") {
        r.absorb(check_qhook(ls({2, 3}), 4, 8));
    } else if (id == "reflect-comb") {
        r.absorb(check_reflect_comb(size(12), 4, ls({2, 3})));
    } else if (id == "reflect-numeric") {
        r.absorb(check_reflect_numeric(50, size(8), ls({2, 3}), o.seed));
    } else if (id == "orderings") {
        r.absorb(check_orderings(ls({1, 2, 3}), 4, 4, o.seed));
        r.absorb(check_c_function(o.seed));
    } else {
        throw Error(ErrorCode::UnknownSuite, "unknown suite '" + id + "'");
    }
    r.params["seed"] = o.seed;
    return r;
}

}  // namespace cqv
