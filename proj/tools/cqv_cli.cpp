#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cqv/affine_weyl.hpp"
#include "cqv/beads.hpp"
#include "cqv/error.hpp"
#include "cqv/fixed_points.hpp"
#include "cqv/json_io.hpp"
#include "cqv/partitions.hpp"
#include "cqv/verify.hpp"

using namespace cqv;

namespace {

struct Globals {
    long l = 2;
    bool json_out = false;
    std::uint64_t seed = 1;
    std::optional<long> max_size;
    bool stable = false;
};

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json_out)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string word_text(const GeneratorWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int i : w) s += "σ" + std::to_string(i);
    return s;
}

ParamVector parse_theta(const std::string& text) {
    ParamVector th;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            Rational q(tok);
            q.canonicalize();
            th.push_back(q);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::InvalidArgument, "bad rational '" + tok + "' in θ");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return th;
}

std::string theta_text(const ParamVector& th) {
    std::string s = "(";
    for (std::size_t i = 0; i < th.size(); ++i) s += (i ? "," : "") + th[i].get_str();
    return s + ")";
}

std::string check_text(const char* name, const CheckResult& c) {
    return std::string(name) + ": " + (c.ok ? "ok" : "FAIL " + c.detail);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cores, quotients and quiver-variety fixed points"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--l", g.l, "level l")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--max-size", g.max_size, "largest |μ| in verification sweeps");
    app.add_flag("--stable", g.stable, "zero the millis field for byte-stable reports");

    std::string part_arg, part_arg2, frob_arg, word_arg, theta_arg, suite;
    long idx = 0;
    bool inject = false;
    int code = 0;

    auto sub = [&](const char* name, const char* desc) {
        auto* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    auto* c_core = sub("core", "l-core of a partition");
    c_core->add_option("mu", part_arg, "partition, comma-separated parts")->required();
    c_core->callback([&] {
        Partition mu = parse_partition(part_arg);
        Partition nu = core(mu, g.l);
        emit(g, to_json(nu), nu.to_string());
    });

    auto* c_quot = sub("quot", "l-quotient of a partition");
    c_quot->add_option("mu", part_arg, "partition")->required();
    c_quot->callback([&] {
        Multipartition q = quotient(parse_partition(part_arg), g.l);
        emit(g, to_json(q), q.to_string());
    });

    auto* c_frob = sub("frobenius", "Frobenius form, or the partition of a Frobenius form");
    c_frob->add_option("mu", part_arg, "partition");
    c_frob->add_option("--from", frob_arg, "Frobenius form 'a1,a2|b1,b2'");
    c_frob->callback([&] {
        if (!frob_arg.empty()) {
            auto bar = frob_arg.find('|');
            if (bar == std::string::npos) throw Error(ErrorCode::InvalidArgument, "Frobenius form needs '|'");
            auto ints = [](const std::string& s) { return parse_partition(s).parts(); };
            FrobeniusForm f{ints(frob_arg.substr(0, bar)), ints(frob_arg.substr(bar + 1))};
            Partition mu = from_frobenius(f);
            emit(g, to_json(mu), mu.to_string());
            return;
        }
        if (part_arg.empty()) throw CLI::RequiredError("mu or --from");
        FrobeniusForm f = frobenius_form(parse_partition(part_arg));
        std::string text = "(";
        for (std::size_t i = 0; i < f.arms.size(); ++i) text += (i ? "," : "") + std::to_string(f.arms[i]);
        text += "|";
        for (std::size_t i = 0; i < f.legs.size(); ++i) text += (i ? "," : "") + std::to_string(f.legs[i]);
        emit(g, to_json(f), text + ")");
    });

    auto* c_beads = sub("beads", "bead diagram, core, quotient and dimension vector");
    c_beads->add_option("mu", part_arg, "partition")->required();
    c_beads->callback([&] {
        Partition mu = parse_partition(part_arg);
        BeadDiagram b = bead_diagram(mu, g.l);
        Partition nu = core(mu, g.l);
        Multipartition q = quotient(mu, g.l);
        DimVector d = dim_vector(mu, g.l);
        json j{{"beads", to_json(b)}, {"core", to_json(nu)}, {"quotient", to_json(q)}, {"dim_vector", d}};
        emit(g, j, b.to_string() + "core " + nu.to_string() + "\nquotient " + q.to_string() + "\ndim vector " + json(d).dump());
    });

    auto* c_fp = sub("fixedpoint", "the C*-fixed quiver representation attached to μ");
    c_fp->add_option("mu", part_arg, "partition")->required();
    c_fp->callback([&] {
        SymbolicRep rep = build_fixed_point(parse_partition(part_arg), g.l);
        CheckResult grading = quiver_grading_check(rep), mm = moment_map_check(rep);
        json j = to_json(rep);
        j["checks"] = {{"grading", grading.ok}, {"moment_map", mm.ok}};
        emit(g, j, format_rep(rep) + "\n" + check_text("grading", grading) + "\n" + check_text("moment map", mm));
        if (!grading.ok || !mm.ok) code = 1;
    });

    auto* c_eig = sub("eig", "eigenvalues of the Euler element at μ (trivial core)");
    c_eig->add_option("mu", part_arg, "partition with trivial l-core")->required();
    c_eig->callback([&] {
        Partition mu = parse_partition(part_arg);
        SymbolicMonomialSum s = eig_direct(mu, g.l);
        Multipartition la = eig_multipartition(mu, g.l);
        emit(g, {{"eig", to_json(s)}, {"multipartition", to_json(la)}}, to_string(s) + "\nmultipartition " + la.to_string());
    });

    auto* c_ref = sub("reflect", "reflection functor R_i at μ");
    c_ref->add_option("mu", part_arg, "partition")->required();
    c_ref->add_option("--i", idx, "vertex i")->required();
    c_ref->add_option("--theta", theta_arg, "numeric θ_0,...,θ_{l-1}; runs the explicit functor");
    c_ref->callback([&] {
        Partition mu = parse_partition(part_arg);
        Partition R = r_action(mu, idx, g.l);
        json j{{"result", to_json(R)}};
        std::string text = "R_" + std::to_string(idx) + mu.to_string() + " = " + R.to_string();
        if (!theta_arg.empty()) {
            ReflectionResult res = reflect_numeric(mu, idx, g.l, parse_theta(theta_arg));
            j["theta"] = nlohmann::json::array();
            for (const auto& t : res.theta) j["theta"].push_back(t.get_str());
            j["dim_vector"] = res.expected_dims;
            j["poincare"] = to_json(res.poincare);
            j["checks"] = {{"moment_map", res.moment_map.ok},
                           {"dims", res.dims.ok},
                           {"graded", res.graded.ok},
                           {"condition_c", res.condition_c.ok}};
            text += "\nσ_i·θ = " + theta_text(res.theta) + "\nPoincaré " + res.poincare.to_string() + "\n" +
                    check_text("moment map", res.moment_map) + "\n" + check_text("dims", res.dims) + "\n" +
                    check_text("graded", res.graded) + "\n" + check_text("condition (C)", res.condition_c);
            if (!res.ok()) code = 1;
        }
        emit(g, j, text);
    });

    auto* c_tau = sub("tau", "τ_w(λ) and the induced bijection λ ↦ τ_w(λ^t)");
    c_tau->add_option("lambda", part_arg, "multipartition, components separated by '/'")->required();
    c_tau->add_option("--word", word_arg, "generator word, comma-separated indices (last acts first)");
    c_tau->callback([&] {
        Multipartition la = parse_multipartition(part_arg);
        GeneratorWord w = parse_word(word_arg);
        long l = static_cast<long>(la.l());
        Partition a = tau_w(la, w, l), b = induced_bijection(la, w, l);
        emit(g, {{"tau", to_json(a)}, {"induced", to_json(b)}},
             "τ_" + word_text(w) + " = " + a.to_string() + "\nτ_" + word_text(w) + "(λ^t) = " + b.to_string());
    });

    auto* c_ord = sub("order", "compare two multipartitions in the w-twisted combinatorial order");
    c_ord->add_option("lambda", part_arg, "multipartition")->required();
    c_ord->add_option("mu", part_arg2, "multipartition")->required();
    c_ord->add_option("--word", word_arg, "generator word");
    c_ord->callback([&] {
        Multipartition la = parse_multipartition(part_arg), mu = parse_multipartition(part_arg2);
        if (la.l() != mu.l()) throw Error(ErrorCode::InvalidArgument, "multipartitions have different levels");
        Dominance d = order_compare(la, mu, parse_word(word_arg), static_cast<long>(la.l()));
        emit(g, json(to_string(d)), to_string(d));
    });

    auto* c_ver = sub("verify", "run a verification suite");
    c_ver->add_option("suite", suite, "suite id")->required()->check(CLI::IsMember(suite_names()));
    c_ver->add_flag("--inject-fault", inject, "corrupt one matrix entry to exercise failure reporting");
    c_ver->callback([&] {
        SuiteOptions o;
        if (app.get_option("--l")->count() > 0) o.ls = std::vector<long>{g.l};
        o.max_size = g.max_size;
        o.seed = g.seed;
        o.inject_fault = inject;
        Report r = run_suite(suite, o);
        if (g.stable) r.millis = 0;
        std::string text = r.suite + ": " + std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) +
                           " failures, " + std::to_string(r.millis) + " ms";
        for (std::size_t k = 0; k < r.failures.size() && k < 20; ++k)
            text += "\n  " + r.failures[k].input + "\n    expected " + r.failures[k].expected + "\n    actual   " + r.failures[k].actual;
        emit(g, to_json(r), text);
        if (!r.passed()) code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
