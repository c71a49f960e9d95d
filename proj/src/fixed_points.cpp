#include "cqv/fixed_points.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cqv/beads.hpp"
#include "cqv/error.hpp"

namespace cqv {

namespace {

std::size_t uz(long x) { return static_cast<std::size_t>(x); }

AffineForm theta(long i, long l) { return AffineForm::symbol(uz(l), uz(mod(i, l))); }

std::string pos(std::size_t p, std::size_t q) {
    return "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")";
}

DimVector class_dims(const Partition& mu, long l) {
    Partition nu = core(mu, l);
    long n = (mu.size() - nu.size()) / l;
    DimVector d = dim_vector(transpose(nu), l);
    for (auto& x : d) x += n;
    return d;
}

}  // namespace

std::vector<HookBlock> hook_blocks(const Partition& mu) {
    FrobeniusForm f = frobenius_form(mu);
    std::vector<HookBlock> out;
    long offset = 0;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        HookBlock h;
        h.a = f.arms[i];
        h.b = f.legs[i];
        h.r = h.b + 1;
        h.m = h.a + h.b + 1;
        h.start = offset;
        h.q = offset + h.r;
        offset += h.m;
        out.push_back(h);
    }
    return out;
}

Matrix<AffineForm> a_small(long m, long r, long l) {
    if (r < 1 || r > m) throw Error(ErrorCode::InvalidArgument, "a_small needs 1 <= r <= m");
    Matrix<AffineForm> A(uz(m), uz(m), AffineForm(uz(l)));
    for (long j = 1; j < m; ++j) {
        AffineForm e(uz(l));
        if (j < r) {
            for (long i = 1; i <= j; ++i) e += theta(r - i, l);
        } else {
            for (long i = 0; i <= m - j - 1; ++i) e -= theta(-m + r + i, l);
        }
        A(uz(j), uz(j - 1)) = e;
    }
    return A;
}

Matrix<AffineForm> lambda_small(long m, long l) {
    Matrix<AffineForm> L(uz(m), uz(m), AffineForm(uz(l)));
    for (long j = 0; j + 1 < m; ++j) L(uz(j), uz(j + 1)) = AffineForm(uz(l), 1);
    return L;
}

AffineForm beta_form(const HookBlock& h, long l) {
    AffineForm b = theta(0, l);
    for (long s = 1; s <= h.r - 1; ++s) b += theta(h.r - s, l);
    for (long s = 0; s <= h.m - h.r - 1; ++s) b += theta(-h.m + h.r + s, l);
    return b;
}

std::vector<AffineForm> commutator_check_small(long m, long r, long l) {
    Matrix<AffineForm> L = lambda_small(m, l), A = a_small(m, r, l);
    Matrix<AffineForm> C = L * A - A * L;
    std::vector<AffineForm> diag;
    for (long p = 0; p < m; ++p)
        for (long q = 0; q < m; ++q) {
            if (p != q && !C(uz(p), uz(q)).is_zero())
                throw Error(ErrorCode::NotDiagonal, "commutator entry " + pos(uz(p), uz(q)) + " is nonzero");
        }
    for (long j = 1; j <= m; ++j) {
        const AffineForm& e = C(uz(j - 1), uz(j - 1));
        AffineForm want(uz(l));
        if (j != r) {
            want = theta(r - j, l);
        } else {
            for (long i = 1; i <= r - 1; ++i) want -= theta(r - i, l);
            for (long i = 0; i <= m - r - 1; ++i) want -= theta(-m + r + i, l);
        }
        if (e != want)
            throw Error(ErrorCode::NotDiagonal, "commutator diagonal " + std::to_string(j) + " is " + e.to_string());
        diag.push_back(e);
    }
    return diag;
}

SymbolicRep build_fixed_point(const Partition& mu, long l) {
    if (l < 1) throw Error(ErrorCode::InvalidArgument, "l must be positive");
    SymbolicRep rep;
    rep.l = l;
    rep.mu = mu;
    rep.blocks = hook_blocks(mu);
    const std::size_t N = uz(mu.size());
    const AffineForm zero(uz(l));
    rep.X = Matrix<AffineForm>(N, N, zero);
    rep.Y = Matrix<AffineForm>(N, N, zero);
    rep.I = Matrix<AffineForm>(1, N, zero);
    rep.J = Matrix<AffineForm>(N, 1, zero);
    rep.psi.assign(N, 0);
    std::vector<AffineForm> betas;
    for (const auto& h : rep.blocks) betas.push_back(beta_form(h, l));

    for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
        const HookBlock& h = rep.blocks[i];
        Matrix<AffineForm> L = lambda_small(h.m, l), A = a_small(h.m, h.r, l);
        for (long p = 0; p < h.m; ++p) {
            rep.psi[uz(h.start + p)] = mod(h.r - (p + 1), l);
            for (long q = 0; q < h.m; ++q) {
                rep.X(uz(h.start + p), uz(h.start + q)) = L(uz(p), uz(q));
                rep.Y(uz(h.start + p), uz(h.start + q)) = A(uz(p), uz(q));
            }
        }
        rep.I(0, uz(h.q - 1)) = AffineForm(uz(l), 1);
        rep.J(uz(h.q - 1), 0) = betas[i];
    }
    // Off-diagonal blocks: one nonzero diagonal, offset r_j - r_i - 1.
    for (std::size_t i = 0; i < rep.blocks.size(); ++i)
        for (std::size_t j = 0; j < rep.blocks.size(); ++j) {
            if (i == j) continue;
            const HookBlock &bi = rep.blocks[i], &bj = rep.blocks[j];
            long d = bj.r - bi.r - 1;
            for (long s = 1; s <= bi.m; ++s) {
                long c = s + d;
                if (c < 1 || c > bj.m) continue;
                AffineForm v = zero;
                if (i > j && s <= bi.r) v = betas[i];
                if (i < j && s > bi.r) v = -betas[i];
                rep.Y(uz(bi.start + s - 1), uz(bj.start + c - 1)) = v;
            }
        }
    return rep;
}

SymbolicRep build_fixed_point(const Partition& mu, const Partition& nu, long l) {
    if (core(mu, l) != nu)
        throw Error(ErrorCode::InvalidArgument, mu.to_string() + " does not have " + std::to_string(l) + "-core " + nu.to_string());
    return build_fixed_point(mu, l);
}

CheckResult quiver_grading_check(const SymbolicRep& rep) {
    const long l = rep.l;
    const std::size_t N = rep.dim();
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q) {
            if (!rep.X(p, q).is_zero() && rep.psi[p] != mod(rep.psi[q] + 1, l))
                return {false, "Λ entry " + pos(p, q) + " does not raise the class"};
            if (!rep.Y(p, q).is_zero() && rep.psi[p] != mod(rep.psi[q] - 1, l))
                return {false, "A entry " + pos(p, q) + " does not lower the class"};
        }
    for (std::size_t p = 0; p < N; ++p) {
        if (!rep.J(p, 0).is_zero() && rep.psi[p] != 0) return {false, "J row " + std::to_string(p + 1) + " outside class 0"};
        if (!rep.I(0, p).is_zero() && rep.psi[p] != 0) return {false, "I column " + std::to_string(p + 1) + " outside class 0"};
    }
    DimVector counts(uz(l), 0);
    for (long c : rep.psi) ++counts[uz(c)];
    if (counts != class_dims(rep.mu, l)) return {false, "class sizes differ from nδ + d(ν^t)"};
    return {};
}

Matrix<AffineForm> moment_map(const SymbolicRep& rep) { return rep.X * rep.Y - rep.Y * rep.X + rep.J * rep.I; }

CheckResult moment_map_check(const SymbolicRep& rep) {
    Matrix<AffineForm> M = moment_map(rep);
    for (std::size_t p = 0; p < rep.dim(); ++p)
        for (std::size_t q = 0; q < rep.dim(); ++q) {
            AffineForm want = p == q ? theta(rep.psi[p], rep.l) : AffineForm(uz(rep.l));
            if (M(p, q) != want)
                return {false, "entry " + pos(p, q) + " is " + M(p, q).to_string() + ", expected " + want.to_string()};
        }
    return {};
}

CheckResult conjugation_witness(const SymbolicRep& rep, const Rational& t_in) {
    Rational t = t_in;
    t.canonicalize();
    if (t == 0) throw Error(ErrorCode::InvalidArgument, "t must be nonzero");
    const std::size_t N = rep.dim();
    auto tpow = [&t](long e) {
        Rational r = 1;
        Rational base = e >= 0 ? t : Rational(1 / t);
        for (long k = 0; k < (e >= 0 ? e : -e); ++k) r *= base;
        return r;
    };
    // g = D(t) P(t) Q(t)
    std::vector<Rational> g(N);
    for (const auto& b : rep.blocks)
        for (long u = 0; u < b.m; ++u) {
            long j = b.start + u + 1;
            g[uz(j - 1)] = tpow(-1) * tpow(b.q) * tpow(1 - j);
        }
    const Rational tinv = 1 / t;
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
            Rational ratio = g[p] / g[q];
            if (rep.X(p, q) * Rational(ratio * tinv) != rep.X(p, q))
                return {false, "Λ entry " + pos(p, q) + " not restored"};
            if (rep.Y(p, q) * Rational(ratio * t) != rep.Y(p, q))
                return {false, "A entry " + pos(p, q) + " not restored"};
        }
        if (rep.J(p, 0) * g[p] != rep.J(p, 0)) return {false, "J row " + std::to_string(p + 1) + " not restored"};
        if (rep.I(0, p) * Rational(1 / g[p]) != rep.I(0, p))
            return {false, "I column " + std::to_string(p + 1) + " not restored"};
    }
    return {};
}

MuGrading mu_grading(const Partition& mu, long l) {
    SymbolicRep rep = build_fixed_point(mu, l);
    MuGrading g;
    g.deg.assign(rep.dim(), 0);
    for (const auto& b : rep.blocks)
        for (long u = 1; u <= b.m; ++u) g.deg[uz(b.start + u - 1)] = b.r - u;
    for (std::size_t p = 0; p < rep.dim(); ++p) {
        for (std::size_t q = 0; q < rep.dim(); ++q) {
            if (!rep.Y(p, q).is_zero() && g.deg[p] != g.deg[q] - 1)
                throw Error(ErrorCode::ConditionCViolated, "A entry " + pos(p, q) + " does not lower degree");
            if (!rep.X(p, q).is_zero() && g.deg[p] != g.deg[q] + 1)
                throw Error(ErrorCode::ConditionCViolated, "Λ entry " + pos(p, q) + " does not raise degree");
        }
        if (!rep.J(p, 0).is_zero() && g.deg[p] != 0)
            throw Error(ErrorCode::ConditionCViolated, "J lands outside degree 0");
        if (!rep.I(0, p).is_zero() && g.deg[p] != 0)
            throw Error(ErrorCode::ConditionCViolated, "I reads outside degree 0");
        g.poincare.add_term(g.deg[p], 1);
    }
    return g;
}

LaurentPoly fibre_character(const Partition& mu, long l) {
    (void)l;  // the eigenvalue list depends only on the Frobenius form
    LaurentPoly ch;
    for (const auto& b : hook_blocks(mu))
        for (long j = 1; j <= b.m; ++j) ch.add_term(j - b.r, 1);
    if (ch != residue(mu))
        throw Error(ErrorCode::CharacterMismatch, "fibre character " + ch.to_string() + " vs residue " + residue(mu).to_string());
    return ch;
}

std::string to_string(const SymbolicMonomialSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [f, k] : s) {
        if (!out.empty()) out += " + ";
        if (k != 1) out += std::to_string(k) + "*";
        out += "t^(" + f.to_string() + ")";
    }
    return out;
}

ParamBasisForm to_h_basis(const AffineForm& f) {
    const std::size_t l = f.arity();
    ParamBasisForm g(l, f.constant());
    // θ_0 = -h - ΣH_j and θ_j = H_j
    g.coeff(0) = -f.coeff(0);
    for (std::size_t j = 1; j < l; ++j) g.coeff(j) = f.coeff(j) - f.coeff(0);
    return g;
}

ParamBasisForm e_shift(long j, long l) {
    ParamBasisForm e(uz(l));
    for (long k = 1; k <= j; ++k) e.coeff(uz(k)) = 1;
    return e;
}

ParamBasisForm e_prime(long j, long l) {
    j = mod(j, l);
    return j == 0 ? ParamBasisForm::symbol(uz(l), 0, -1) : e_shift(j, l);
}

ParamBasisForm e_double_prime(long j, long l) {
    j = mod(j, l);
    if (j == l - 1) return ParamBasisForm(uz(l));
    return ParamBasisForm::symbol(uz(l), 0) + e_shift(l - 1 - j, l);
}

namespace {

void require_trivial_core(const Partition& mu, long l) {
    if (!core(mu, l).empty())
        throw Error(ErrorCode::NonTrivialCore, mu.to_string() + " has non-empty " + std::to_string(l) + "-core");
}

void add(SymbolicMonomialSum& s, const ParamBasisForm& f, long k = 1) {
    long& v = s[f];
    v += k;
    if (v == 0) s.erase(f);
}

}  // namespace

SymbolicMonomialSum eig_direct(const Partition& mu, long l) {
    require_trivial_core(mu, l);
    SymbolicMonomialSum out;
    for (const auto& b : hook_blocks(mu)) {
        Matrix<AffineForm> LA = lambda_small(b.m, l) * a_small(b.m, b.r, l);
        for (long j = 1; j <= b.m; ++j)
            if (mod(j, l) == mod(b.r - 1, l)) add(out, to_h_basis(LA(uz(j - 1), uz(j - 1))));
    }
    return out;
}

std::vector<HookType> hook_types(const Partition& mu, long l) {
    std::vector<HookType> out;
    const ParamBasisForm h = ParamBasisForm::symbol(uz(l), 0);
    for (const auto& b : hook_blocks(mu)) {
        HookType t;
        t.type_L = mod(b.b, l);
        t.type_A = mod(-(b.a + 1), l);
        for (long j = 1; j <= (b.b + l - 1) / l; ++j) add(t.xi_L, e_prime(b.b, l) + h * Rational(-(j - 1)));
        for (long j = 1; j <= (b.a + 1) / l; ++j) add(t.xi_A, e_double_prime(b.a, l) + h * Rational(j - 1));
        out.push_back(t);
    }
    return out;
}

SymbolicMonomialSum eig_closed(const Partition& mu, long l) {
    require_trivial_core(mu, l);
    SymbolicMonomialSum out;
    for (const auto& t : hook_types(mu, l)) {
        for (const auto& [f, k] : t.xi_L) add(out, f, k);
        for (const auto& [f, k] : t.xi_A) add(out, f, k);
    }
    return out;
}

SymbolicMonomialSum e_residue(const Multipartition& la) {
    const long l = static_cast<long>(la.l());
    SymbolicMonomialSum out;
    for (long j = 0; j < l; ++j)
        for (const Cell& c : cells(la[j]))
            add(out, e_shift(j, l) + ParamBasisForm::symbol(uz(l), 0, c.content()));
    return out;
}

Multipartition eig_multipartition(const Partition& mu, long l) {
    SymbolicMonomialSum eig = eig_direct(mu, l);
    std::vector<LaurentPoly> res(uz(l));
    for (const auto& [f, k] : eig) {
        if (f.constant() != 0 || f.coeff(0).get_den() != 1 || k < 0)
            throw Error(ErrorCode::DecodeFailure, "monomial t^(" + f.to_string() + ") has no cell");
        long j = 0;
        while (j + 1 < l && f.coeff(uz(j + 1)) == 1) ++j;
        for (long m = j + 1; m < l; ++m)
            if (f.coeff(uz(m)) != 0)
                throw Error(ErrorCode::DecodeFailure, "H-pattern of t^(" + f.to_string() + ") is not e_j");
        res[uz(j)].add_term(f.coeff(0).get_num().get_si(), k);
    }
    std::vector<Partition> comps;
    for (const auto& r : res) comps.push_back(partition_from_residue(r));
    return Multipartition(comps);
}

std::vector<LaurentPoly> component_residue_formula(const Partition& mu, long l) {
    std::vector<LaurentPoly> out(uz(l));
    for (const auto& b : hook_blocks(mu)) {
        long ja = mod(-(b.a + 1), l);
        long pa = mod(b.a, l) == l - 1 ? 0 : 1;
        for (long m = 1; m <= (b.a + 1) / l; ++m) out[uz(l - ja - 1)].add_term(pa + m - 1, 1);
        long jb = mod(b.b, l);
        long pb = jb == 0 ? -1 : 0;
        for (long m = 1; m <= (b.b + l - 1) / l; ++m) out[uz(l - jb - 1)].add_term(pb - (m - 1), 1);
    }
    return out;
}

LaurentPoly reflected_poincare(const LaurentPoly& p, long i, long l) {
    if (l < 2) throw Error(ErrorCode::InvalidArgument, "reflections need l >= 2");
    for (const auto& [e, c] : p.terms())
        if (c < 0 || c.get_den() != 1)
            throw Error(ErrorCode::InvalidArgument, "Poincaré polynomial must have non-negative integer coefficients");
    long lo = p.is_zero() ? 0 : std::min(0L, p.min_exponent());
    long hi = p.is_zero() ? 0 : std::max(0L, p.max_exponent());
    LaurentPoly out;
    for (long e = lo - 1; e <= hi + 1; ++e) {
        Rational c = p.coeff(e);
        if (mod(e, l) == mod(i, l)) {
            c = p.coeff(e + 1) + p.coeff(e - 1) - p.coeff(e);
            if (mod(i, l) == 0 && e == 0) c += 1;
        }
        if (c < 0) throw Error(ErrorCode::NegativeCoefficient, "coefficient of t^" + std::to_string(e) + " becomes negative");
        out.add_term(e, c);
    }
    return out;
}

Partition r_action(const Partition& mu, long i, long l) {
    LaurentPoly p = reflected_poincare(mu_grading(mu, l).poincare, i, l);
    Partition la = transpose(partition_from_residue(p));
    Partition expected = transpose(t_action(transpose(mu), i, l));
    if (la != expected)
        throw Error(ErrorCode::ReflectionMismatch, "recurrence gives " + la.to_string() + ", T-action gives " + expected.to_string());
    return la;
}

Partition r_action(const Partition& mu, long i, const Partition& nu, long l) {
    if (core(mu, l) != transpose(nu))
        throw Error(ErrorCode::InvalidArgument, mu.to_string() + " does not lie over the core " + transpose(nu).to_string());
    return r_action(mu, i, l);
}

NumericRep substitute(const SymbolicRep& rep, const ParamVector& theta_in) {
    ParamVector th = theta_in;
    for (auto& x : th) x.canonicalize();
    if (static_cast<long>(th.size()) != rep.l) throw Error(ErrorCode::InvalidArgument, "parameter length differs from l");
    auto ev = [&th](const Matrix<AffineForm>& M) {
        QMatrix R(M.rows(), M.cols(), Rational(0));
        for (std::size_t p = 0; p < M.rows(); ++p)
            for (std::size_t q = 0; q < M.cols(); ++q) R(p, q) = M(p, q).evaluate(th);
        return R;
    };
    NumericRep n;
    n.l = rep.l;
    n.X = ev(rep.X);
    n.Y = ev(rep.Y);
    n.I = ev(rep.I);
    n.J = ev(rep.J);
    n.cls = rep.psi;
    n.deg = mu_grading(rep.mu, rep.l).deg;
    return n;
}

namespace {

enum class Side { A, B, Inf };

struct Coord {
    Side side;
    std::size_t idx;  // original basis index (unused for Inf)
    long tdeg;        // degree of the image in V_i
};

CheckResult condition_c(const NumericRep& n) {
    const std::size_t N = n.dim();
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
            if (n.X(p, q) != 0 && (n.deg[p] != n.deg[q] + 1 || n.cls[p] != mod(n.cls[q] + 1, n.l)))
                return {false, "X' entry " + pos(p, q) + " is not homogeneous of degree +1"};
            if (n.Y(p, q) != 0 && (n.deg[p] != n.deg[q] - 1 || n.cls[p] != mod(n.cls[q] - 1, n.l)))
                return {false, "Y' entry " + pos(p, q) + " is not homogeneous of degree -1"};
        }
        if (n.J(p, 0) != 0 && n.deg[p] != 0) return {false, "J' lands outside degree 0"};
        if (n.I(0, p) != 0 && n.deg[p] != 0) return {false, "I' reads outside degree 0"};
    }
    return {};
}

}  // namespace

ReflectionResult reflect_numeric(const Partition& mu, long i, long l, const ParamVector& theta_in) {
    ParamVector th = theta_in;
    for (auto& x : th) x.canonicalize();
    if (l < 2) throw Error(ErrorCode::InvalidArgument, "reflections need l >= 2");
    if (i < 0 || i >= l) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    const Rational ti = th.at(uz(i));
    if (ti == 0) throw Error(ErrorCode::DegenerateParameter, "θ_i = 0");

    NumericRep n = substitute(build_fixed_point(mu, l), th);
    const std::size_t N = n.dim();
    std::vector<std::size_t> Vi;
    std::vector<Coord> S;
    for (std::size_t p = 0; p < N; ++p) {
        if (n.cls[p] == i) Vi.push_back(p);
        if (n.cls[p] == mod(i - 1, l)) S.push_back({Side::A, p, n.deg[p] + 1});
    }
    for (std::size_t p = 0; p < N; ++p)
        if (n.cls[p] == mod(i + 1, l)) S.push_back({Side::B, p, n.deg[p] - 1});
    if (i == 0) S.push_back({Side::Inf, 0, 0});

    QMatrix psi(S.size(), Vi.size(), Rational(0)), phi(Vi.size(), S.size(), Rational(0));
    for (std::size_t s = 0; s < S.size(); ++s)
        for (std::size_t v = 0; v < Vi.size(); ++v) {
            const Coord& c = S[s];
            std::size_t x = Vi[v];
            switch (c.side) {
                case Side::A: psi(s, v) = n.Y(c.idx, x); phi(v, s) = n.X(x, c.idx); break;
                case Side::B: psi(s, v) = -n.X(c.idx, x); phi(v, s) = n.Y(x, c.idx); break;
                case Side::Inf: psi(s, v) = n.I(0, x); phi(v, s) = n.J(x, 0); break;
            }
        }
    QMatrix ti_id = identity_matrix(Vi.size());
    for (std::size_t v = 0; v < Vi.size(); ++v) ti_id(v, v) = ti;
    if (phi * psi != ti_id) throw Error(ErrorCode::NotDiagonal, "φψ is not θ_i·id; the input violates the moment map");

    MuGrading g0 = mu_grading(mu, l);
    LaurentPoly predicted = reflected_poincare(g0.poincare, i, l);
    auto wdim = [&n](long d) {
        long c = 0;
        for (long x : n.deg) c += x == d;
        return c;
    };

    ReflectionResult res;
    // Graded pieces of ker φ_i, one target degree at a time.
    std::set<long> degrees;
    for (const auto& c : S) degrees.insert(c.tdeg);
    for (std::size_t v : Vi) degrees.insert(n.deg[v]);
    std::vector<std::vector<Rational>> kcols;
    std::vector<long> kdeg;
    for (long d : degrees) {
        std::vector<std::size_t> Sd, Wd;
        for (std::size_t s = 0; s < S.size(); ++s)
            if (S[s].tdeg == d) Sd.push_back(s);
        for (std::size_t v = 0; v < Vi.size(); ++v)
            if (n.deg[Vi[v]] == d) Wd.push_back(v);
        for (std::size_t v = 0; v < Vi.size(); ++v)
            for (std::size_t s : Sd)
                if (n.deg[Vi[v]] != d && phi(v, s) != 0) throw Error(ErrorCode::ConditionCViolated, "φ is not homogeneous");
        QMatrix psid(Sd.size(), Wd.size(), Rational(0)), phid(Wd.size(), Sd.size(), Rational(0));
        for (std::size_t a = 0; a < Sd.size(); ++a)
            for (std::size_t b = 0; b < Wd.size(); ++b) {
                psid(a, b) = psi(Sd[a], Wd[b]);
                phid(b, a) = phi(Wd[b], Sd[a]);
            }
        if (rank(psid) != Wd.size())
            throw Error(ErrorCode::DegenerateParameter, "ψ_i is not injective in degree " + std::to_string(d));
        QMatrix K = kernel_basis(phid);
        long predicted = wdim(d + 1) + wdim(d - 1) - wdim(d) + ((i == 0 && d == 0) ? 1 : 0);
        if (static_cast<long>(K.cols()) != predicted && res.graded.ok)
            res.graded = {false, "dim ker φ in degree " + std::to_string(d) + " is " + std::to_string(K.cols()) +
                                     ", predicted " + std::to_string(predicted)};
        for (std::size_t c = 0; c < K.cols(); ++c) {
            std::vector<Rational> col(S.size(), Rational(0));
            for (std::size_t a = 0; a < Sd.size(); ++a) col[Sd[a]] = K(a, c);
            kcols.push_back(col);
            kdeg.push_back(d);
        }
    }
    const std::size_t k = kcols.size();
    QMatrix K(S.size(), k, Rational(0));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t s = 0; s < S.size(); ++s) K(s, c) = kcols[c][s];

    QMatrix joined(S.size(), Vi.size() + k, Rational(0));
    for (std::size_t s = 0; s < S.size(); ++s) {
        for (std::size_t v = 0; v < Vi.size(); ++v) joined(s, v) = psi(s, v);
        for (std::size_t c = 0; c < k; ++c) joined(s, Vi.size() + c) = K(s, c);
    }
    if (rank(joined) != S.size()) throw Error(ErrorCode::DegenerateParameter, "Im ψ ⊕ ker φ does not span");

    // π projects onto ker φ along Im ψ.
    QMatrix pi = psi * phi;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b) pi(a, b) = (a == b ? Rational(1) : Rational(0)) - pi(a, b) / ti;

    std::vector<long> newidx(N, -1);
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < N; ++p)
        if (n.cls[p] != i) {
            newidx[p] = static_cast<long>(kept.size());
            kept.push_back(p);
        }
    const std::size_t M = kept.size() + k;
    NumericRep r;
    r.l = l;
    r.X = QMatrix(M, M, Rational(0));
    r.Y = QMatrix(M, M, Rational(0));
    r.I = QMatrix(1, M, Rational(0));
    r.J = QMatrix(M, 1, Rational(0));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = 0; b < kept.size(); ++b) {
            r.X(a, b) = n.X(kept[a], kept[b]);
            r.Y(a, b) = n.Y(kept[a], kept[b]);
        }
        r.I(0, a) = n.I(0, kept[a]);
        r.J(a, 0) = n.J(kept[a], 0);
        r.cls.push_back(n.cls[kept[a]]);
        r.deg.push_back(n.deg[kept[a]]);
    }
    for (std::size_t c = 0; c < k; ++c) {
        r.cls.push_back(i);
        r.deg.push_back(kdeg[c]);
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
        const Coord& c = S[s];
        // Outgoing maps of the new vertex: coordinates of the kernel inclusion.
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t nc = kept.size() + col;
            switch (c.side) {
                case Side::A: r.Y(uz(newidx[c.idx]), nc) = K(s, col); break;
                case Side::B: r.X(uz(newidx[c.idx]), nc) = K(s, col); break;
                case Side::Inf: r.I(0, nc) = K(s, col); break;
            }
        }
        // Incoming maps: ±θ_i times the projection of the coordinate vector.
        Rational scale = c.side == Side::B ? ti : Rational(-ti);
        std::vector<Rational> w(S.size());
        for (std::size_t a = 0; a < S.size(); ++a) w[a] = pi(a, s) * scale;
        std::vector<Rational> x = solve_unique(K, w);
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t nc = kept.size() + col;
            switch (c.side) {
                case Side::A: r.X(nc, uz(newidx[c.idx])) = x[col]; break;
                case Side::B: r.Y(nc, uz(newidx[c.idx])) = x[col]; break;
                case Side::Inf: r.J(nc, 0) = x[col]; break;
            }
        }
    }

    res.theta = act_on_parameter(i, th);
    QMatrix mm = r.X * r.Y - r.Y * r.X + r.J * r.I;
    for (std::size_t a = 0; a < M && res.moment_map.ok; ++a)
        for (std::size_t b = 0; b < M; ++b) {
            Rational want = a == b ? res.theta[uz(r.cls[a])] : Rational(0);
            if (mm(a, b) != want) {
                res.moment_map = {false, "entry " + pos(a, b) + " is " + mm(a, b).get_str() + ", expected " + want.get_str()};
                break;
            }
        }

    res.expected_dims = act_on_dim_vector(i, class_dims(mu, l));
    DimVector got(uz(l), 0);
    for (long c : r.cls) ++got[uz(c)];
    if (got != res.expected_dims) res.dims = {false, "dimension vector differs from σ_i*(nδ+d_ν)"};

    for (long d : r.deg) res.poincare.add_term(d, 1);
    if (res.graded.ok && res.poincare != predicted)
        res.graded = {false, "graded Poincaré " + res.poincare.to_string() + " vs recurrence " + predicted.to_string()};
    if (res.graded.ok && res.poincare != residue(t_action(transpose(mu), i, l)))
        res.graded = {false, "graded Poincaré differs from the residue of T_i(μ^t)"};

    res.condition_c = condition_c(r);
    res.rep = std::move(r);
    return res;
}

std::string format_rep(const SymbolicRep& rep) {
    const std::size_t N = rep.dim();
    std::vector<bool> block_edge(N + 1, false);
    for (const auto& b : rep.blocks) block_edge[uz(b.start)] = true;
    auto render = [&](const std::string& name, const Matrix<AffineForm>& M) {
        std::vector<std::vector<std::string>> cellsv(M.rows(), std::vector<std::string>(M.cols()));
        std::vector<std::size_t> width(M.cols(), 1);
        auto glyphs = [](const std::string& s) {
            std::size_t c = 0;
            for (unsigned char ch : s) c += (ch & 0xC0) != 0x80;
            return c;
        };
        for (std::size_t p = 0; p < M.rows(); ++p)
            for (std::size_t q = 0; q < M.cols(); ++q) {
                cellsv[p][q] = M(p, q).to_string();
                width[q] = std::max(width[q], glyphs(cellsv[p][q]));
            }
        std::ostringstream os;
        os << name << ":\n";
        for (std::size_t p = 0; p < M.rows(); ++p) {
            if (p > 0 && M.rows() == N && block_edge[p]) os << "  ---\n";
            os << " ";
            for (std::size_t q = 0; q < M.cols(); ++q) {
                if (q > 0 && M.cols() == N && block_edge[q]) os << " |";
                os << " " << std::string(width[q] - glyphs(cellsv[p][q]), ' ') << cellsv[p][q];
            }
            os << "\n";
        }
        return os.str();
    };
    std::ostringstream os;
    os << "μ = " << rep.mu.to_string() << ", l = " << rep.l << ", hooks:";
    for (const auto& b : rep.blocks) os << " (m=" << b.m << ",r=" << b.r << ",q=" << b.q << ")";
    os << "\nψ:";
    for (long c : rep.psi) os << " " << c;
    os << "\n" << render("Λ", rep.X) << render("A", rep.Y) << render("I", rep.I) << render("J", rep.J);
    return os.str();
}

}  // namespace cqv
