#pragma once

#include <map>
#include <string>
#include <vector>

#include "cqv/affine_weyl.hpp"
#include "cqv/linear.hpp"
#include "cqv/partitions.hpp"

namespace cqv {

// One Frobenius hook (a|b) and its block in the fixed-point matrices.
struct HookBlock {
    long a = 0, b = 0;
    long r = 0;      // b + 1
    long m = 0;      // a + b + 1
    long q = 0;      // 1-based row of the root inside the full matrix
    long start = 0;  // 0-based offset of the block
};

std::vector<HookBlock> hook_blocks(const Partition& mu);

template <class T>
struct QuiverRep {
    long l = 1;
    Partition mu;
    Matrix<T> X, Y, I, J;  // I is 1×N, J is N×1
    std::vector<long> psi; // class of each basis vector
    std::vector<HookBlock> blocks;
    std::size_t dim() const { return psi.size(); }
};

using SymbolicRep = QuiverRep<AffineForm>;

struct NumericRep {
    long l = 1;
    QMatrix X, Y, I, J;
    std::vector<long> cls;
    std::vector<long> deg;
    std::size_t dim() const { return cls.size(); }
};

Matrix<AffineForm> a_small(long m, long r, long l);
Matrix<AffineForm> lambda_small(long m, long l);
std::vector<AffineForm> commutator_check_small(long m, long r, long l);
AffineForm beta_form(const HookBlock& h, long l);

SymbolicRep build_fixed_point(const Partition& mu, long l);
SymbolicRep build_fixed_point(const Partition& mu, const Partition& nu, long l);

struct CheckResult {
    bool ok = true;
    std::string detail;
};
CheckResult quiver_grading_check(const SymbolicRep& rep);
Matrix<AffineForm> moment_map(const SymbolicRep& rep);
// moment_map(rep) == diag(θ_{ψ(j)})
CheckResult moment_map_check(const SymbolicRep& rep);
CheckResult conjugation_witness(const SymbolicRep& rep, const Rational& t);

struct MuGrading {
    std::vector<long> deg;
    LaurentPoly poincare;
};
MuGrading mu_grading(const Partition& mu, long l);
LaurentPoly fibre_character(const Partition& mu, long l);

using SymbolicMonomialSum = std::map<ParamBasisForm, long>;
std::string to_string(const SymbolicMonomialSum& s);

ParamBasisForm to_h_basis(const AffineForm& f);
ParamBasisForm e_shift(long j, long l);
ParamBasisForm e_prime(long j, long l);
ParamBasisForm e_double_prime(long j, long l);

SymbolicMonomialSum eig_direct(const Partition& mu, long l);
SymbolicMonomialSum eig_closed(const Partition& mu, long l);

struct HookType {
    long type_L = 0;
    long type_A = 0;
    SymbolicMonomialSum xi_L;
    SymbolicMonomialSum xi_A;
};
std::vector<HookType> hook_types(const Partition& mu, long l);

Multipartition eig_multipartition(const Partition& mu, long l);
// Monomials t^{c·h + e_j} of the quotient multipartition's cells.
SymbolicMonomialSum e_residue(const Multipartition& la);
// Entry k is the closed form for the residue of quotient component k.
std::vector<LaurentPoly> component_residue_formula(const Partition& mu, long l);

LaurentPoly reflected_poincare(const LaurentPoly& p, long i, long l);
Partition r_action(const Partition& mu, long i, long l);
Partition r_action(const Partition& mu, long i, const Partition& nu, long l);

NumericRep substitute(const SymbolicRep& rep, const ParamVector& theta);

struct ReflectionResult {
    NumericRep rep;
    ParamVector theta;  // σ_i·θ
    DimVector expected_dims;
    LaurentPoly poincare;
    CheckResult moment_map;
    CheckResult dims;
    CheckResult graded;  // per-degree cell counts and the recurrence
    CheckResult condition_c;
    bool ok() const { return moment_map.ok && dims.ok && graded.ok && condition_c.ok; }
};
ReflectionResult reflect_numeric(const Partition& mu, long i, long l, const ParamVector& theta);

std::string format_rep(const SymbolicRep& rep);

}  // namespace cqv
