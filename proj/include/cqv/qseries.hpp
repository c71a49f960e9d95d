#pragma once

#include "cqv/laurent.hpp"
#include "cqv/partitions.hpp"

namespace cqv {

LaurentPoly q_int(long n);
LaurentPoly q_poch(long n, long step = 1);
LaurentPoly hook_length_poly(const Partition& mu);
RationalFn schur_principal(const Partition& mu);
LaurentPoly fake_degree(const Multipartition& la);
RationalFn qhook_rhs(const Multipartition& nu, long N);

struct QHookCheck {
    bool holds;
    LaurentPoly lhs;
    RationalFn rhs;
};
QHookCheck qhook_verify(const Partition& mu, long l);

}  // namespace cqv
