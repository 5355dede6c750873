#pragma once

#include "tripack/symbolic.hpp"

namespace tripack::detail {

Real real_of(const mpz_class& z, mpfr_prec_t bits);
Real real_of(const mpq_class& q, mpfr_prec_t bits);

// exact dyadic rational with the same value
mpq_class rat_of(const Real& x);

// pseudo-remainder: leading(d)^(deg n - deg d + 1) * n modulo d
IntPoly1 prem1(IntPoly1 n, const IntPoly1& d);

}  // namespace tripack::detail
