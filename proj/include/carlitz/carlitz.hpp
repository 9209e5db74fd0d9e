#ifndef CARLITZ_CARLITZ_HPP
#define CARLITZ_CARLITZ_HPP

/// The Carlitz module action of A = F_q[T] on polynomials.
///
/// C is the F_q-algebra homomorphism from A into the twisted polynomial ring
/// A<tau> (tau the q-th power map) with C_T = T + tau.  For each nonzero m,
/// C_m(x) = sum_i [m, i] x^{q^i} is an F_q-linear polynomial; the bracket
/// coefficients satisfy the recursion
///
///     [T*a, i] = T * [a, i] + [a, i-1]^q,        [1, 0] = 1,
///
/// with the q-th power acting on coefficients through the semilinear Poly
/// map.  Key identities (tested, not assumed): [m, 0] = m, [m, deg m] =
/// leading coefficient of m, and deg [m, i] = q^i (deg m - i) for monic m.

#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/// Coefficient vector of C_m: coeff[i] multiplies x^{q^i}, size deg(m) + 1.
struct CarlitzCoeffs {
    Poly m;
    std::vector<Poly> coeff;
};

/// Coefficients of C_m for nonzero m.
CarlitzCoeffs carlitz_coeffs(const Poly& m);

/// Coefficients of the composition C_a after C_b, equal to C_{a*b}.
CarlitzCoeffs carlitz_compose(const CarlitzCoeffs& a, const CarlitzCoeffs& b);

/// C_m(u) exactly.  C_0 is the zero map and C_m(0) = 0.
Poly carlitz_eval(const Poly& m, const Poly& u);

/// C_m(u) mod modulus without forming the exact value: iterates
/// v_{i+1} = T v_i + v_i^q (mod modulus) through the digits of m.
/// Requires deg modulus >= 1.
Poly carlitz_eval_mod(const Poly& m, const Poly& u, const Poly& modulus);

} // namespace carlitz

#endif
