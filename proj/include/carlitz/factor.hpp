#ifndef CARLITZ_FACTOR_HPP
#define CARLITZ_FACTOR_HPP

/// Irreducibility, factorization, and the multiplicative combinatorics of
/// A = F_q[T]: monic divisors and the Euler function
///
///     phi(m) = #(A / mA)^x = prod_i ( q^{deg p_i^{e_i}} - q^{deg p_i^{e_i - 1}} ).
///
/// Factorization runs squarefree decomposition, then distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting.  The randomized
/// splitting draws from a PRNG seeded deterministically from the input
/// coefficient bytes, so results are reproducible run to run; the CARLITZ_SEED
/// environment variable overrides the seed.

#include <cstdint>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/// Standard test: T^{q^n} = T mod f, and gcd(T^{q^{n/l}} - T, f) = 1 for
/// every prime l | n, all powers computed by modular exponentiation in A/f.
/// Requires deg f >= 1.
bool is_irreducible(const Poly& f);

struct PrimePower {
    Poly prime;   // monic irreducible
    unsigned exp; // >= 1
};

/// unit * prod primes^exp == the input, primes monic irreducible, strictly
/// increasing in the canonical order.
struct Factorization {
    FieldElement unit;
    std::vector<PrimePower> factors;

    Poly reassemble() const;
};

/// Factor a nonzero polynomial.  Deterministic given the same input and the
/// same CARLITZ_SEED environment (unset counts as a setting).
Factorization factorize(const Poly& f);

/// All monic irreducibles of degree exactly d, in enumeration order.
std::vector<Poly> enumerate_monic_irreducible(const FieldSpecPtr& spec, int d);

/// Euler function of a nonzero m; units have phi = 1, and phi(unit * m) =
/// phi(m).  Throws DomainError on m = 0.
std::uint64_t euler_phi(const Poly& m);

/// All monic divisors of a nonzero m, sorted canonically (1 and the monic
/// associate of m included).
std::vector<Poly> monic_divisors(const Poly& m);

/// Text form "(T)^2*(T+1)", factors in canonical order, "^1" omitted, with
/// a "c*" prefix when the unit c is not 1.  A bare unit prints as itself.
std::string to_string(const Factorization& f);

} // namespace carlitz

#endif
