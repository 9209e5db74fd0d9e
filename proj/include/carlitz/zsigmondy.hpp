#ifndef CARLITZ_ZSIGMONDY_HPP
#define CARLITZ_ZSIGMONDY_HPP

/// Zsigmondy classification for the Carlitz action.
///
/// Fix q > 2 and a monic pair (u, m), not both constant.  For a monic prime
/// p with p not dividing u, the Carlitz annihilator P_{u,p} is the unique
/// monic polynomial of least positive degree with C_P(u) = 0 mod p; it
/// divides p - 1, and C_n(u) = 0 mod p iff P_{u,p} | n.  When p | u the
/// annihilator is 1.
///
/// p is a Zsigmondy prime for (u, m) when P_{u,p} = m exactly.  Every
/// Zsigmondy prime divides Psi_m(u), and a prime factor of Psi_m(u) fails to
/// be Zsigmondy iff it divides m; in that case m = P_{u,p} * p^s for some
/// s >= 1 and p^2 does not divide Psi_m(u).  A Zsigmondy prime is large when
/// deg p > deg m or p^2 | C_m(u).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/factor.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

/// Monic associates of a pair of nonzero polynomials.
std::pair<Poly, Poly> normalize_pair(const Poly& u, const Poly& m);

/// P_{u, prime} as above; u != 0, prime monic irreducible.
Poly carlitz_annihilator(const Poly& u, const Poly& prime);

/// True iff carlitz_annihilator(u, prime) = m.  Requires q > 2, prime monic
/// irreducible, u and m monic with at least one of positive degree.
bool is_zsigmondy(const Poly& prime, const Poly& u, const Poly& m);

/// All Zsigmondy primes for (u, m), sorted canonically.  For deg m >= 1
/// these are the prime factors of Psi_m(u) not dividing m (each result is
/// double-checked with is_zsigmondy); for m = 1 they are the primes dividing
/// u.  Preconditions as for is_zsigmondy.
std::vector<Poly> zsigmondy_primes(const Poly& u, const Poly& m);

enum class LargeReason { degree, square };

std::string to_string(LargeReason r);

/// The large Zsigmondy primes among zsigmondy_primes(u, m), each with the
/// triggering condition ("degree" preferred when both hold; "square" is
/// tested as C_m(u) = 0 mod p^2 without forming C_m(u)).
std::vector<std::pair<Poly, LargeReason>> large_zsigmondy_primes(const Poly& u, const Poly& m);

/// Same classification applied to an already computed Zsigmondy list, for
/// callers that need both lists without factoring Psi_m(u) twice.
std::vector<std::pair<Poly, LargeReason>> large_zsigmondy_among(const std::vector<Poly>& zsigmondy,
                                                                const Poly& u, const Poly& m);

/// One non-Zsigmondy prime factor p | gcd-sense of (Psi_m(u), m) together
/// with its structure witness: m = annihilator * p^s exactly.
struct NonZsigmondyFactor {
    Poly prime;
    Poly annihilator;
    unsigned s;
};

struct ZsigmondyReport {
    unsigned q;
    Poly u;
    Poly m;
    /// Absent when deg m = 0 (Psi is not defined there).
    std::optional<Poly> psi_value;
    std::vector<Poly> zsigmondy;
    std::vector<std::pair<Poly, LargeReason>> large;
    std::vector<NonZsigmondyFactor> non_zsigmondy;
    /// Present when deg m >= 1: is m + 1 irreducible, and is the Zsigmondy
    /// list exactly {m + 1}.
    std::optional<bool> m_plus_one_prime;
    std::optional<bool> unique_zsigmondy_is_m_plus_one;
};

/// Full classification of a pair.  Inputs are normalized to monic; pairs
/// with deg u = deg m = 0 after normalization are rejected (no Zsigmondy
/// notion exists for them).  Requires q > 2 and u, m != 0.
ZsigmondyReport classify(const Poly& u, const Poly& m);

} // namespace carlitz

#endif
