#include "carlitz/zsigmondy.hpp"

#include <stdexcept>

#include "carlitz/carlitz.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

void require_theorem_field(const Poly& u) {
    if (u.field()->q() <= 2) {
        throw DomainError("Zsigmondy classification requires q > 2");
    }
}

void require_monic_pair(const Poly& u, const Poly& m) {
    require_same_field(u.field(), m.field());
    if (u.is_zero() || m.is_zero()) {
        throw DomainError("pair components must be nonzero");
    }
    if (!u.is_monic() || !m.is_monic()) {
        throw DomainError("pair components must be monic");
    }
    if (u.is_constant() && m.is_constant()) {
        throw DomainError("pair (1, 1) has no Zsigmondy notion");
    }
}

void require_prime(const Poly& prime) {
    if (prime.degree() < 1 || !prime.is_monic() || !is_irreducible(prime)) {
        throw DomainError("expected a monic irreducible polynomial");
    }
}

std::vector<std::pair<Poly, LargeReason>> large_among(const std::vector<Poly>& primes,
                                                      const Poly& u, const Poly& m) {
    std::vector<std::pair<Poly, LargeReason>> out;
    for (const Poly& p : primes) {
        if (p.degree() > m.degree()) {
            out.emplace_back(p, LargeReason::degree);
        } else if (carlitz_eval_mod(m, u, p * p).is_zero()) {
            out.emplace_back(p, LargeReason::square);
        }
    }
    return out;
}

} // namespace

std::pair<Poly, Poly> normalize_pair(const Poly& u, const Poly& m) {
    require_same_field(u.field(), m.field());
    if (u.is_zero() || m.is_zero()) {
        throw DomainError("pair components must be nonzero");
    }
    return {u.monic(), m.monic()};
}

Poly carlitz_annihilator(const Poly& u, const Poly& prime) {
    require_same_field(u.field(), prime.field());
    if (u.is_zero()) {
        throw DomainError("annihilator of 0 is undefined");
    }
    require_prime(prime);
    const auto& spec = u.field();
    if (poly_mod(u, prime).is_zero()) {
        return Poly::one(spec);
    }
    // C_{p-1}(u) = 0 mod p for p not dividing u, so the annihilator is the
    // smallest monic divisor of p - 1 that still annihilates; strip prime
    // factors one at a time while annihilation survives.
    Poly n = prime - Poly::one(spec);
    if (!carlitz_eval_mod(n, u, prime).is_zero()) {
        throw std::logic_error("C_{p-1}(u) != 0 mod p for p coprime to u");
    }
    for (const PrimePower& pp : factorize(n).factors) {
        for (unsigned i = 0; i < pp.exp; ++i) {
            Poly candidate = poly_exact_div(n, pp.prime);
            if (!carlitz_eval_mod(candidate, u, prime).is_zero()) break;
            n = candidate;
        }
    }
    return n;
}

bool is_zsigmondy(const Poly& prime, const Poly& u, const Poly& m) {
    require_theorem_field(u);
    require_monic_pair(u, m);
    require_prime(prime);
    // The annihilator equals m iff C_m(u) = 0 mod prime while no maximal
    // proper divisor m / xi annihilates: annihilating divisors of m are
    // exactly the multiples of the annihilator.
    if (m.is_constant()) {
        return poly_mod(u, prime).is_zero();
    }
    if (poly_mod(u, prime).is_zero()) return false;
    if (!carlitz_eval_mod(m, u, prime).is_zero()) return false;
    for (const PrimePower& pp : factorize(m).factors) {
        Poly proper = poly_exact_div(m, pp.prime);
        if (carlitz_eval_mod(proper, u, prime).is_zero()) return false;
    }
    return true;
}

std::vector<Poly> zsigmondy_primes(const Poly& u, const Poly& m) {
    require_theorem_field(u);
    require_monic_pair(u, m);
    std::vector<Poly> out;
    if (m.is_constant()) {
        // The annihilator is 1 exactly for the primes dividing u.
        for (const PrimePower& pp : factorize(u).factors) {
            out.push_back(pp.prime);
        }
        return out;
    }
    Poly psi = cyclotomic_eval(m, u);
    for (const PrimePower& pp : factorize(psi).factors) {
        if (poly_divides(pp.prime, m)) continue;
        if (!is_zsigmondy(pp.prime, u, m)) {
            throw std::logic_error("prime factor of Psi_m(u) coprime to m is not Zsigmondy");
        }
        out.push_back(pp.prime);
    }
    return out;
}

std::string to_string(LargeReason r) {
    return r == LargeReason::degree ? "degree" : "square";
}

std::vector<std::pair<Poly, LargeReason>> large_zsigmondy_primes(const Poly& u, const Poly& m) {
    return large_among(zsigmondy_primes(u, m), u, m);
}

std::vector<std::pair<Poly, LargeReason>> large_zsigmondy_among(const std::vector<Poly>& zsigmondy,
                                                                const Poly& u, const Poly& m) {
    return large_among(zsigmondy, u, m);
}

ZsigmondyReport classify(const Poly& u_in, const Poly& m_in) {
    auto [u, m] = normalize_pair(u_in, m_in);
    require_theorem_field(u);
    require_monic_pair(u, m);
    const auto& spec = u.field();

    ZsigmondyReport report{spec->q(), u, m, std::nullopt, {}, {}, {}, std::nullopt, std::nullopt};
    if (m.is_constant()) {
        report.zsigmondy = zsigmondy_primes(u, m);
        report.large = large_among(report.zsigmondy, u, m);
        return report;
    }

    Poly psi = cyclotomic_eval(m, u);
    report.psi_value = psi;
    for (const PrimePower& pp : factorize(psi).factors) {
        if (!poly_divides(pp.prime, m)) {
            if (!is_zsigmondy(pp.prime, u, m)) {
                throw std::logic_error("prime factor of Psi_m(u) coprime to m is not Zsigmondy");
            }
            report.zsigmondy.push_back(pp.prime);
            continue;
        }
        // Non-Zsigmondy factor: necessarily m = annihilator * prime^s with
        // s >= 1, and the factor divides Psi_m(u) exactly once.
        if (pp.exp != 1) {
            throw std::logic_error("non-Zsigmondy factor divides Psi_m(u) more than once");
        }
        Poly ann = carlitz_annihilator(u, pp.prime);
        Poly rest = poly_exact_div(m, ann);
        unsigned s = 0;
        while (!rest.is_constant()) {
            rest = poly_exact_div(rest, pp.prime);
            ++s;
        }
        if (!rest.is_one() || s == 0) {
            throw std::logic_error("non-Zsigmondy factor violates m = P * p^s");
        }
        report.non_zsigmondy.push_back({pp.prime, ann, s});
    }
    report.large = large_among(report.zsigmondy, u, m);
    report.m_plus_one_prime = is_irreducible(m + Poly::one(spec));
    report.unique_zsigmondy_is_m_plus_one =
        report.zsigmondy.size() == 1 && report.zsigmondy.front() == m + Poly::one(spec);
    return report;
}

} // namespace carlitz
