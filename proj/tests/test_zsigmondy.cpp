#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/carlitz.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/zsigmondy.hpp"
#include "test_util.hpp"

using namespace carlitz;
using carlitz::test::P;

namespace {

// First annihilating monic found scanning degrees upward; checks uniqueness
// within the winning degree.
Poly annihilator_by_scan(const Poly& u, const Poly& prime) {
    const auto& spec = u.field();
    for (int d = 0; d <= prime.degree(); ++d) {
        std::vector<Poly> hits;
        for (const Poly& n : enumerate_monic(spec, d)) {
            if (carlitz_eval_mod(n, u, prime).is_zero()) hits.push_back(n);
        }
        if (!hits.empty()) {
            REQUIRE(hits.size() == 1);
            return hits.front();
        }
    }
    FAIL("no annihilator of degree <= deg prime");
    return Poly::zero(spec);
}

std::vector<Poly> all_monic_up_to(const FieldSpecPtr& spec, int dmax) {
    std::vector<Poly> out;
    for (int d = 0; d <= dmax; ++d) {
        for (const Poly& f : enumerate_monic(spec, d)) out.push_back(f);
    }
    return out;
}

} // namespace

TEST_CASE("normalize_pair") {
    auto f3 = FieldSpec::make(3, 1);
    auto [u, m] = normalize_pair(P("2*T", f3), P("2*T^2+2", f3));
    CHECK(u == P("T", f3));
    CHECK(m == P("T^2+1", f3));
    CHECK_THROWS_AS(normalize_pair(Poly::zero(f3), P("T", f3)), DomainError);
    CHECK_THROWS_AS(normalize_pair(P("T", f3), Poly::zero(f3)), DomainError);
}

TEST_CASE("carlitz_annihilator matches the degree scan") {
    auto f3 = FieldSpec::make(3, 1);
    std::vector<Poly> primes;
    for (int d = 1; d <= 3; ++d) {
        for (const Poly& p : enumerate_monic_irreducible(f3, d)) primes.push_back(p);
    }
    for (const Poly& prime : primes) {
        for (const Poly& u : all_monic_up_to(f3, 2)) {
            Poly fast = carlitz_annihilator(u, prime);
            CAPTURE(to_string(prime));
            CAPTURE(to_string(u));
            CHECK(fast == annihilator_by_scan(u, prime));
            if (poly_mod(u, prime).is_zero()) {
                CHECK(fast.is_one());
            } else {
                CHECK(poly_divides(fast, prime - Poly::one(f3)));
                CHECK(fast.degree() >= 1);
            }
            // the annihilator only sees u up to units
            auto two = FieldElement::from_integer(f3, 2);
            CHECK(carlitz_annihilator(u * two, prime) == fast);
        }
    }
}

TEST_CASE("carlitz_annihilator validation") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK_THROWS_AS(carlitz_annihilator(Poly::zero(f3), P("T", f3)), DomainError);
    CHECK_THROWS_AS(carlitz_annihilator(P("1", f3), P("T^2", f3)), DomainError);
    CHECK_THROWS_AS(carlitz_annihilator(P("1", f3), P("2*T", f3)), DomainError);
    CHECK_THROWS_AS(carlitz_annihilator(P("1", f3), P("2", f3)), DomainError);
}

TEST_CASE("is_zsigmondy spot checks") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(is_zsigmondy(P("T+1", f3), P("1", f3), P("T", f3)));
    CHECK(is_zsigmondy(P("T^2+1", f3), P("1", f3), P("T^2", f3)));
    CHECK_FALSE(is_zsigmondy(P("T", f3), P("1", f3), P("T", f3)));
    CHECK_FALSE(is_zsigmondy(P("T+1", f3), P("1", f3), P("T^2", f3)));
    // constant m: Zsigmondy iff the prime divides u
    CHECK(is_zsigmondy(P("T", f3), P("T", f3), P("1", f3)));
    CHECK_FALSE(is_zsigmondy(P("T+1", f3), P("T", f3), P("1", f3)));
}

TEST_CASE("zsigmondy_primes examples") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(zsigmondy_primes(P("1", f3), P("T^2", f3)) == std::vector<Poly>{P("T^2+1", f3)});
    CHECK(zsigmondy_primes(P("1", f3), P("T^2+T", f3)).empty()); // Bang exception
    CHECK(zsigmondy_primes(P("T^2+T", f3), P("1", f3)) ==
          std::vector<Poly>{P("T", f3), P("T+1", f3)});
}

TEST_CASE("large Zsigmondy reasons") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(to_string(LargeReason::degree) == "degree");
    CHECK(to_string(LargeReason::square) == "square");

    // (1, T^3+T): the unique Zsigmondy prime has degree 5 > 3
    auto large1 = large_zsigmondy_primes(P("1", f3), P("T^3+T", f3));
    REQUIRE(large1.size() == 1);
    CHECK(large1[0].first == P("T^5+T^4+2*T^3+T^2+T+1", f3));
    CHECK(large1[0].second == LargeReason::degree);

    // (T, T+1): Psi_{T+1}(T) = (T+2)^2 and C_{T+1}(T) = T (T+2)^2
    auto large2 = large_zsigmondy_primes(P("T", f3), P("T+1", f3));
    REQUIRE(large2.size() == 1);
    CHECK(large2[0].first == P("T+2", f3));
    CHECK(large2[0].second == LargeReason::square);
    Poly sq = P("T+2", f3) * P("T+2", f3);
    CHECK(poly_mod(carlitz_eval(P("T+1", f3), P("T", f3)), sq).is_zero());

    // no large prime for a Feit exception
    CHECK(large_zsigmondy_primes(P("1", f3), P("T", f3)).empty());

    // the precomputed-list variant agrees
    auto zs = zsigmondy_primes(P("T", f3), P("T+1", f3));
    CHECK(large_zsigmondy_among(zs, P("T", f3), P("T+1", f3)) == large2);
}

TEST_CASE("classify on (T, T)") {
    auto f3 = FieldSpec::make(3, 1);
    ZsigmondyReport r = classify(P("T", f3), P("T", f3));
    CHECK(r.q == 3);
    CHECK(r.u == P("T", f3));
    CHECK(r.m == P("T", f3));
    REQUIRE(r.psi_value.has_value());
    CHECK(*r.psi_value == P("T^2+T", f3));
    CHECK(r.zsigmondy == std::vector<Poly>{P("T+1", f3)});
    CHECK(r.large.empty());
    REQUIRE(r.non_zsigmondy.size() == 1);
    CHECK(r.non_zsigmondy[0].prime == P("T", f3));
    CHECK(r.non_zsigmondy[0].annihilator.is_one());
    CHECK(r.non_zsigmondy[0].s == 1);
    REQUIRE(r.m_plus_one_prime.has_value());
    CHECK(*r.m_plus_one_prime);
    REQUIRE(r.unique_zsigmondy_is_m_plus_one.has_value());
    CHECK(*r.unique_zsigmondy_is_m_plus_one);
}

TEST_CASE("classify on (1, T^2+1)") {
    auto f3 = FieldSpec::make(3, 1);
    ZsigmondyReport r = classify(P("1", f3), P("T^2+1", f3));
    REQUIRE(r.psi_value.has_value());
    CHECK(*r.psi_value == P("T^3+T^2+T+2", f3));
    CHECK(r.zsigmondy == std::vector<Poly>{P("T^3+T^2+T+2", f3)});
    REQUIRE(r.large.size() == 1);
    CHECK(r.large[0].second == LargeReason::degree);
    CHECK(r.non_zsigmondy.empty());
    CHECK_FALSE(*r.m_plus_one_prime);
    CHECK_FALSE(*r.unique_zsigmondy_is_m_plus_one);
}

TEST_CASE("classify normalizes and handles constant m") {
    auto f3 = FieldSpec::make(3, 1);
    ZsigmondyReport r = classify(P("2*T^2+2*T", f3), P("2", f3));
    CHECK(r.u == P("T^2+T", f3));
    CHECK(r.m.is_one());
    CHECK_FALSE(r.psi_value.has_value());
    CHECK(r.zsigmondy == std::vector<Poly>{P("T", f3), P("T+1", f3)});
    REQUIRE(r.large.size() == 2);
    CHECK(r.large[0].second == LargeReason::degree);
    CHECK(r.large[1].second == LargeReason::degree);
    CHECK_FALSE(r.m_plus_one_prime.has_value());
    CHECK_FALSE(r.unique_zsigmondy_is_m_plus_one.has_value());
}

TEST_CASE("non-Zsigmondy structure across a full box") {
    // Every prime factor of Psi_m(u) either is Zsigmondy or divides m with
    // m = annihilator * p^s and p^2 not dividing Psi_m(u); classify aborts
    // with logic_error if any of that fails, so a clean sweep is the theorem.
    auto f3 = FieldSpec::make(3, 1);
    for (const Poly& u : all_monic_up_to(f3, 2)) {
        for (int dm = 1; dm <= 3; ++dm) {
            for (const Poly& m : enumerate_monic(f3, dm)) {
                ZsigmondyReport r = classify(u, m);
                REQUIRE(r.psi_value.has_value());
                const Poly& psi = *r.psi_value;
                for (const Poly& p : r.zsigmondy) {
                    CHECK_FALSE(poly_divides(p, m));
                    CHECK(poly_divides(p, psi));
                }
                for (const NonZsigmondyFactor& nz : r.non_zsigmondy) {
                    CHECK(poly_divides(nz.prime, m));
                    CHECK(nz.s >= 1);
                    Poly rebuilt = nz.annihilator;
                    for (unsigned i = 0; i < nz.s; ++i) rebuilt = rebuilt * nz.prime;
                    CHECK(rebuilt == m);
                    CHECK(poly_divides(nz.prime, psi));
                    CHECK_FALSE(poly_divides(nz.prime * nz.prime, psi));
                    CHECK(carlitz_annihilator(u, nz.prime) == nz.annihilator);
                }
            }
        }
    }
}

TEST_CASE("validation of pairs and fields") {
    auto f3 = FieldSpec::make(3, 1);
    auto f2 = FieldSpec::make(2, 1);
    CHECK_THROWS_AS(zsigmondy_primes(P("1", f2), P("T", f2)), DomainError);
    CHECK_THROWS_AS(classify(P("1", f2), P("T", f2)), DomainError);
    CHECK_THROWS_AS(classify(P("1", f3), P("1", f3)), DomainError);
    CHECK_THROWS_AS(classify(P("2", f3), P("2", f3)), DomainError);
    CHECK_THROWS_AS(classify(Poly::zero(f3), P("T", f3)), DomainError);
    CHECK_THROWS_AS(classify(P("T", f3), Poly::zero(f3)), DomainError);
    // the low-level predicates demand monic inputs rather than normalizing
    CHECK_THROWS_AS(zsigmondy_primes(P("2", f3), P("T", f3)), DomainError);
    CHECK_THROWS_AS(is_zsigmondy(P("T", f3), P("1", f3), P("2*T", f3)), DomainError);
}
