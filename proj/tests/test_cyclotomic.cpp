#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/cyclotomic.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/factor.hpp"
#include "test_util.hpp"

using namespace carlitz;
using carlitz::test::P;
using carlitz::test::random_poly_up_to;

namespace {

XPoly carlitz_xpoly(const Poly& m) { return to_xpoly(carlitz_coeffs(m)); }

// Psi_b with the b = 1 convention Psi_1(x) = x.
XPoly psi_or_x(const Poly& b) {
    return b.degree() < 1 ? XPoly::x(b.field()) : cyclotomic_poly(b);
}

Poly random_nonzero(std::mt19937& rng, const FieldSpecPtr& spec, int dmax) {
    for (;;) {
        Poly u = random_poly_up_to(rng, spec, dmax);
        if (!u.is_zero()) return u;
    }
}

} // namespace

TEST_CASE("cyclotomic_poly examples") {
    auto f3 = FieldSpec::make(3, 1);
    XPoly psi_t = cyclotomic_poly(P("T", f3));
    CHECK(psi_t == XPoly::from_coeffs(f3, {P("T", f3), Poly::zero(f3), Poly::one(f3)}));
    CHECK(to_string(psi_t) == "x^2+T");

    CHECK(to_string(cyclotomic_poly(P("T^2+1", f3))) == "x^8+(T^3+T)*x^2+T^2+1");
    CHECK(to_string(cyclotomic_poly(P("T^2", f3))) == "x^6+(2*T)*x^4+(T^2)*x^2+T");
}

TEST_CASE("prime power cyclotomics are Carlitz quotients") {
    auto f3 = FieldSpec::make(3, 1);
    for (const char* ptext : {"T", "T+1", "T^2+1"}) {
        Poly p = P(ptext, f3);
        CHECK(cyclotomic_poly(p) == carlitz_xpoly(p).exact_div(carlitz_xpoly(Poly::one(f3))));
        CHECK(cyclotomic_poly(p * p) == carlitz_xpoly(p * p).exact_div(carlitz_xpoly(p)));
    }
}

TEST_CASE("product formula over the divisor lattice") {
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 3; ++d) {
            for (const Poly& m : enumerate_monic(spec, d)) {
                XPoly prod = XPoly::one(spec);
                for (const Poly& b : monic_divisors(m)) prod = prod * psi_or_x(b);
                CHECK(prod == carlitz_xpoly(m));
            }
        }
    }
}

TEST_CASE("x-degree of Psi_m equals phi(m)") {
    auto f3 = FieldSpec::make(3, 1);
    for (int d = 1; d <= 3; ++d) {
        for (const Poly& m : enumerate_monic(f3, d)) {
            XPoly psi = cyclotomic_poly(m);
            CHECK(psi.degree() == int(euler_phi(m)));
            CHECK(psi.is_monic());
        }
    }
}

TEST_CASE("composition identity for a coprime prime power") {
    // Psi_m(C_{p^h}(x)) = Psi_{m p^h}(x) * Psi_m(C_{p^{h-1}}(x)) when gcd(m, p) = 1.
    auto f3 = FieldSpec::make(3, 1);
    std::vector<Poly> linear = {P("T", f3), P("T+1", f3), P("T+2", f3)};
    for (const Poly& m : linear) {
        XPoly psi_m = cyclotomic_poly(m);
        for (const Poly& p : linear) {
            if (p == m) continue;
            Poly ph = Poly::one(f3);
            for (int h = 1; h <= 2; ++h) {
                Poly ph_next = ph * p; // p^h
                XPoly lhs = psi_m.compose(carlitz_xpoly(ph_next));
                XPoly rhs = cyclotomic_poly(m * ph_next) * psi_m.compose(carlitz_xpoly(ph));
                CHECK(lhs == rhs);
                ph = ph_next;
            }
        }
    }
}

TEST_CASE("Psi_m divides C_m / C_{m/q} for each prime q dividing m") {
    auto f3 = FieldSpec::make(3, 1);
    for (int d = 1; d <= 3; ++d) {
        for (const Poly& m : enumerate_monic(f3, d)) {
            XPoly psi = cyclotomic_poly(m);
            for (const PrimePower& pp : factorize(m).factors) {
                XPoly quotient =
                    carlitz_xpoly(m).exact_div(carlitz_xpoly(poly_exact_div(m, pp.prime)));
                XPoly cofactor(f3);
                REQUIRE_NOTHROW(cofactor = quotient.exact_div(psi));
                CHECK(cofactor * psi == quotient);
            }
        }
    }
}

TEST_CASE("evaluation paths agree") {
    std::mt19937 rng(8001);
    for (unsigned q : {3u, 4u, 5u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 3; ++d) {
            for (const Poly& m : enumerate_monic(spec, d)) {
                Poly u = random_nonzero(rng, spec, 2);
                Poly a = cyclotomic_eval_via_poly(m, u);
                Poly b = cyclotomic_eval_via_values(m, u);
                CHECK(a == b);
                CHECK(cyclotomic_eval(m, u) == a);
            }
        }
    }
    // Degree 4 subscripts run the value recursion; spot-check against the
    // expanded polynomial.
    auto f3 = FieldSpec::from_order(3);
    for (const char* mtext : {"T^4", "T^4+T", "T^4+T^2+2"}) {
        Poly m = P(mtext, f3);
        Poly u = P("T+1", f3);
        CHECK(cyclotomic_eval(m, u) == cyclotomic_eval_via_poly(m, u));
    }
}

TEST_CASE("CyclotomicEvaluator matches one-shot evaluation") {
    auto f3 = FieldSpec::make(3, 1);
    Poly u = P("T+2", f3);
    CyclotomicEvaluator ev(u);
    for (int d = 1; d <= 3; ++d) {
        for (const Poly& m : enumerate_monic(f3, d)) {
            CHECK(ev.psi(m) == cyclotomic_eval(m, u));
            CHECK(ev.carlitz_value(m) == carlitz_eval(m, u));
        }
    }
    CHECK_THROWS_AS(CyclotomicEvaluator(Poly::zero(f3)), DomainError);
}

TEST_CASE("degree of Psi_m(u) for arguments of positive degree") {
    std::mt19937 rng(8002);
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 3; ++d) {
            for (const Poly& m : enumerate_monic(spec, d)) {
                for (int du : {1, 2}) {
                    Poly u = carlitz::test::random_poly(rng, spec, du);
                    CHECK(cyclotomic_eval(m, u).degree() ==
                          int(std::uint64_t(du) * euler_phi(m)));
                }
            }
        }
    }
    auto f5 = FieldSpec::from_order(5);
    for (const char* mtext : {"T^2+2", "T^3+T+1", "T^2"}) {
        Poly m = P(mtext, f5);
        Poly u = P("2*T^2+T+3", f5);
        CHECK(cyclotomic_eval(m, u).degree() == int(2 * euler_phi(m)));
    }
}

TEST_CASE("degree of Psi_m(u) for unit arguments") {
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 3; ++d) {
            for (const Poly& m : enumerate_monic(spec, d)) {
                auto factors = factorize(m).factors;
                bool squarefree = true;
                for (const PrimePower& pp : factors) squarefree &= pp.exp == 1;
                std::uint64_t phi = euler_phi(m);
                std::uint64_t expect;
                if (squarefree) {
                    // (phi(m) + (-1)^{h+1}) / q with h the number of prime factors
                    bool odd = factors.size() % 2 == 1;
                    expect = (odd ? phi + 1 : phi - 1) / q;
                } else {
                    expect = phi / q;
                }
                for (fe_t a = 1; a < spec->q(); ++a) {
                    Poly u = Poly::one(spec) * FieldElement(spec, a);
                    CHECK(cyclotomic_eval(m, u).degree() == int(expect));
                }
            }
        }
    }
}

TEST_CASE("cyclotomic_eval examples") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(cyclotomic_eval(P("T", f3), P("1", f3)) == P("T+1", f3));
    CHECK(cyclotomic_eval(P("T^2", f3), P("1", f3)) == P("T^2+1", f3));
    CHECK(cyclotomic_eval(P("T^2+1", f3), P("1", f3)) == P("T^3+T^2+T+2", f3));
}

TEST_CASE("domain errors") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK_THROWS_AS(cyclotomic_eval(P("2*T", f3), P("1", f3)), DomainError);
    CHECK_THROWS_AS(cyclotomic_eval(P("1", f3), P("1", f3)), DomainError);
    CHECK_THROWS_AS(cyclotomic_eval(P("T", f3), Poly::zero(f3)), DomainError);
    CHECK_THROWS_AS(cyclotomic_poly(P("2*T", f3)), DomainError);
    CHECK_THROWS_AS(cyclotomic_poly(Poly::one(f3)), DomainError);

    auto f2 = FieldSpec::make(2, 1);
    CHECK_THROWS_AS(cyclotomic_eval(P("T", f2), P("1", f2)), DomainError);

    // exact_div rejects zero and non-monic divisors, and reports non-exactness
    XPoly num = carlitz_xpoly(P("T", f3));
    CHECK_THROWS_AS(num.exact_div(XPoly::zero(f3)), DomainError);
    CHECK_THROWS_AS(num.exact_div(XPoly::from_coeffs(f3, {Poly::zero(f3), P("T", f3)})), DomainError);
    XPoly bad = XPoly::x(f3) * XPoly::x(f3) + XPoly::one(f3);
    CHECK_THROWS_AS(bad.exact_div(cyclotomic_poly(P("T", f3))), std::logic_error);
}
