#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/carlitz.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/factor.hpp"
#include "test_util.hpp"

using namespace carlitz;
using carlitz::test::P;
using carlitz::test::random_poly;
using carlitz::test::random_poly_up_to;

namespace {

// All nonzero polynomials of degree <= d, leading coefficient unrestricted.
std::vector<Poly> nonzero_up_to(const FieldSpecPtr& spec, int d) {
    std::vector<Poly> out;
    std::uint64_t total = 1;
    for (int i = 0; i <= d; ++i) total *= spec->q();
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<fe_t> v;
        std::uint64_t rest = code;
        for (int i = 0; i <= d; ++i) {
            v.push_back(static_cast<fe_t>(rest % spec->q()));
            rest /= spec->q();
        }
        out.push_back(Poly::from_values(spec, v));
    }
    return out;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("carlitz_coeffs examples") {
    auto f3 = FieldSpec::make(3, 1);
    auto ct = carlitz_coeffs(P("T", f3));
    REQUIRE(ct.coeff.size() == 2);
    CHECK(ct.coeff[0] == P("T", f3));
    CHECK(ct.coeff[1] == P("1", f3));

    // C_{T^2}(x) = T^2 x + (T^3 + T) x^3 + x^9 over F_3
    auto ct2 = carlitz_coeffs(P("T^2", f3));
    REQUIRE(ct2.coeff.size() == 3);
    CHECK(ct2.coeff[0] == P("T^2", f3));
    CHECK(ct2.coeff[1] == P("T^3+T", f3));
    CHECK(ct2.coeff[2] == P("1", f3));

    auto c1 = carlitz_coeffs(P("1", f3));
    REQUIRE(c1.coeff.size() == 1);
    CHECK(c1.coeff[0] == P("1", f3));

    CHECK_THROWS_AS(carlitz_coeffs(Poly::zero(f3)), DomainError);
}

TEST_CASE("bracket coefficient identities") {
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 3; ++d) {
            for (const Poly& m : enumerate_monic(spec, d)) {
                auto cc = carlitz_coeffs(m);
                REQUIRE(cc.coeff.size() == std::size_t(d) + 1);
                CHECK(cc.coeff[0] == m);
                CHECK(cc.coeff[std::size_t(d)] == Poly::one(spec));
                for (int i = 0; i <= d; ++i) {
                    CHECK(cc.coeff[std::size_t(i)].degree() == int(upow(q, unsigned(i))) * (d - i));
                    CHECK(cc.coeff[std::size_t(i)].is_monic());
                }
            }
        }
    }
}

TEST_CASE("carlitz_eval examples") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(carlitz_eval(P("T", f3), P("1", f3)) == P("T+1", f3));
    CHECK(carlitz_eval(P("T+2", f3), P("1", f3)) == P("T", f3));
    CHECK(carlitz_eval(P("T^2", f3), P("1", f3)) == P("T^3+T^2+T+1", f3));
    CHECK(carlitz_eval(P("T^2", f3), P("1", f3)) == P("T+1", f3) * P("T^2+1", f3));

    // C_1 is the identity map
    std::mt19937 rng(7001);
    for (int i = 0; i < 20; ++i) {
        Poly u = random_poly_up_to(rng, f3, 4);
        CHECK(carlitz_eval(P("1", f3), u) == u);
    }

    // C_{(T-1)T}(1) = T^4 + T^2 = T^2 (T+1)^2 over F_4
    auto f4 = FieldSpec::make(2, 2);
    Poly v = carlitz_eval(P("T^2+T", f4), P("1", f4));
    CHECK(v == P("T^4+T^2", f4));
    CHECK(v == P("T^2", f4) * P("T+1", f4) * P("T+1", f4));

    CHECK(carlitz_eval(Poly::zero(f3), P("T+1", f3)).is_zero());
    CHECK(carlitz_eval(P("T^2+1", f3), Poly::zero(f3)).is_zero());
}

TEST_CASE("composition realizes multiplication of operators") {
    auto f3 = FieldSpec::make(3, 1);
    auto agree = [](const CarlitzCoeffs& x, const CarlitzCoeffs& y) {
        if (x.m != y.m || x.coeff.size() != y.coeff.size()) return false;
        for (std::size_t i = 0; i < x.coeff.size(); ++i)
            if (x.coeff[i] != y.coeff[i]) return false;
        return true;
    };

    auto polys = nonzero_up_to(f3, 2);
    for (const Poly& a : polys) {
        auto ca = carlitz_coeffs(a);
        for (const Poly& b : polys) {
            auto cb = carlitz_coeffs(b);
            auto prod = carlitz_coeffs(a * b);
            CHECK(agree(carlitz_compose(ca, cb), prod));
            CHECK(agree(carlitz_compose(cb, ca), prod));
        }
    }

    std::mt19937 rng(7002);
    for (unsigned q : {4u, 5u}) {
        auto spec = FieldSpec::from_order(q);
        for (int iter = 0; iter < 100; ++iter) {
            Poly a = random_poly(rng, spec, iter % 3);
            Poly b = random_poly(rng, spec, (iter / 3) % 3);
            CHECK(agree(carlitz_compose(carlitz_coeffs(a), carlitz_coeffs(b)),
                        carlitz_coeffs(a * b)));
            Poly u = random_poly(rng, spec, 1);
            CHECK(carlitz_eval(a, carlitz_eval(b, u)) == carlitz_eval(a * b, u));
        }
    }
}

TEST_CASE("the action is additive in m") {
    auto f3 = FieldSpec::make(3, 1);
    auto polys = nonzero_up_to(f3, 2);
    for (const Poly& a : polys) {
        for (const Poly& b : polys) {
            Poly s = a + b;
            if (s.is_zero()) continue;
            auto ca = carlitz_coeffs(a);
            auto cb = carlitz_coeffs(b);
            auto cs = carlitz_coeffs(s);
            for (std::size_t i = 0; i < cs.coeff.size(); ++i) {
                Poly lhs = cs.coeff[i];
                Poly rhs = Poly::zero(f3);
                if (i < ca.coeff.size()) rhs = rhs + ca.coeff[i];
                if (i < cb.coeff.size()) rhs = rhs + cb.coeff[i];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("C_m is F_q-linear in the argument") {
    std::mt19937 rng(7003);
    for (unsigned q : {3u, 4u, 9u}) {
        auto spec = FieldSpec::from_order(q);
        for (int iter = 0; iter < 60; ++iter) {
            Poly m = random_poly(rng, spec, 1 + iter % 2);
            Poly u = random_poly_up_to(rng, spec, 2);
            Poly v = random_poly_up_to(rng, spec, 2);
            for (fe_t a = 0; a < spec->q(); ++a) {
                FieldElement alpha(spec, a);
                CHECK(carlitz_eval(m, u * alpha + v) ==
                      carlitz_eval(m, u) * alpha + carlitz_eval(m, v));
            }
        }
    }
}

TEST_CASE("degree of C_m(u)") {
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int dm = 1; dm <= 3; ++dm) {
            for (const Poly& m : enumerate_monic(spec, dm)) {
                for (const Poly& u : nonzero_up_to(spec, 2)) {
                    Poly v = carlitz_eval(m, u);
                    if (u.degree() >= 1) {
                        CHECK(v.degree() == u.degree() * int(upow(q, unsigned(dm))));
                    } else {
                        CHECK(v.degree() == int(upow(q, unsigned(dm - 1))));
                    }
                    CHECK_FALSE(v.is_zero());
                }
            }
        }
    }
    // spot sample at q = 5
    std::mt19937 rng(7004);
    auto f5 = FieldSpec::from_order(5);
    for (int iter = 0; iter < 60; ++iter) {
        Poly m = random_poly(rng, f5, 1 + iter % 3, true);
        Poly u = random_poly(rng, f5, iter % 3);
        Poly v = carlitz_eval(m, u);
        int expect = u.degree() >= 1 ? u.degree() * int(upow(5, unsigned(m.degree())))
                                     : int(upow(5, unsigned(m.degree() - 1)));
        CHECK(v.degree() == expect);
    }
}

TEST_CASE("C_p is Eisenstein at p") {
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        for (int d = 1; d <= 4; ++d) {
            for (const Poly& p : enumerate_monic_irreducible(spec, d)) {
                auto cc = carlitz_coeffs(p);
                CHECK(cc.coeff[0] == p);
                CHECK(cc.coeff[std::size_t(d)].is_one());
                for (int i = 1; i < d; ++i) {
                    CHECK(poly_mod(cc.coeff[std::size_t(i)], p).is_zero());
                }
            }
        }
    }
}

TEST_CASE("Fermat: C_p(u) = u and C_{p-1}(u) = 0 mod p") {
    std::mt19937 rng(7005);
    for (unsigned q : {3u, 4u}) {
        auto spec = FieldSpec::from_order(q);
        int dmax = q == 3 ? 3 : 2;
        for (int d = 1; d <= dmax; ++d) {
            for (const Poly& p : enumerate_monic_irreducible(spec, d)) {
                Poly pm1 = p - Poly::one(spec);
                for (int iter = 0; iter < 50; ++iter) {
                    Poly u = random_poly_up_to(rng, spec, 2 * d);
                    CHECK(carlitz_eval_mod(p, u, p) == poly_mod(u, p));
                    CHECK(carlitz_eval_mod(pm1, u, p).is_zero());
                }
            }
        }
    }
}

TEST_CASE("carlitz_eval_mod agrees with exact evaluation") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(carlitz_eval_mod(P("T^2", f3), P("1", f3), P("T^2+1", f3)).is_zero());

    std::mt19937 rng(7006);
    for (unsigned q : {3u, 4u, 9u}) {
        auto spec = FieldSpec::from_order(q);
        for (int iter = 0; iter < 120; ++iter) {
            Poly m = random_poly_up_to(rng, spec, 3);
            Poly u = random_poly_up_to(rng, spec, 3);
            Poly mod = random_poly(rng, spec, 1 + iter % 4);
            CHECK(carlitz_eval_mod(m, u, mod) == poly_mod(carlitz_eval(m, u), mod));
        }
    }

    CHECK_THROWS_AS(carlitz_eval_mod(P("T", f3), P("1", f3), P("2", f3)), DomainError);
    CHECK_THROWS_AS(carlitz_eval_mod(P("T", f3), P("1", f3), Poly::zero(f3)), DomainError);
}
