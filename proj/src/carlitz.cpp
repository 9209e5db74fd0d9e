#include "carlitz/carlitz.hpp"

namespace carlitz {

CarlitzCoeffs carlitz_coeffs(const Poly& m) {
    if (m.is_zero()) throw DomainError("carlitz coefficients of the zero polynomial");
    const FieldSpecPtr& spec = m.field();
    const Poly T = Poly::variable(spec);
    const int deg = m.degree();

    std::vector<Poly> acc(size_t(deg) + 1, Poly::zero(spec));
    // cur holds the coefficients of C_{T^j}; j = 0 gives the identity.
    std::vector<Poly> cur{Poly::one(spec)};
    for (int j = 0; j <= deg; ++j) {
        FieldElement mj = m.coeff(size_t(j));
        if (!mj.is_zero())
            for (size_t i = 0; i < cur.size(); ++i) acc[i] = acc[i] + cur[i] * mj;
        if (j == deg) break;
        std::vector<Poly> next(cur.size() + 1, Poly::zero(spec));
        for (size_t i = 0; i < cur.size(); ++i) next[i] = T * cur[i];
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = next[i + 1] + cur[i].frobenius_q();
        cur = std::move(next);
    }
    return {m, std::move(acc)};
}

CarlitzCoeffs carlitz_compose(const CarlitzCoeffs& a, const CarlitzCoeffs& b) {
    require_same_field(a.m.field(), b.m.field());
    const FieldSpecPtr& spec = a.m.field();
    std::vector<Poly> out(a.coeff.size() + b.coeff.size() - 1, Poly::zero(spec));
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeff.size(); ++j) {
            // (c tau^i)(d tau^j) = c d^{q^i} tau^{i+j}
            Poly d = b.coeff[j];
            for (size_t t = 0; t < i; ++t) d = d.frobenius_q();
            out[i + j] = out[i + j] + a.coeff[i] * d;
        }
    }
    return {a.m * b.m, std::move(out)};
}

Poly carlitz_eval(const Poly& m, const Poly& u) {
    require_same_field(m.field(), u.field());
    if (m.is_zero() || u.is_zero()) return Poly::zero(m.field());
    CarlitzCoeffs cc = carlitz_coeffs(m);
    Poly acc = Poly::zero(m.field());
    Poly upow = u; // u^{q^i}
    for (size_t i = 0; i < cc.coeff.size(); ++i) {
        if (!cc.coeff[i].is_zero()) acc = acc + cc.coeff[i] * upow;
        if (i + 1 < cc.coeff.size()) upow = upow.frobenius_q();
    }
    return acc;
}

Poly carlitz_eval_mod(const Poly& m, const Poly& u, const Poly& modulus) {
    require_same_field(m.field(), u.field());
    require_same_field(m.field(), modulus.field());
    if (modulus.degree() < 1) throw DomainError("carlitz_eval_mod needs a modulus of positive degree");
    if (m.is_zero() || u.is_zero()) return Poly::zero(m.field());

    const FieldSpecPtr& spec = m.field();
    const Poly T = Poly::variable(spec);
    Poly v = poly_mod(u, modulus); // C_{T^i}(u) mod modulus
    Poly acc = v * m.coeff(0);
    for (int i = 1; i <= m.degree(); ++i) {
        v = poly_mod(T * v + poly_powmod(v, spec->q(), modulus), modulus);
        FieldElement mi = m.coeff(size_t(i));
        if (!mi.is_zero()) acc = acc + v * mi;
    }
    return poly_mod(acc, modulus);
}

} // namespace carlitz
