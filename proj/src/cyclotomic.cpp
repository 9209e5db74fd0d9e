#include "carlitz/cyclotomic.hpp"

#include "carlitz/factor.hpp"

namespace carlitz {

namespace {

void require_monic_positive(const Poly& m) {
    if (m.degree() < 1 || !m.is_monic())
        throw DomainError("cyclotomic subscript must be monic of positive degree");
}

void require_eval_domain(const Poly& m, const Poly& u) {
    require_same_field(m.field(), u.field());
    if (m.field()->q() == 2) throw DomainError("cyclotomic evaluation requires q > 2");
    require_monic_positive(m);
    if (u.is_zero()) throw DomainError("cyclotomic evaluation at u = 0");
}

} // namespace

XPoly::XPoly(FieldSpecPtr spec) : spec_(std::move(spec)), zero_(spec_) {}

XPoly XPoly::one(const FieldSpecPtr& spec) {
    XPoly f(spec);
    f.c_.push_back(Poly::one(spec));
    return f;
}

XPoly XPoly::x(const FieldSpecPtr& spec) {
    XPoly f(spec);
    f.c_.assign(2, Poly::zero(spec));
    f.c_[1] = Poly::one(spec);
    return f;
}

XPoly XPoly::from_coeffs(FieldSpecPtr spec, std::vector<Poly> coeffs) {
    XPoly f(std::move(spec));
    for (const auto& c : coeffs) require_same_field(f.spec_, c.field());
    f.c_ = std::move(coeffs);
    f.trim();
    return f;
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& XPoly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return zero_;
}

XPoly XPoly::operator+(const XPoly& o) const {
    require_same_field(spec_, o.spec_);
    XPoly out(spec_);
    out.c_.reserve(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) {
        Poly a = i < c_.size() ? c_[i] : Poly::zero(spec_);
        if (i < o.c_.size()) a = a + o.c_[i];
        out.c_.push_back(std::move(a));
    }
    out.trim();
    return out;
}

XPoly XPoly::operator-(const XPoly& o) const {
    require_same_field(spec_, o.spec_);
    XPoly out(spec_);
    for (size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) {
        Poly a = i < c_.size() ? c_[i] : Poly::zero(spec_);
        if (i < o.c_.size()) a = a - o.c_[i];
        out.c_.push_back(std::move(a));
    }
    out.trim();
    return out;
}

XPoly XPoly::operator*(const XPoly& o) const {
    require_same_field(spec_, o.spec_);
    XPoly out(spec_);
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Poly::zero(spec_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    out.trim();
    return out;
}

bool XPoly::operator==(const XPoly& o) const {
    require_same_field(spec_, o.spec_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

XPoly XPoly::exact_div(const XPoly& divisor) const {
    require_same_field(spec_, divisor.spec_);
    if (divisor.is_zero()) throw DomainError("XPoly division by zero");
    if (!divisor.is_monic()) throw DomainError("XPoly division needs a divisor monic in x");
    XPoly rem = *this;
    if (rem.degree() < divisor.degree()) {
        if (!rem.is_zero()) throw std::logic_error("exact XPoly division has nonzero remainder");
        return XPoly(spec_);
    }
    std::vector<Poly> quot(size_t(rem.degree() - divisor.degree()) + 1, Poly::zero(spec_));
    for (size_t k = quot.size(); k-- > 0;) {
        if (int(k) + divisor.degree() > rem.degree()) continue;
        Poly c = rem.c_[k + size_t(divisor.degree())];
        if (c.is_zero()) continue;
        quot[k] = c;
        for (size_t j = 0; j <= size_t(divisor.degree()); ++j)
            rem.c_[k + j] = rem.c_[k + j] - c * divisor.c_[j];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::logic_error("exact XPoly division has nonzero remainder");
    XPoly out(spec_);
    out.c_ = std::move(quot);
    out.trim();
    return out;
}

Poly XPoly::eval(const Poly& u) const {
    require_same_field(spec_, u.field());
    Poly acc = Poly::zero(spec_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * u + c_[i];
    return acc;
}

XPoly XPoly::compose(const XPoly& inner) const {
    require_same_field(spec_, inner.spec_);
    XPoly acc(spec_);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        if (!c_[i].is_zero()) {
            XPoly term(spec_);
            term.c_.push_back(c_[i]);
            acc = acc + term;
        }
    }
    return acc;
}

std::string to_string(const XPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = size_t(f.degree()) + 1; i-- > 0;) {
        const Poly& c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += to_string(c);
            continue;
        }
        if (!c.is_one()) {
            std::string text = c.degree() > 0 ? to_string(c) : to_string(c.coeff(0));
            bool needs_parens = c.degree() > 0 || text.find('+') != std::string::npos ||
                                text.find('*') != std::string::npos;
            if (needs_parens) out += '(';
            out += text;
            if (needs_parens) out += ')';
            out += '*';
        }
        out += 'x';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

XPoly to_xpoly(const CarlitzCoeffs& cc) {
    const FieldSpecPtr& spec = cc.m.field();
    std::uint64_t top = 1;
    for (size_t i = 1; i < cc.coeff.size(); ++i) top *= spec->q();
    std::vector<Poly> c(size_t(top) + 1, Poly::zero(spec));
    std::uint64_t pw = 1;
    for (size_t i = 0; i < cc.coeff.size(); ++i) {
        c[size_t(pw)] = cc.coeff[i];
        pw *= spec->q();
    }
    return XPoly::from_coeffs(spec, std::move(c));
}

XPoly cyclotomic_poly(const Poly& m) {
    require_monic_positive(m);
    const FieldSpecPtr& spec = m.field();
    // Bottom-up over the divisor lattice: Psi_b = C_b(x) / prod_{d | b, d != b} Psi_d(x),
    // where the divisor d = 1 contributes Psi_1(x) = x.
    std::vector<Poly> divisors = monic_divisors(m);
    std::map<Poly, XPoly, CanonicalLess> psi;
    for (const auto& b : divisors) {
        if (b.degree() < 1) continue;
        XPoly prod = XPoly::x(spec);
        for (const auto& d : monic_divisors(b)) {
            if (d.degree() < 1 || d == b) continue;
            prod = prod * psi.at(d);
        }
        psi.emplace(b, to_xpoly(carlitz_coeffs(b)).exact_div(prod));
    }
    return psi.at(m);
}

CyclotomicEvaluator::CyclotomicEvaluator(Poly u) : u_(std::move(u)) {
    if (u_.is_zero()) throw DomainError("cyclotomic evaluation at u = 0");
}

const Poly& CyclotomicEvaluator::carlitz_value(const Poly& b) {
    auto it = cval_.find(b);
    if (it == cval_.end()) it = cval_.emplace(b, carlitz_eval(b, u_)).first;
    return it->second;
}

const Poly& CyclotomicEvaluator::psi(const Poly& m) {
    require_eval_domain(m, u_);
    auto it = psi_.find(m);
    if (it != psi_.end()) return it->second;
    // Psi_m(u) = C_m(u) / (u * prod_{b | m, 0 < deg b < deg m} Psi_b(u)).
    Poly denom = u_;
    for (const auto& b : monic_divisors(m)) {
        if (b.degree() < 1 || b == m) continue;
        denom = denom * psi(b);
    }
    return psi_.emplace(m, poly_exact_div(carlitz_value(m), denom)).first->second;
}

Poly cyclotomic_eval_via_poly(const Poly& m, const Poly& u) {
    require_eval_domain(m, u);
    return cyclotomic_poly(m).eval(u);
}

Poly cyclotomic_eval_via_values(const Poly& m, const Poly& u) {
    require_eval_domain(m, u);
    CyclotomicEvaluator ev(u);
    return ev.psi(m);
}

Poly cyclotomic_eval(const Poly& m, const Poly& u) {
    require_eval_domain(m, u);
    // XPoly expansion is exponential in deg m (x-degree q^{deg m}); the value
    // recursion takes over from degree 4.
    if (m.degree() <= 3) return cyclotomic_eval_via_poly(m, u);
    return cyclotomic_eval_via_values(m, u);
}

} // namespace carlitz
