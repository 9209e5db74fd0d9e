#include "carlitz/poly.hpp"

#include <algorithm>

namespace carlitz {

namespace {

constexpr size_t kKaratsubaThreshold = 32;

// out[i] = add(out[i], src[i]) for i < n.
void add_into(const FieldSpec& F, fe_t* out, const fe_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = F.add(out[i], src[i]);
}

void sub_into(const FieldSpec& F, fe_t* out, const fe_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = F.sub(out[i], src[i]);
}

// out (zero-initialized, size na+nb-1) += a * b.
void school(const FieldSpec& F, const fe_t* a, size_t na, const fe_t* b, size_t nb, fe_t* out) {
    const fe_t* MUL = F.mul_table();
    const fe_t* ADD = F.add_table();
    const size_t q = F.q();
    for (size_t i = 0; i < na; ++i) {
        const fe_t ai = a[i];
        if (ai == 0) continue;
        const fe_t* row = MUL + size_t(ai) * q;
        fe_t* o = out + i;
        for (size_t j = 0; j < nb; ++j) {
            if (b[j]) o[j] = ADD[size_t(o[j]) * q + row[b[j]]];
        }
    }
}

std::vector<fe_t> mul_rec(const FieldSpec& F, const fe_t* a, size_t na, const fe_t* b, size_t nb) {
    if (na == 0 || nb == 0) return {};
    std::vector<fe_t> out(na + nb - 1, 0);
    if (std::min(na, nb) <= kKaratsubaThreshold) {
        school(F, a, na, b, nb, out.data());
        return out;
    }
    const size_t h = (std::max(na, nb) + 1) / 2;
    const size_t na0 = std::min(na, h), nb0 = std::min(nb, h);
    const size_t na1 = na - na0, nb1 = nb - nb0;

    std::vector<fe_t> z0 = mul_rec(F, a, na0, b, nb0);
    std::vector<fe_t> z2 = mul_rec(F, a + na0, na1, b + nb0, nb1);

    // (a0 + a1)(b0 + b1)
    std::vector<fe_t> sa(a, a + na0), sb(b, b + nb0);
    if (na1) {
        if (sa.size() < na1) sa.resize(na1, 0);
        add_into(F, sa.data(), a + na0, na1);
    }
    if (nb1) {
        if (sb.size() < nb1) sb.resize(nb1, 0);
        add_into(F, sb.data(), b + nb0, nb1);
    }
    std::vector<fe_t> z1 = mul_rec(F, sa.data(), sa.size(), sb.data(), sb.size());
    sub_into(F, z1.data(), z0.data(), z0.size());
    if (!z2.empty()) sub_into(F, z1.data(), z2.data(), z2.size());

    add_into(F, out.data(), z0.data(), z0.size());
    add_into(F, out.data() + h, z1.data(), std::min(z1.size(), out.size() - h));
    if (!z2.empty()) add_into(F, out.data() + 2 * h, z2.data(), z2.size());
    return out;
}

} // namespace

Poly::Poly(FieldSpecPtr spec) : spec_(std::move(spec)) {
    if (!spec_) throw DomainError("null field spec");
}

Poly Poly::one(const FieldSpecPtr& spec) {
    return from_values(spec, {1});
}

Poly Poly::variable(const FieldSpecPtr& spec) {
    return from_values(spec, {0, 1});
}

Poly Poly::constant(const FieldElement& c) {
    Poly f(c.field());
    if (!c.is_zero()) f.c_.push_back(c.value());
    return f;
}

Poly Poly::from_values(FieldSpecPtr spec, std::vector<fe_t> values) {
    Poly f(std::move(spec));
    for (fe_t v : values)
        if (v >= f.spec_->q()) throw DomainError("packed coefficient out of range");
    f.c_ = std::move(values);
    f.trim();
    return f;
}

Poly Poly::from_elements(const FieldSpecPtr& spec, const std::vector<FieldElement>& coeffs) {
    std::vector<fe_t> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        require_same_field(spec, c.field());
        v.push_back(c.value());
    }
    return from_values(spec, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic normalization of the zero polynomial");
    if (is_monic()) return *this;
    return *this * leading_coeff().inverse();
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(spec_, o.spec_);
    Poly out(spec_);
    const auto& longer = c_.size() >= o.c_.size() ? c_ : o.c_;
    const auto& shorter = c_.size() >= o.c_.size() ? o.c_ : c_;
    out.c_ = longer;
    add_into(*spec_, out.c_.data(), shorter.data(), shorter.size());
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(spec_, o.spec_);
    Poly out(spec_);
    out.c_ = c_;
    if (out.c_.size() < o.c_.size()) out.c_.resize(o.c_.size(), 0);
    sub_into(*spec_, out.c_.data(), o.c_.data(), o.c_.size());
    out.trim();
    return out;
}

Poly Poly::operator-() const {
    Poly out(spec_);
    out.c_.reserve(c_.size());
    for (fe_t v : c_) out.c_.push_back(spec_->neg(v));
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(spec_, o.spec_);
    Poly out(spec_);
    out.c_ = mul_rec(*spec_, c_.data(), c_.size(), o.c_.data(), o.c_.size());
    out.trim();
    return out;
}

Poly Poly::operator*(const FieldElement& c) const {
    require_same_field(spec_, c.field());
    Poly out(spec_);
    if (c.is_zero()) return out;
    out.c_.reserve(c_.size());
    for (fe_t v : c_) out.c_.push_back(spec_->mul(v, c.value()));
    out.trim();
    return out;
}

bool Poly::operator==(const Poly& o) const {
    require_same_field(spec_, o.spec_);
    return c_ == o.c_;
}

Poly Poly::shifted(size_t k) const {
    if (is_zero() || k == 0) {
        Poly out = *this;
        return out;
    }
    Poly out(spec_);
    out.c_.assign(k, 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::frobenius_q() const {
    if (is_constant()) return *this; // c^q = c in F_q
    Poly out(spec_);
    out.c_.assign((c_.size() - 1) * spec_->q() + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i * spec_->q()] = c_[i];
    return out;
}

Poly Poly::pth_root() const {
    const unsigned p = spec_->p();
    Poly out(spec_);
    if (is_zero()) return out;
    if ((c_.size() - 1) % p != 0) throw DomainError("p-th root of a polynomial that is not a p-th power");
    out.c_.assign((c_.size() - 1) / p + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % p != 0) throw DomainError("p-th root of a polynomial that is not a p-th power");
        out.c_[i / p] = spec_->pth_root(c_[i]);
    }
    return out;
}

Poly Poly::derivative() const {
    Poly out(spec_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
        fe_t scalar = fe_t(i % spec_->p()); // the prime subfield embeds as 0..p-1
        out.c_[i - 1] = spec_->mul(c_[i], scalar);
    }
    out.trim();
    return out;
}

FieldElement Poly::eval(const FieldElement& x) const {
    require_same_field(spec_, x.field());
    fe_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = spec_->add(spec_->mul(acc, x.value()), c_[i]);
    return {spec_, acc};
}

DivMod poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const FieldSpec& F = *a.field();
    if (a.degree() < b.degree()) return {Poly::zero(a.field()), a};

    std::vector<fe_t> r = a.values();
    const std::vector<fe_t>& d = b.values();
    const size_t nb = d.size();
    const fe_t lead_inv = F.inv(d.back());
    std::vector<fe_t> q(r.size() - nb + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
        fe_t c = F.mul(r[k + nb - 1], lead_inv);
        if (c == 0) continue;
        q[k] = c;
        for (size_t j = 0; j < nb; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, d[j]));
    }
    r.resize(nb - 1);
    return {Poly::from_values(a.field(), std::move(q)), Poly::from_values(a.field(), std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

Poly poly_exact_div(const Poly& a, const Poly& b) {
    DivMod dm = poly_divmod(a, b);
    if (!dm.remainder.is_zero())
        throw std::logic_error("exact division has nonzero remainder (internal consistency failure)");
    return dm.quotient;
}

bool poly_divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_mod(a, d).is_zero();
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus) {
    return poly_mod(a * b, modulus);
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    if (modulus.degree() < 1) throw DomainError("powmod modulus must have positive degree");
    Poly result = poly_mod(Poly::one(base.field()), modulus);
    Poly b = poly_mod(base, modulus);
    while (e) {
        if (e & 1) result = poly_mulmod(result, b, modulus);
        b = poly_mulmod(b, b, modulus);
        e >>= 1;
    }
    return result;
}

bool canonical_less(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.values();
    const auto& cb = b.values();
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& spec = f.field();
    std::string out;
    for (size_t i = f.values().size(); i-- > 0;) {
        FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += to_string(c);
            continue;
        }
        if (!c.is_one()) {
            std::string cs = to_string(c);
            // A coefficient that is itself a sum needs parentheses before *T.
            if (cs.find('+') != std::string::npos) {
                out += '(';
                out += cs;
                out += ')';
            } else {
                out += cs;
            }
            out += '*';
        }
        out += 'T';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    (void)spec;
    return out;
}

std::uint64_t monic_count(const FieldSpecPtr& spec, int d) {
    if (d < 0) throw DomainError("negative degree");
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) n *= spec->q();
    return n;
}

Poly monic_of_index(const FieldSpecPtr& spec, int d, std::uint64_t index) {
    if (d < 0) throw DomainError("negative degree");
    std::vector<fe_t> v(size_t(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        v[i] = fe_t(index % spec->q());
        index /= spec->q();
    }
    if (index != 0) throw DomainError("monic enumeration index out of range");
    v[size_t(d)] = 1;
    return Poly::from_values(spec, std::move(v));
}

std::vector<Poly> enumerate_monic(const FieldSpecPtr& spec, int d) {
    std::uint64_t n = monic_count(spec, d);
    std::vector<Poly> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(monic_of_index(spec, d, i));
    return out;
}

namespace detail {

Poly mul_schoolbook(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    std::vector<fe_t> out(a.values().size() + b.values().size() - 1, 0);
    school(*a.field(), a.values().data(), a.values().size(), b.values().data(), b.values().size(), out.data());
    return Poly::from_values(a.field(), std::move(out));
}

} // namespace detail

} // namespace carlitz
