#include "carlitz/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace carlitz {

namespace {

bool is_prime_int(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[x] helpers used only while selecting the extension modulus.
// Vectors hold residues mod p, constant term first, no trailing zeros.
using FpPoly = std::vector<unsigned>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by b, b nonzero.
FpPoly fp_mod(FpPoly a, const FpPoly& b, unsigned p) {
    // b is monic in every call site; invert the lead anyway for generality.
    unsigned lead = b.back();
    unsigned lead_inv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    while (a.size() >= b.size() && !a.empty()) {
        unsigned c = a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            unsigned sub = c * b[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.size() < b.size()) break;
    }
    fp_trim(a);
    return a;
}

// Trial division: no monic factor of degree 1..deg/2 divides f.
bool fp_irreducible(const FpPoly& f, unsigned p) {
    unsigned deg = unsigned(f.size()) - 1;
    if (deg == 1) return true;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        // All monic divisor candidates of degree d: p^d of them.
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FpPoly g(d + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < d; ++i) { g[i] = unsigned(t % p); t /= p; }
            g[d] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree s over F_p, tuples
// (c_0, ..., c_{s-1}) compared constant term first.
FpPoly smallest_irreducible(unsigned p, unsigned s) {
    std::vector<unsigned> c(s, 0);
    for (;;) {
        FpPoly f(c.begin(), c.end());
        f.push_back(1);
        if (fp_irreducible(f, p)) return f;
        // Advance (c_0, ..., c_{s-1}) in lex order: the last entry is the
        // least significant one.
        int i = int(s) - 1;
        while (i >= 0 && c[i] == p - 1) { c[i] = 0; --i; }
        if (i < 0) throw std::logic_error("no irreducible of requested degree found");
        ++c[i];
    }
}

} // namespace

FieldSpecPtr FieldSpec::make(unsigned p, unsigned s) {
    if (!is_prime_int(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (s < 1) throw DomainError("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxQ) throw DomainError("field size p^s exceeds supported bound " + std::to_string(kMaxQ));
    }

    static std::mutex cache_mutex;
    static std::map<std::pair<unsigned, unsigned>, FieldSpecPtr> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, s});
    if (it != cache.end()) return it->second;

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->s_ = s;
    spec->q_ = unsigned(q);
    if (s > 1) spec->modulus_ = smallest_irreducible(p, s);

    const unsigned Q = spec->q_;
    // Digit views of every packed value, c_i = digit i base p.
    std::vector<std::vector<unsigned>> digits(Q, std::vector<unsigned>(s));
    for (unsigned v = 0; v < Q; ++v) {
        unsigned t = v;
        for (unsigned i = 0; i < s; ++i) { digits[v][i] = t % p; t /= p; }
    }
    auto pack = [&](const std::vector<unsigned>& c) {
        unsigned v = 0;
        for (unsigned i = s; i-- > 0;) v = v * p + c[i];
        return fe_t(v);
    };

    spec->add_.resize(size_t(Q) * Q);
    spec->neg_.resize(Q);
    for (unsigned a = 0; a < Q; ++a) {
        std::vector<unsigned> nc(s);
        for (unsigned i = 0; i < s; ++i) nc[i] = (p - digits[a][i]) % p;
        spec->neg_[a] = pack(nc);
        for (unsigned b = 0; b < Q; ++b) {
            std::vector<unsigned> c(s);
            for (unsigned i = 0; i < s; ++i) c[i] = (digits[a][i] + digits[b][i]) % p;
            spec->add_[size_t(a) * Q + b] = pack(c);
        }
    }

    spec->mul_.resize(size_t(Q) * Q);
    for (unsigned a = 0; a < Q; ++a) {
        for (unsigned b = a; b < Q; ++b) {
            // Convolve, then reduce mod the modulus.
            std::vector<unsigned> prod(2 * s - 1, 0);
            for (unsigned i = 0; i < s; ++i)
                for (unsigned j = 0; j < s; ++j)
                    prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
            if (s > 1) {
                for (size_t k = prod.size(); k-- > s;) {
                    unsigned c = prod[k];
                    if (c == 0) continue;
                    prod[k] = 0;
                    // x^k = x^{k-s} * (x^s) = -x^{k-s} * (modulus - x^s)
                    for (unsigned i = 0; i < s; ++i) {
                        unsigned sub = c * spec->modulus_[i] % p;
                        prod[k - s + i] = (prod[k - s + i] + p - sub) % p;
                    }
                }
            }
            std::vector<unsigned> c(s);
            for (unsigned i = 0; i < s; ++i) c[i] = prod[i];
            fe_t v = pack(c);
            spec->mul_[size_t(a) * Q + b] = v;
            spec->mul_[size_t(b) * Q + a] = v;
        }
    }

    spec->inv_.resize(Q, 0);
    for (unsigned a = 1; a < Q; ++a) spec->inv_[a] = spec->pow(fe_t(a), Q - 2);

    cache[{p, s}] = spec;
    return spec;
}

FieldSpecPtr FieldSpec::from_order(unsigned q) {
    if (q < 2) throw DomainError("field size must be at least 2, got " + std::to_string(q));
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned s = 0;
    unsigned rest = q;
    while (rest % p == 0) { rest /= p; ++s; }
    if (rest != 1) throw DomainError("field size must be a prime power, got " + std::to_string(q));
    return make(p, s);
}

bool FieldSpec::same(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
}

fe_t FieldSpec::inv(fe_t a) const {
    if (a == 0) throw DomainError("inverse of zero field element");
    return inv_[a];
}

fe_t FieldSpec::pow(fe_t a, std::uint64_t e) const noexcept {
    fe_t result = 1;
    fe_t base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

fe_t FieldSpec::pth_root(fe_t a) const noexcept {
    // x -> x^p is an automorphism of order s, so its inverse is x -> x^{p^{s-1}}.
    std::uint64_t e = 1;
    for (unsigned i = 0; i + 1 < s_; ++i) e *= p_;
    return pow(a, e);
}

void require_same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) throw DomainError("mismatched field specs");
}

FieldElement::FieldElement(FieldSpecPtr spec, fe_t packed) : spec_(std::move(spec)), v_(packed) {
    if (!spec_) throw DomainError("null field spec");
    if (v_ >= spec_->q()) throw DomainError("packed field element out of range");
}

FieldElement FieldElement::generator(const FieldSpecPtr& spec) {
    if (!spec || spec->prime_field()) throw DomainError("prime field has no generator w");
    return {spec, fe_t(spec->p())};
}

FieldElement FieldElement::from_coeffs(const FieldSpecPtr& spec, const std::vector<unsigned>& c) {
    if (!spec) throw DomainError("null field spec");
    if (c.size() != spec->s()) throw DomainError("coefficient vector must have exactly s entries");
    unsigned v = 0;
    for (unsigned i = spec->s(); i-- > 0;) {
        if (c[i] >= spec->p()) throw DomainError("field element coefficient out of [0, p)");
        v = v * spec->p() + c[i];
    }
    return {spec, fe_t(v)};
}

FieldElement FieldElement::from_integer(const FieldSpecPtr& spec, std::uint64_t n) {
    if (!spec) throw DomainError("null field spec");
    return {spec, fe_t(n % spec->p())};
}

std::vector<unsigned> FieldElement::coeffs() const {
    std::vector<unsigned> c(spec_->s());
    unsigned t = v_;
    for (unsigned i = 0; i < spec_->s(); ++i) { c[i] = t % spec_->p(); t /= spec_->p(); }
    return c;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(spec_, o.spec_);
    return {spec_, spec_->add(v_, o.v_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(spec_, o.spec_);
    return {spec_, spec_->sub(v_, o.v_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(spec_, o.spec_);
    return {spec_, spec_->mul(v_, o.v_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(spec_, o.spec_);
    return {spec_, spec_->mul(v_, spec_->inv(o.v_))};
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(v_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(spec_, o.spec_);
    return v_ == o.v_;
}

FieldElement FieldElement::inverse() const { return {spec_, spec_->inv(v_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_->pow(v_, e)}; }

std::string to_string(const FieldElement& a) {
    const auto& spec = a.field();
    if (a.is_zero()) return "0";
    if (spec->prime_field()) return std::to_string(a.value());
    auto c = a.coeffs();
    std::string out;
    for (unsigned i = spec->s(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) {
            out += std::to_string(c[i]);
            out += '*';
        }
        out += 'w';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

} // namespace carlitz
