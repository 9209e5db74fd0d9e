#ifndef CARLITZ_FFIELD_HPP
#define CARLITZ_FFIELD_HPP

/// Finite fields F_q, q = p^s, for small q.
///
/// A FieldSpec owns the arithmetic of one field: the modulus used to build
/// F_{p^s} = F_p[w]/(modulus) and dense lookup tables for add/mul/inv.
/// Elements are packed into a single integer index in [0, q): the element
/// sum c_i w^i (0 <= c_i < p) is stored as sum c_i p^i.  That packing makes
/// the natural enumeration order of constants 0, 1, ..., p-1, w, w+1, ...
///
/// The modulus is chosen deterministically: the lexicographically smallest
/// monic irreducible of degree s over F_p, coefficient tuples compared
/// constant term first.  For s = 1 no modulus is involved.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

/// Packed field element value.  uint16_t bounds q at 65535; FieldSpec::make
/// enforces the much smaller table-friendly cap below.
using fe_t = std::uint16_t;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    /// Largest supported field size.  Tables are q^2 entries; anything past
    /// this cap is outside the intended desk-scale use.
    static constexpr unsigned kMaxQ = 1024;

    /// Build F_{p^s}.  Throws DomainError if p is not prime, s = 0, or
    /// p^s exceeds kMaxQ.  Instances are cached per (p, s), so repeated
    /// calls return the same object and pointer comparison suffices.
    static FieldSpecPtr make(unsigned p, unsigned s);

    /// Build F_q from the field size alone.  Throws DomainError unless q is
    /// a prime power within the supported bound.
    static FieldSpecPtr from_order(unsigned q);

    unsigned p() const noexcept { return p_; }
    unsigned s() const noexcept { return s_; }
    unsigned q() const noexcept { return q_; }
    bool prime_field() const noexcept { return s_ == 1; }

    /// Modulus coefficients over F_p, constant term first, length s+1, monic.
    /// Empty for prime fields.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    /// True when the other spec describes the same field (same p, s, modulus).
    bool same(const FieldSpec& other) const noexcept;

    // Value-level arithmetic on packed indices.  No bounds checks: callers
    // maintain v < q.
    fe_t add(fe_t a, fe_t b) const noexcept { return add_[size_t(a) * q_ + b]; }
    fe_t sub(fe_t a, fe_t b) const noexcept { return add_[size_t(a) * q_ + neg_[b]]; }
    fe_t neg(fe_t a) const noexcept { return neg_[a]; }
    fe_t mul(fe_t a, fe_t b) const noexcept { return mul_[size_t(a) * q_ + b]; }

    /// Multiplicative inverse, computed as a^(q-2).  Throws DomainError on 0.
    fe_t inv(fe_t a) const;

    fe_t pow(fe_t a, std::uint64_t e) const noexcept;

    /// Unique b with b^p = a (inverse of the p-th power Frobenius).
    fe_t pth_root(fe_t a) const noexcept;

    const fe_t* add_table() const noexcept { return add_.data(); }
    const fe_t* mul_table() const noexcept { return mul_.data(); }

private:
    FieldSpec() = default;

    unsigned p_ = 0;
    unsigned s_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<fe_t> add_;
    std::vector<fe_t> mul_;
    std::vector<fe_t> neg_;
    std::vector<fe_t> inv_; // inv_[0] unused
};

/// Throws DomainError unless both specs describe the same field.
void require_same_field(const FieldSpecPtr& a, const FieldSpecPtr& b);

/// One element of one field.  Carries its FieldSpec so mixed-field operations
/// can be rejected instead of silently computing garbage.
class FieldElement {
public:
    FieldElement(FieldSpecPtr spec, fe_t packed);

    static FieldElement zero(const FieldSpecPtr& spec) { return {spec, 0}; }
    static FieldElement one(const FieldSpecPtr& spec) { return {spec, 1}; }

    /// The generator w of the extension.  Throws DomainError on prime fields.
    static FieldElement generator(const FieldSpecPtr& spec);

    /// From the coefficient vector (c_0, ..., c_{s-1}), low power of w first.
    /// Each c_i must lie in [0, p).
    static FieldElement from_coeffs(const FieldSpecPtr& spec, const std::vector<unsigned>& c);

    /// The image of an integer in the prime subfield (n reduced mod p).
    static FieldElement from_integer(const FieldSpecPtr& spec, std::uint64_t n);

    const FieldSpecPtr& field() const noexcept { return spec_; }
    fe_t value() const noexcept { return v_; }

    /// Coefficient vector over F_p, low power of w first, exactly s entries.
    std::vector<unsigned> coeffs() const;

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

private:
    FieldSpecPtr spec_;
    fe_t v_;
};

/// Canonical text form: terms in decreasing power of w, "*" between integer
/// coefficient and w, coefficient 1 and exponent 1 omitted.  Examples:
/// "0", "2", "w", "w+1", "2*w+2", "w^2+w".
std::string to_string(const FieldElement& a);

} // namespace carlitz

#endif
