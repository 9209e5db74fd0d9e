#ifndef CARLITZ_POLY_HPP
#define CARLITZ_POLY_HPP

/// Dense univariate polynomials over F_q: the ring A = F_q[T].
///
/// Coefficients are packed field values, lowest degree first, with no
/// trailing zeros.  The zero polynomial has an empty coefficient vector and
/// degree() == -1, standing in for deg 0 = -infinity; that convention makes
/// "deg r < deg b" checks work unchanged for r = 0.
///
/// Multiplication switches from schoolbook to Karatsuba above degree 32;
/// the schoolbook kernel stays exposed (detail::mul_schoolbook) as a test
/// oracle.  The q-th power of a polynomial is the semilinear map
/// sum c_i T^i  ->  sum c_i^q T^{iq}, which over F_q is pure index dilation
/// since c^q = c; frobenius_q() implements it in O(deg) and doubles as an
/// oracle against generic binary powering.

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/ffield.hpp"

namespace carlitz {

class Poly {
public:
    /// Zero polynomial over the given field.
    explicit Poly(FieldSpecPtr spec);

    static Poly zero(const FieldSpecPtr& spec) { return Poly(spec); }
    static Poly one(const FieldSpecPtr& spec);
    static Poly variable(const FieldSpecPtr& spec); // the polynomial T
    static Poly constant(const FieldElement& c);

    /// From packed values, lowest degree first (trailing zeros trimmed).
    static Poly from_values(FieldSpecPtr spec, std::vector<fe_t> values);
    static Poly from_elements(const FieldSpecPtr& spec, const std::vector<FieldElement>& coeffs);

    const FieldSpecPtr& field() const noexcept { return spec_; }

    /// -1 for the zero polynomial, else the true degree.
    int degree() const noexcept { return int(c_.size()) - 1; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of T^i; zero beyond the degree.
    fe_t coeff_value(size_t i) const noexcept { return i < c_.size() ? c_[i] : fe_t(0); }
    FieldElement coeff(size_t i) const { return {spec_, coeff_value(i)}; }

    /// Leading coefficient; zero element for the zero polynomial.
    FieldElement leading_coeff() const { return {spec_, c_.empty() ? fe_t(0) : c_.back()}; }

    /// This polynomial divided by its leading coefficient.  Error on zero.
    Poly monic() const;

    const std::vector<fe_t>& values() const noexcept { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Multiply by T^k.
    Poly shifted(size_t k) const;

    /// The q-th power, via the semilinear index dilation described above.
    Poly frobenius_q() const;

    /// For f with f' = 0 (all exponents divisible by p): the unique g with
    /// g^p = f.  Throws DomainError otherwise.
    Poly pth_root() const;

    Poly derivative() const;

    FieldElement eval(const FieldElement& x) const;

private:
    void trim();

    FieldSpecPtr spec_;
    std::vector<fe_t> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
/// Throws DomainError when b = 0.
DivMod poly_divmod(const Poly& a, const Poly& b);

Poly poly_mod(const Poly& a, const Poly& b);

/// Quotient of an exact division.  Throws std::logic_error if the remainder
/// is nonzero: callers use this only where divisibility is a theorem, so a
/// nonzero remainder is an internal-consistency failure, never truncated.
Poly poly_exact_div(const Poly& a, const Poly& b);

bool poly_divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) is an error.
Poly poly_gcd(Poly a, Poly b);

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// Canonical strict ordering: by degree, then by coefficient vector
/// lexicographically with the constant term compared first.  Used to sort
/// every outward-facing list (factorizations, divisor lists, reports).
bool canonical_less(const Poly& a, const Poly& b);

struct CanonicalLess {
    bool operator()(const Poly& a, const Poly& b) const { return canonical_less(a, b); }
};

/// Canonical text form: terms in decreasing degree, "T^k" power notation,
/// zero terms omitted, coefficient 1 omitted, "^1" omitted.  Multi-term
/// extension-field coefficients are parenthesized: "(w+1)*T^2+w".
std::string to_string(const Poly& f);

/// Number of monic polynomials of degree exactly d: q^d.
std::uint64_t monic_count(const FieldSpecPtr& spec, int d);

/// The index-th monic polynomial of degree d, in the enumeration order where
/// the constant term varies fastest: the coefficients below T^d are the
/// base-q digits of index, least significant digit = constant term.
Poly monic_of_index(const FieldSpecPtr& spec, int d, std::uint64_t index);

/// All q^d monic polynomials of degree exactly d, in enumeration order.
std::vector<Poly> enumerate_monic(const FieldSpecPtr& spec, int d);

namespace detail {
/// Quadratic multiplication kernel, kept as the oracle for Karatsuba.
Poly mul_schoolbook(const Poly& a, const Poly& b);
} // namespace detail

} // namespace carlitz

#endif
