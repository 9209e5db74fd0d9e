#ifndef CARLITZ_CYCLOTOMIC_HPP
#define CARLITZ_CYCLOTOMIC_HPP

/// Carlitz cyclotomic polynomials Psi_m and their evaluation.
///
/// Psi_m(x) is defined by the product formula  C_m(x) = prod_{b | m} Psi_b(x)
/// over monic divisors b (with Psi_1(x) = x), equivalently for prime powers
/// by  Psi_{p^s}(x) = C_{p^s}(x) / C_{p^{s-1}}(x).  Both equalities are exact
/// divisions in A[x]; a nonzero remainder anywhere is an internal consistency
/// failure and aborts (std::logic_error), never a truncation.
///
/// Evaluation offers two paths that agree wherever both run:
///   - the XPoly path expands Psi_m(x) in A[x] and evaluates; exponential in
///     deg m (x-degree q^{deg m} intermediates), used for deg m <= 3;
///   - the value recursion divides C_m(u) by the Psi_b(u) of proper divisors,
///     touching only divisor values; automatic from deg m = 4 up.

#include <map>
#include <vector>

#include "carlitz/carlitz.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

/// Element of A[x]: dense in x, coefficients in A = F_q[T].
class XPoly {
public:
    explicit XPoly(FieldSpecPtr spec);

    static XPoly zero(const FieldSpecPtr& spec) { return XPoly(spec); }
    static XPoly one(const FieldSpecPtr& spec);
    static XPoly x(const FieldSpecPtr& spec);
    static XPoly from_coeffs(FieldSpecPtr spec, std::vector<Poly> coeffs);

    const FieldSpecPtr& field() const noexcept { return spec_; }
    int degree() const noexcept { return int(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Leading x-coefficient equals the constant polynomial 1.
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    /// x-coefficient of x^i; zero polynomial beyond the degree.
    const Poly& coeff(size_t i) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    bool operator==(const XPoly& o) const;
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    /// Exact division by a divisor monic in x.  Throws std::logic_error on a
    /// nonzero remainder, DomainError if the divisor is zero or non-monic.
    XPoly exact_div(const XPoly& divisor) const;

    /// Substitute u for x.
    Poly eval(const Poly& u) const;

    /// Substitute another XPoly for x.
    XPoly compose(const XPoly& inner) const;

private:
    void trim();

    FieldSpecPtr spec_;
    std::vector<Poly> c_;
    Poly zero_; // returned by coeff() past the degree
};

/// Canonical text form: terms in decreasing x-degree, zero terms omitted.
/// Coefficients of positive degree are parenthesized, "(2*T)*x^2+x+T";
/// constant coefficients print bare, "2*x^4"; the x^0 term is the bare
/// polynomial.
std::string to_string(const XPoly& f);

/// C_m as an element of A[x] (x-degree q^{deg m}).
XPoly to_xpoly(const CarlitzCoeffs& cc);

/// Psi_m(x) for monic m of positive degree.
XPoly cyclotomic_poly(const Poly& m);

/// Psi_m(u): m monic of positive degree, u != 0, q > 2.  Dispatches between
/// the two paths at deg m = 4.
Poly cyclotomic_eval(const Poly& m, const Poly& u);

/// The individual paths, exposed for cross-testing.  Same preconditions.
Poly cyclotomic_eval_via_poly(const Poly& m, const Poly& u);
Poly cyclotomic_eval_via_values(const Poly& m, const Poly& u);

/// Batch evaluator for a fixed u: memoizes Psi_b(u) and C_b(u) across the
/// divisor lattice, the way a single cyclotomic_eval call does internally,
/// but persistently, so sweeps over many m share work.  Single-threaded use
/// only (each thread owns its own evaluator).
class CyclotomicEvaluator {
public:
    explicit CyclotomicEvaluator(Poly u);

    const Poly& u() const noexcept { return u_; }

    /// Psi_m(u) by the value recursion; m monic of positive degree.
    const Poly& psi(const Poly& m);

    /// C_b(u), memoized.
    const Poly& carlitz_value(const Poly& b);

private:
    Poly u_;
    std::map<Poly, Poly, CanonicalLess> psi_;
    std::map<Poly, Poly, CanonicalLess> cval_;
};

} // namespace carlitz

#endif
