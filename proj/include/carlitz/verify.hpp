#ifndef CARLITZ_VERIFY_HPP
#define CARLITZ_VERIFY_HPP

/// Brute-force verification harness.
///
/// The Bang-Zsigmondy analogue: for q > 2, every monic pair (u, m), not both
/// constant, has a Zsigmondy prime except exactly (1, (p - 1)p) for deg-1
/// primes p when q is 3 or 4.  The Feit analogue: every such pair has a
/// large Zsigmondy prime except in nine explicit families EC-I..EC-IX.  Both
/// theorems quantify over infinitely many pairs; the harness checks them on
/// a finite box of degrees and reports the box alongside the verdict, so a
/// "match" is always a bounded claim.
///
/// The X-sets backing EC-III..EC-IX are defined in the source material by
/// checkable conditions (a candidate shape, "m + 1 is the only Zsigmondy
/// prime", "no large Zsigmondy primes", primality of m + 1) together with a
/// claimed roster.  exceptional_set recomputes each set from the conditions;
/// paper_exceptional_set instantiates the claimed roster; tests compare the
/// two.

#include <string>
#include <utility>
#include <vector>

#include "carlitz/factor.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/zsigmondy.hpp"

namespace carlitz {

/// Finite truncation of a theorem's universal quantifier.  At least one
/// bound must be >= 1, both >= 0, and q must be a prime power > 2.
struct SearchBounds {
    unsigned q = 0;
    int max_deg_m = 0;
    int max_deg_u = 0;
};

/// One exceptional pair found by a search, with the evidence lists.
struct PairClassification {
    Poly u;
    Poly m;
    std::vector<Poly> zsigmondy;
    std::vector<std::pair<Poly, LargeReason>> large;
};

struct ExceptionReport {
    std::string theorem; // "bang-zsigmondy" | "feit"
    SearchBounds bounds;
    /// Pairs inside the bounds with no Zsigmondy prime (bang-zsigmondy) or
    /// no large Zsigmondy prime (feit), sorted by (u, m).
    std::vector<PairClassification> exceptions;
    /// The theorem's exceptional pairs instantiated for this q and truncated
    /// to the bounds, sorted by (u, m).
    std::vector<std::pair<Poly, Poly>> expected;
    /// exceptions and expected agree as sets of pairs.
    bool match = false;
};

/// Exhaustive scan of all monic pairs within bounds, at least one component
/// of positive degree.  workers > 1 partitions the scan; the report is
/// independent of the worker count.
ExceptionReport verify_bang_zsigmondy(const SearchBounds& bounds, unsigned workers = 1);
ExceptionReport verify_feit(const SearchBounds& bounds, unsigned workers = 1);

enum class XSet { X3, X4, X5, X6, X7, X8, X9, X10 };

std::string to_string(XSet set);

/// Parse "X3".."X10" (case-insensitive).  Throws ParseError otherwise.
XSet xset_from_name(const std::string& name);

/// The field size a set's lemma is stated for; 0 for X7, which is
/// parametric in q.
unsigned xset_fixed_q(XSet set);

/// Recompute an exceptional set from its defining conditions, returned as
/// classified pairs (u, m): u = m for X4, u = 1 otherwise.  q must match the
/// lemma (X7: any q > 2).  max_s widens the X3 shape scan beyond the
/// lemma's s <= 7 as a falsification probe; it is ignored by other sets.
std::vector<std::pair<Poly, Poly>> exceptional_set(XSet set, unsigned q, unsigned max_s = 7);

/// The roster the source material states for the set, instantiated for q
/// and sorted like exceptional_set.  No search is performed.
std::vector<std::pair<Poly, Poly>> paper_exceptional_set(XSet set, unsigned q);

/// One row of the q = 3 or q = 4 demonstration table: for a deg-1 prime p
/// and m = (p - 1)p, the factorization of C_m(1) plus the annihilator
/// witnesses C_{p-1}(1) and C_p(1).
struct TableRow {
    Poly prime;
    Poly m;
    Factorization carlitz_value;
    Poly witness_p_minus_1;
    Poly witness_p;
};

/// Table 2 (which = 2, q = 3) or table 3 (which = 3, q = 4), one row per
/// deg-1 monic prime in canonical order.
std::vector<TableRow> reproduce_table(int which);

} // namespace carlitz

#endif
