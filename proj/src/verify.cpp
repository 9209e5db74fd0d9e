#include "carlitz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <optional>
#include <thread>

#include "carlitz/carlitz.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

bool pair_less(const std::pair<Poly, Poly>& a, const std::pair<Poly, Poly>& b) {
    if (a.first != b.first) return canonical_less(a.first, b.first);
    return canonical_less(a.second, b.second);
}

void sort_pairs(std::vector<std::pair<Poly, Poly>>& pairs) {
    std::sort(pairs.begin(), pairs.end(), pair_less);
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

FieldSpecPtr bounds_field(const SearchBounds& b) {
    auto spec = FieldSpec::from_order(b.q);
    if (spec->q() <= 2) throw DomainError("verification requires q > 2");
    if (b.max_deg_m < 0 || b.max_deg_u < 0) throw DomainError("degree bounds must be nonnegative");
    if (b.max_deg_m < 1 && b.max_deg_u < 1) throw DomainError("at least one degree bound must be positive");
    return spec;
}

/// All monic pairs within bounds, at least one component of positive degree,
/// in the fixed order (deg u, u, deg m, m).
std::vector<std::pair<Poly, Poly>> build_tasks(const FieldSpecPtr& spec, const SearchBounds& b) {
    std::vector<std::pair<Poly, Poly>> tasks;
    for (int du = 0; du <= b.max_deg_u; ++du) {
        for (const Poly& u : enumerate_monic(spec, du)) {
            for (int dm = 0; dm <= b.max_deg_m; ++dm) {
                if (du == 0 && dm == 0) continue;
                for (const Poly& m : enumerate_monic(spec, dm)) {
                    tasks.emplace_back(u, m);
                }
            }
        }
    }
    return tasks;
}

/// Runs body(0..count-1) over a pool of workers pulling task indices from a
/// shared counter.  Output determinism is the caller's concern: results must
/// be stored per index.
template <typename Fn>
void run_tasks(std::size_t count, unsigned workers, const Fn& body) {
    if (workers < 1) throw DomainError("worker count must be at least 1");
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    unsigned n = unsigned(std::min<std::size_t>(workers, count));
    std::vector<std::exception_ptr> failures(n);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= count) return;
                    body(i);
                }
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
}

std::vector<Poly> degree_one_primes(const FieldSpecPtr& spec) {
    // Every monic polynomial of degree 1 is irreducible; enumeration order
    // coincides with canonical order here.
    return enumerate_monic(spec, 1);
}

/// m = (p - 1)p over the deg-1 primes: the Bang-Zsigmondy exception shape.
std::vector<Poly> bang_exception_moduli(const FieldSpecPtr& spec) {
    std::vector<Poly> out;
    for (const Poly& p : degree_one_primes(spec)) out.push_back((p - Poly::one(spec)) * p);
    return out;
}

/// The stated X3 roster {(T - 1)T^2, T(T + 1)^2, (T + 1)(T + 2)^2}, i.e.
/// (p - 1)p^2 over the deg-1 primes of F_3[T].
std::vector<Poly> x3_roster(const FieldSpecPtr& spec) {
    std::vector<Poly> out;
    for (const Poly& p : degree_one_primes(spec)) out.push_back((p - Poly::one(spec)) * p * p);
    return out;
}

/// The stated X9 roster {T(T + w), T(T + w^2), (T + 1)(T + w), (T + 1)(T + w^2)}.
std::vector<Poly> x9_roster(const FieldSpecPtr& spec) {
    FieldElement w = FieldElement::generator(spec);
    Poly t = Poly::variable(spec);
    Poly t1 = t + Poly::one(spec);
    Poly tw = t + Poly::constant(w);
    Poly tw2 = t + Poly::constant(w * w);
    return {t * tw, t * tw2, t1 * tw, t1 * tw2};
}

/// The stated X10 roster member T^3 + 2T.
Poly x10_roster_poly(const FieldSpecPtr& spec) {
    return Poly::from_values(spec, {0, 2, 0, 1});
}

std::vector<std::pair<Poly, Poly>> bang_expected(const FieldSpecPtr& spec, const SearchBounds& b) {
    std::vector<std::pair<Poly, Poly>> out;
    if (spec->q() == 3 || spec->q() == 4) {
        Poly one = Poly::one(spec);
        for (const Poly& m : bang_exception_moduli(spec)) {
            if (m.degree() <= b.max_deg_m) out.emplace_back(one, m);
        }
    }
    sort_pairs(out);
    return out;
}

std::vector<std::pair<Poly, Poly>> feit_expected(const FieldSpecPtr& spec, const SearchBounds& b) {
    const unsigned q = spec->q();
    Poly one = Poly::one(spec);
    std::vector<std::pair<Poly, Poly>> out;
    auto add = [&](const Poly& u, const Poly& m) {
        if (u.degree() <= b.max_deg_u && m.degree() <= b.max_deg_m) out.emplace_back(u, m);
    };
    if (q == 3 || q == 4) {
        for (const Poly& m : bang_exception_moduli(spec)) add(one, m); // EC-I, EC-II
    }
    if (q == 3) {
        for (const Poly& m : x3_roster(spec)) add(one, m);             // EC-III
        for (const Poly& p : degree_one_primes(spec)) add(p, p);       // EC-IV
        for (const Poly& p : degree_one_primes(spec)) add(one, p * p); // EC-VII
        add(one, x10_roster_poly(spec));                               // EC-IX
    }
    if (q == 5) {
        for (const Poly& m : bang_exception_moduli(spec)) add(one, m); // EC-V
    }
    for (const Poly& p : degree_one_primes(spec)) add(one, p);         // EC-VI
    if (q == 4) {
        for (const Poly& m : x9_roster(spec)) add(one, m);             // EC-VIII
    }
    sort_pairs(out);
    return out;
}

ExceptionReport run_search(const char* theorem, const SearchBounds& bounds, unsigned workers,
                           bool feit) {
    auto spec = bounds_field(bounds);
    auto tasks = build_tasks(spec, bounds);
    std::vector<std::optional<PairClassification>> hits(tasks.size());
    run_tasks(tasks.size(), workers, [&](std::size_t i) {
        const Poly& u = tasks[i].first;
        const Poly& m = tasks[i].second;
        std::vector<Poly> zs = zsigmondy_primes(u, m);
        auto large = large_zsigmondy_among(zs, u, m);
        if (feit ? large.empty() : zs.empty()) {
            hits[i] = PairClassification{u, m, std::move(zs), std::move(large)};
        }
    });

    ExceptionReport report;
    report.theorem = theorem;
    report.bounds = bounds;
    for (auto& h : hits) {
        if (h) report.exceptions.push_back(std::move(*h));
    }
    std::sort(report.exceptions.begin(), report.exceptions.end(),
              [](const PairClassification& a, const PairClassification& b) {
                  if (a.u != b.u) return canonical_less(a.u, b.u);
                  return canonical_less(a.m, b.m);
              });
    report.expected = feit ? feit_expected(spec, bounds) : bang_expected(spec, bounds);
    report.match = report.exceptions.size() == report.expected.size();
    for (std::size_t i = 0; report.match && i < report.expected.size(); ++i) {
        report.match = report.exceptions[i].u == report.expected[i].first &&
                       report.exceptions[i].m == report.expected[i].second;
    }
    return report;
}

FieldSpecPtr xset_field(XSet set, unsigned q) {
    unsigned fixed = xset_fixed_q(set);
    if (fixed != 0 && q != fixed) {
        throw DomainError(to_string(set) + " is stated for q = " + std::to_string(fixed) +
                          ", got q = " + std::to_string(q));
    }
    auto spec = FieldSpec::from_order(q);
    if (spec->q() <= 2) throw DomainError("exceptional sets require q > 2");
    return spec;
}

/// The two conditions shared by the X-set lemmas: m + 1 is the only
/// Zsigmondy prime for (u, m), and no Zsigmondy prime for (u, m) is large.
bool only_m_plus_one_and_no_large(const Poly& u, const Poly& m) {
    std::vector<Poly> zs = zsigmondy_primes(u, m);
    if (zs.size() != 1 || zs.front() != m + Poly::one(m.field())) return false;
    return large_zsigmondy_among(zs, u, m).empty();
}

} // namespace

ExceptionReport verify_bang_zsigmondy(const SearchBounds& bounds, unsigned workers) {
    return run_search("bang-zsigmondy", bounds, workers, false);
}

ExceptionReport verify_feit(const SearchBounds& bounds, unsigned workers) {
    return run_search("feit", bounds, workers, true);
}

std::string to_string(XSet set) {
    switch (set) {
        case XSet::X3: return "X3";
        case XSet::X4: return "X4";
        case XSet::X5: return "X5";
        case XSet::X6: return "X6";
        case XSet::X7: return "X7";
        case XSet::X8: return "X8";
        case XSet::X9: return "X9";
        case XSet::X10: return "X10";
    }
    throw std::logic_error("unreachable XSet value");
}

XSet xset_from_name(const std::string& name) {
    std::string up;
    for (char c : name) up += char(std::toupper(static_cast<unsigned char>(c)));
    for (XSet set : {XSet::X3, XSet::X4, XSet::X5, XSet::X6, XSet::X7, XSet::X8, XSet::X9, XSet::X10}) {
        if (up == to_string(set)) return set;
    }
    throw ParseError("unknown exceptional set: " + name);
}

unsigned xset_fixed_q(XSet set) {
    switch (set) {
        case XSet::X6: return 5;
        case XSet::X9: return 4;
        case XSet::X7: return 0;
        default: return 3;
    }
}

std::vector<std::pair<Poly, Poly>> exceptional_set(XSet set, unsigned q, unsigned max_s) {
    auto spec = xset_field(set, q);
    Poly one = Poly::one(spec);
    std::vector<std::pair<Poly, Poly>> out;
    switch (set) {
        case XSet::X3: {
            if (max_s < 2) throw DomainError("X3 scan requires max_s >= 2");
            for (const Poly& p : degree_one_primes(spec)) {
                Poly power = p * p;
                for (unsigned s = 2; s <= max_s; ++s) {
                    Poly m = (p - one) * power;
                    if (only_m_plus_one_and_no_large(one, m)) out.emplace_back(one, m);
                    power = power * p;
                }
            }
            break;
        }
        case XSet::X4: {
            for (const Poly& p : degree_one_primes(spec)) {
                if (only_m_plus_one_and_no_large(p, p)) out.emplace_back(p, p);
            }
            break;
        }
        case XSet::X5: {
            for (int d = 2; d <= 3; ++d) {
                for (const Poly& prime : enumerate_monic_irreducible(spec, d)) {
                    Poly ann = carlitz_annihilator(one, prime);
                    if (ann.degree() != 2) continue;
                    Poly m = ann * prime;
                    if (is_irreducible(m + one)) out.emplace_back(one, m);
                }
            }
            break;
        }
        case XSet::X6: {
            for (const Poly& m : bang_exception_moduli(spec)) {
                if (only_m_plus_one_and_no_large(one, m)) out.emplace_back(one, m);
            }
            break;
        }
        case XSet::X7: {
            for (const Poly& p : degree_one_primes(spec)) out.emplace_back(one, p);
            break;
        }
        case XSet::X8: {
            for (const Poly& p : degree_one_primes(spec)) {
                Poly m = p * p;
                if (only_m_plus_one_and_no_large(one, m)) out.emplace_back(one, m);
            }
            break;
        }
        case XSet::X9: {
            auto primes = degree_one_primes(spec);
            for (std::size_t i = 0; i < primes.size(); ++i) {
                for (std::size_t j = i + 1; j < primes.size(); ++j) {
                    Poly m = primes[i] * primes[j];
                    if (only_m_plus_one_and_no_large(one, m)) out.emplace_back(one, m);
                }
            }
            break;
        }
        case XSet::X10: {
            for (int d = 2; d <= 3; ++d) {
                for (const Poly& m : enumerate_monic(spec, d)) {
                    Factorization f = factorize(m);
                    bool squarefree = true;
                    bool has_deg1 = false;
                    for (const PrimePower& pp : f.factors) {
                        if (pp.exp > 1) squarefree = false;
                        if (pp.prime.degree() == 1) has_deg1 = true;
                    }
                    // A squarefree m of degree 2 or 3 splits as m1 * m2 with
                    // deg m2 = 1, deg m1 in {1, 2}, gcd(m1, m2) = 1 exactly
                    // when it has a deg-1 prime factor.
                    if (!squarefree || !has_deg1) continue;
                    if (only_m_plus_one_and_no_large(one, m)) out.emplace_back(one, m);
                }
            }
            break;
        }
    }
    sort_pairs(out);
    return out;
}

std::vector<std::pair<Poly, Poly>> paper_exceptional_set(XSet set, unsigned q) {
    auto spec = xset_field(set, q);
    Poly one = Poly::one(spec);
    std::vector<std::pair<Poly, Poly>> out;
    switch (set) {
        case XSet::X3:
            for (const Poly& m : x3_roster(spec)) out.emplace_back(one, m);
            break;
        case XSet::X4:
            for (const Poly& p : degree_one_primes(spec)) out.emplace_back(p, p);
            break;
        case XSet::X5:
            break; // stated empty
        case XSet::X6:
            for (const Poly& m : bang_exception_moduli(spec)) out.emplace_back(one, m);
            break;
        case XSet::X7:
            for (const Poly& p : degree_one_primes(spec)) out.emplace_back(one, p);
            break;
        case XSet::X8:
            for (const Poly& p : degree_one_primes(spec)) out.emplace_back(one, p * p);
            break;
        case XSet::X9:
            for (const Poly& m : x9_roster(spec)) out.emplace_back(one, m);
            break;
        case XSet::X10:
            out.emplace_back(one, x10_roster_poly(spec));
            break;
    }
    sort_pairs(out);
    return out;
}

std::vector<TableRow> reproduce_table(int which) {
    if (which != 2 && which != 3) throw DomainError("table must be 2 or 3");
    auto spec = which == 2 ? FieldSpec::make(3, 1) : FieldSpec::make(2, 2);
    Poly one = Poly::one(spec);
    std::vector<TableRow> rows;
    for (const Poly& p : degree_one_primes(spec)) {
        Poly m = (p - one) * p;
        rows.push_back(TableRow{p, m, factorize(carlitz_eval(m, one)), carlitz_eval(p - one, one),
                                carlitz_eval(p, one)});
    }
    return rows;
}

} // namespace carlitz
