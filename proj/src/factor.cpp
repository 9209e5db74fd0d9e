#include "carlitz/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

namespace carlitz {

namespace {

std::vector<unsigned> prime_factors_int(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^{q^k} mod f, advanced one Frobenius step at a time from a cached power.
Poly frobenius_step(const Poly& h, const Poly& f) {
    return poly_powmod(h, h.field()->q(), f);
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t seed_for(const Poly& f) {
    if (const char* env = std::getenv("CARLITZ_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError("CARLITZ_SEED must be an unsigned integer");
        }
    }
    const auto& spec = *f.field();
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a(h, spec.p());
    h = fnv1a(h, spec.s());
    for (unsigned c : spec.modulus()) h = fnv1a(h, c);
    for (fe_t v : f.values()) h = fnv1a(h, v);
    return h;
}

Poly random_poly_below(const FieldSpecPtr& spec, int deg_bound, std::mt19937_64& rng) {
    std::vector<fe_t> v(size_t(deg_bound), 0);
    std::uniform_int_distribution<unsigned> dist(0, spec->q() - 1);
    for (auto& c : v) c = fe_t(dist(rng));
    return Poly::from_values(spec, std::move(v));
}

// Squarefree decomposition of a monic f: pairwise coprime monic squarefree
// parts with multiplicities.  Char-p aware: when the derivative vanishes the
// whole remaining part is a p-th power and recursion continues on its root.
void squarefree_decompose(const Poly& f, unsigned outer, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() < 1) return;
    const unsigned p = f.field()->p();
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(f.pth_root(), outer * p, out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = poly_exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, i * outer);
        w = std::move(y);
        c = poly_exact_div(c, w);
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c.pth_root(), outer * p, out);
}

// Distinct-degree split of a monic squarefree f: (product of the irreducible
// factors of degree k, k) pairs.
std::vector<std::pair<Poly, int>> distinct_degree_split(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const FieldSpecPtr& spec = f.field();
    Poly x = Poly::variable(spec);
    Poly h = poly_mod(x, f);
    int k = 0;
    while (f.degree() >= 2 * (k + 1)) {
        ++k;
        h = frobenius_step(h, f);
        Poly g = poly_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            f = poly_exact_div(f, g);
            h = poly_mod(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Cantor-Zassenhaus equal-degree split: f monic squarefree, every irreducible
// factor of degree k.
void equal_degree_split(const Poly& f, int k, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == k) {
        out.push_back(f);
        return;
    }
    const FieldSpecPtr& spec = f.field();
    const unsigned q = spec->q();
    const Poly one = Poly::one(spec);
    for (;;) {
        Poly a = random_poly_below(spec, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly d = poly_gcd(a, f);
        if (d.degree() == 0) {
            if (spec->p() == 2) {
                // Trace of a from F_{q^k} down to F_2: sum of a^{2^i}.
                unsigned bits = 0;
                for (unsigned t = q; t > 1; t >>= 1) ++bits;
                Poly b = Poly::zero(spec);
                Poly t = poly_mod(a, f);
                for (unsigned i = 0; i < bits * unsigned(k); ++i) {
                    b = b + t;
                    t = poly_mulmod(t, t, f);
                }
                d = poly_gcd(b.is_zero() ? f : b, f);
            } else {
                // a^{(q^k-1)/2} = (norm of a)^{(q-1)/2} with the norm built
                // from k Frobenius conjugates; avoids a q^k-sized exponent.
                Poly t = poly_mod(a, f);
                Poly norm = t;
                for (int i = 1; i < k; ++i) {
                    t = frobenius_step(t, f);
                    norm = poly_mulmod(norm, t, f);
                }
                Poly b = poly_powmod(norm, (q - 1) / 2, f);
                d = poly_gcd(b - one, f);
            }
        }
        if (d.degree() > 0 && d.degree() < f.degree()) {
            equal_degree_split(d, k, rng, out);
            equal_degree_split(poly_exact_div(f, d), k, rng, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw DomainError("irreducibility is defined for positive degree only");
    const int n = f.degree();
    if (n == 1) return true;
    const FieldSpecPtr& spec = f.field();
    const Poly x = Poly::variable(spec);
    const Poly fm = f.monic();

    std::vector<unsigned> prime_divs = prime_factors_int(unsigned(n));
    std::vector<int> checkpoints;
    for (unsigned l : prime_divs) checkpoints.push_back(n / int(l));
    std::sort(checkpoints.begin(), checkpoints.end());

    Poly h = poly_mod(x, fm);
    size_t next = 0;
    for (int k = 1; k <= n; ++k) {
        h = frobenius_step(h, fm);
        while (next < checkpoints.size() && checkpoints[next] == k) {
            if (poly_gcd(h - x, fm).degree() != 0) return false;
            ++next;
        }
    }
    return h == poly_mod(x, fm);
}

Poly Factorization::reassemble() const {
    Poly out = Poly::constant(unit);
    for (const auto& [prime, exp] : factors)
        for (unsigned i = 0; i < exp; ++i) out = out * prime;
    return out;
}

Factorization factorize(const Poly& f) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    Factorization result{f.leading_coeff(), {}};
    if (f.degree() == 0) return result;

    std::mt19937_64 rng(seed_for(f));
    std::map<Poly, unsigned, CanonicalLess> acc;

    std::vector<std::pair<Poly, unsigned>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [block, k] : distinct_degree_split(part)) {
            std::vector<Poly> primes;
            equal_degree_split(block, k, rng, primes);
            for (auto& prime : primes) acc[prime] += mult;
        }
    }
    for (auto& [prime, exp] : acc) result.factors.push_back({prime, exp});
    return result;
}

std::vector<Poly> enumerate_monic_irreducible(const FieldSpecPtr& spec, int d) {
    if (d < 1) throw DomainError("irreducibles have positive degree");
    std::vector<Poly> out;
    for (std::uint64_t i = 0, n = monic_count(spec, d); i < n; ++i) {
        Poly f = monic_of_index(spec, d, i);
        if (is_irreducible(f)) out.push_back(f);
    }
    return out;
}

std::uint64_t euler_phi(const Poly& m) {
    if (m.is_zero()) throw DomainError("euler phi of the zero polynomial");
    if (m.degree() == 0) return 1;
    const std::uint64_t q = m.field()->q();
    std::uint64_t phi = 1;
    for (const auto& [prime, exp] : factorize(m).factors) {
        std::uint64_t qd = 1;
        for (int i = 0; i < prime.degree(); ++i) qd *= q;
        std::uint64_t lower = 1;
        for (unsigned i = 1; i < exp; ++i) lower *= qd;
        phi *= lower * (qd - 1);
    }
    return phi;
}

std::string to_string(const Factorization& f) {
    std::string out;
    if (!f.unit.is_one() || f.factors.empty()) {
        out = to_string(f.unit);
        if (!f.factors.empty()) out += '*';
    }
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i > 0) out += '*';
        out += '(';
        out += to_string(f.factors[i].prime);
        out += ')';
        if (f.factors[i].exp > 1) {
            out += '^';
            out += std::to_string(f.factors[i].exp);
        }
    }
    return out;
}

std::vector<Poly> monic_divisors(const Poly& m) {
    if (m.is_zero()) throw DomainError("divisors of the zero polynomial");
    Factorization fac = factorize(m);
    std::vector<Poly> out{Poly::one(m.field())};
    for (const auto& [prime, exp] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (exp + 1));
        for (const auto& d : out) {
            Poly cur = d;
            next.push_back(cur);
            for (unsigned i = 1; i <= exp; ++i) {
                cur = cur * prime;
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

} // namespace carlitz
