#include "carlitz/cli.hpp"

#include "carlitz/carlitz.hpp"
#include "carlitz/cyclotomic.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/factor.hpp"
#include "carlitz/ffield.hpp"
#include "carlitz/json_out.hpp"
#include "carlitz/parse.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/verify.hpp"
#include "carlitz/zsigmondy.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace carlitz {
namespace {

std::string join_polys(const std::vector<Poly>& v) {
    if (v.empty()) return "(none)";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s;
}

std::string join_large(const std::vector<std::pair<Poly, LargeReason>>& v) {
    if (v.empty()) return "(none)";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i].first) + " (" + to_string(v[i].second) + ")";
    }
    return s;
}

void print_report_text(std::ostream& os, const ZsigmondyReport& r) {
    os << "q: " << r.q << "\n";
    os << "u: " << to_string(r.u) << "\n";
    os << "m: " << to_string(r.m) << "\n";
    if (r.psi_value) {
        os << "psi_value: " << to_string(*r.psi_value) << "\n";
    }
    os << "zsigmondy: " << join_polys(r.zsigmondy) << "\n";
    os << "large: " << join_large(r.large) << "\n";
    if (r.non_zsigmondy.empty()) {
        os << "non_zsigmondy: (none)\n";
    } else {
        std::string s;
        for (std::size_t i = 0; i < r.non_zsigmondy.size(); ++i) {
            if (i) s += ", ";
            const NonZsigmondyFactor& f = r.non_zsigmondy[i];
            s += to_string(f.prime) + " (annihilator=" + to_string(f.annihilator) +
                 ", s=" + std::to_string(f.s) + ")";
        }
        os << "non_zsigmondy: " << s << "\n";
    }
    if (r.m_plus_one_prime) {
        os << "m_plus_one_prime: " << (*r.m_plus_one_prime ? "true" : "false") << "\n";
    }
    if (r.unique_zsigmondy_is_m_plus_one) {
        os << "unique_zsigmondy_is_m_plus_one: "
           << (*r.unique_zsigmondy_is_m_plus_one ? "true" : "false") << "\n";
    }
}

void print_verify_text(std::ostream& os, const ExceptionReport& r) {
    os << "theorem: " << r.theorem << "\n";
    os << "q: " << r.bounds.q << "\n";
    os << "max_deg_m: " << r.bounds.max_deg_m << "\n";
    os << "max_deg_u: " << r.bounds.max_deg_u << "\n";
    os << "exceptions: " << r.exceptions.size() << "\n";
    for (const PairClassification& e : r.exceptions) {
        os << "  u=" << to_string(e.u) << " m=" << to_string(e.m)
           << " zsigmondy=" << join_polys(e.zsigmondy)
           << " large=" << join_large(e.large) << "\n";
    }
    os << "expected: " << r.expected.size() << "\n";
    for (const auto& pr : r.expected) {
        os << "  u=" << to_string(pr.first) << " m=" << to_string(pr.second) << "\n";
    }
    os << "match: " << (r.match ? "true" : "false") << "\n";
}

void print_table_text(std::ostream& os, const std::vector<TableRow>& rows) {
    for (const TableRow& row : rows) {
        os << "prime=" << to_string(row.prime) << " m=" << to_string(row.m)
           << " C_m(1)=" << to_string(row.carlitz_value)
           << " C_{p-1}(1)=" << to_string(row.witness_p_minus_1)
           << " C_p(1)=" << to_string(row.witness_p) << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Carlitz module arithmetic over F_q[T]: cyclotomic values, Zsigmondy prime "
                 "classification, and bounded brute-force verification of the Bang-Zsigmondy "
                 "and Feit theorems"};
    app.require_subcommand(1);

    unsigned q_flag = 0;
    unsigned p_flag = 0;
    unsigned s_flag = 1;
    auto* opt_q = app.add_option("--q", q_flag, "field order, a prime power > 1");
    auto* opt_p = app.add_option("--p", p_flag, "field characteristic, a prime");
    auto* opt_s = app.add_option("--s", s_flag, "extension degree over the prime field (default 1)");
    opt_q->excludes(opt_p)->excludes(opt_s);
    opt_s->needs(opt_p);

    std::string format = "text";
    app.add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads for verify (default 1)");
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    std::string m_text;
    std::string u_text;
    std::string mod_text;
    std::string prime_text;

    auto* sc_carlitz = app.add_subcommand("carlitz", "evaluate the Carlitz action C_m(u)");
    sc_carlitz->add_option("m", m_text, "action polynomial m")->required();
    sc_carlitz->add_option("u", u_text, "argument u")->required();

    auto* sc_carlitz_mod = app.add_subcommand("carlitz-mod", "evaluate C_m(u) modulo a polynomial");
    sc_carlitz_mod->add_option("m", m_text, "action polynomial m")->required();
    sc_carlitz_mod->add_option("u", u_text, "argument u")->required();
    sc_carlitz_mod->add_option("modulus", mod_text, "modulus of degree >= 1")->required();

    auto* sc_cyclotomic =
        app.add_subcommand("cyclotomic", "cyclotomic polynomial Psi_m(x), or its value Psi_m(u)");
    sc_cyclotomic->add_option("m", m_text, "monic polynomial of positive degree")->required();
    sc_cyclotomic->add_option("u", u_text, "optional evaluation point, nonzero");

    auto* sc_phi = app.add_subcommand("phi", "order of the unit group (A/m)^*");
    sc_phi->add_option("m", m_text, "nonzero polynomial")->required();

    auto* sc_annihilator =
        app.add_subcommand("annihilator", "Carlitz annihilator of u modulo a prime");
    sc_annihilator->add_option("u", u_text, "nonzero polynomial")->required();
    sc_annihilator->add_option("prime", prime_text, "monic irreducible polynomial")->required();

    auto* sc_zsigmondy = app.add_subcommand("zsigmondy", "Zsigmondy primes of the pair (u, m)");
    sc_zsigmondy->add_option("u", u_text, "nonzero polynomial")->required();
    sc_zsigmondy->add_option("m", m_text, "nonzero polynomial")->required();

    auto* sc_large = app.add_subcommand("large", "large Zsigmondy primes of the pair (u, m)");
    sc_large->add_option("u", u_text, "nonzero polynomial")->required();
    sc_large->add_option("m", m_text, "nonzero polynomial")->required();

    auto* sc_classify =
        app.add_subcommand("classify", "full Zsigmondy classification of the pair (u, m)");
    sc_classify->add_option("u", u_text, "nonzero polynomial")->required();
    sc_classify->add_option("m", m_text, "nonzero polynomial")->required();

    auto* sc_verify =
        app.add_subcommand("verify", "exhaustively verify a theorem over bounded degrees");
    std::string verify_kind;
    sc_verify->add_option("theorem", verify_kind, "bang or feit")
        ->required()
        ->check(CLI::IsMember({"bang", "feit"}));
    int max_deg_m = 0;
    int max_deg_u = 0;
    sc_verify->add_option("--max-deg-m", max_deg_m, "largest deg m searched")->required();
    sc_verify->add_option("--max-deg-u", max_deg_u, "largest deg u searched")->required();

    auto* sc_table = app.add_subcommand("table", "reproduce a small-field data table");
    int table_which = 0;
    sc_table->add_option("which", table_which, "2 (q = 3) or 3 (q = 4)")->required();

    auto* sc_xset =
        app.add_subcommand("xset", "recompute an exceptional set from its defining conditions");
    std::string xset_name;
    sc_xset->add_option("name", xset_name, "one of X3, X4, X5, X6, X7, X8, X9, X10")->required();
    unsigned max_s = 7;
    sc_xset->add_option("--max-s", max_s, "power scan bound for the X3 conditions (default 7)");

    // Global flags may appear before or after the subcommand.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
    }

    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto resolve_field = [&](bool required) -> FieldSpecPtr {
        try {
            if (opt_q->count() > 0) return FieldSpec::from_order(q_flag);
            if (opt_p->count() > 0) return FieldSpec::make(p_flag, s_flag);
        } catch (const DomainError& e) {
            // A bad field flag is a usage error, not a domain error.
            throw ParseError(e.what());
        }
        if (required) {
            throw ParseError("a field is required: pass --q N or --p P [--s S]");
        }
        return nullptr;
    };

    std::ostringstream buf;
    const bool json = format == "json";
    int rc = 0;
    try {
        if (sc_carlitz->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            Poly m = parse_poly(m_text, spec);
            Poly u = parse_poly(u_text, spec);
            Poly value = carlitz_eval(m, u);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["m"] = to_string(m);
                doc["u"] = to_string(u);
                doc["value"] = to_string(value);
                buf << doc.dump(2) << "\n";
            } else {
                buf << to_string(value) << "\n";
            }
        } else if (sc_carlitz_mod->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            Poly m = parse_poly(m_text, spec);
            Poly u = parse_poly(u_text, spec);
            Poly modulus = parse_poly(mod_text, spec);
            Poly value = carlitz_eval_mod(m, u, modulus);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["m"] = to_string(m);
                doc["u"] = to_string(u);
                doc["modulus"] = to_string(modulus);
                doc["value"] = to_string(value);
                buf << doc.dump(2) << "\n";
            } else {
                buf << to_string(value) << "\n";
            }
        } else if (sc_cyclotomic->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            Poly m = parse_poly(m_text, spec);
            if (sc_cyclotomic->count("u") > 0) {
                Poly u = parse_poly(u_text, spec);
                Poly value = cyclotomic_eval(m, u);
                if (json) {
                    ojson doc;
                    doc["q"] = spec->q();
                    doc["m"] = to_string(m);
                    doc["u"] = to_string(u);
                    doc["value"] = to_string(value);
                    buf << doc.dump(2) << "\n";
                } else {
                    buf << to_string(value) << "\n";
                }
            } else {
                XPoly f = cyclotomic_poly(m);
                if (json) {
                    ojson doc;
                    doc["q"] = spec->q();
                    doc["m"] = to_string(m);
                    ojson coeffs = ojson::array();
                    for (int i = 0; i <= f.degree(); ++i) {
                        coeffs.push_back(to_string(f.coeff(static_cast<std::size_t>(i))));
                    }
                    doc["psi_x"] = coeffs;
                    buf << doc.dump(2) << "\n";
                } else {
                    buf << to_string(f) << "\n";
                }
            }
        } else if (sc_phi->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            Poly m = parse_poly(m_text, spec);
            std::uint64_t value = euler_phi(m);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["m"] = to_string(m);
                doc["phi"] = value;
                buf << doc.dump(2) << "\n";
            } else {
                buf << value << "\n";
            }
        } else if (sc_annihilator->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            Poly u = parse_poly(u_text, spec);
            Poly prime = parse_poly(prime_text, spec);
            Poly ann = carlitz_annihilator(u, prime);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["u"] = to_string(u);
                doc["prime"] = to_string(prime);
                doc["annihilator"] = to_string(ann);
                buf << doc.dump(2) << "\n";
            } else {
                buf << to_string(ann) << "\n";
            }
        } else if (sc_zsigmondy->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            auto [u, m] = normalize_pair(parse_poly(u_text, spec), parse_poly(m_text, spec));
            std::vector<Poly> primes = zsigmondy_primes(u, m);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["u"] = to_string(u);
                doc["m"] = to_string(m);
                ojson list = ojson::array();
                for (const Poly& p : primes) list.push_back(to_string(p));
                doc["zsigmondy_primes"] = list;
                buf << doc.dump(2) << "\n";
            } else if (primes.empty()) {
                buf << "(none)\n";
            } else {
                for (const Poly& p : primes) buf << to_string(p) << "\n";
            }
        } else if (sc_large->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            auto [u, m] = normalize_pair(parse_poly(u_text, spec), parse_poly(m_text, spec));
            auto large = large_zsigmondy_primes(u, m);
            if (json) {
                ojson doc;
                doc["q"] = spec->q();
                doc["u"] = to_string(u);
                doc["m"] = to_string(m);
                ojson list = ojson::array();
                for (const auto& [p, reason] : large) {
                    ojson entry;
                    entry["prime"] = to_string(p);
                    entry["reason"] = to_string(reason);
                    list.push_back(entry);
                }
                doc["large"] = list;
                buf << doc.dump(2) << "\n";
            } else if (large.empty()) {
                buf << "(none)\n";
            } else {
                for (const auto& [p, reason] : large) {
                    buf << to_string(p) << " (" << to_string(reason) << ")\n";
                }
            }
        } else if (sc_classify->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            ZsigmondyReport report = classify(parse_poly(u_text, spec), parse_poly(m_text, spec));
            if (json) {
                buf << to_json(report).dump(2) << "\n";
            } else {
                print_report_text(buf, report);
            }
        } else if (sc_verify->parsed()) {
            FieldSpecPtr spec = resolve_field(true);
            SearchBounds bounds{spec->q(), max_deg_m, max_deg_u};
            ExceptionReport report = verify_kind == "bang" ? verify_bang_zsigmondy(bounds, workers)
                                                           : verify_feit(bounds, workers);
            if (json) {
                buf << to_json(report).dump(2) << "\n";
            } else {
                print_verify_text(buf, report);
            }
            rc = report.match ? 0 : 3;
        } else if (sc_table->parsed()) {
            std::vector<TableRow> rows = reproduce_table(table_which);
            unsigned table_q = rows.front().prime.field()->q();
            FieldSpecPtr given = resolve_field(false);
            if (given && given->q() != table_q) {
                throw DomainError("table " + std::to_string(table_which) + " is stated for q = " +
                                  std::to_string(table_q));
            }
            if (json) {
                buf << table_json(rows, table_which, table_q).dump(2) << "\n";
            } else {
                print_table_text(buf, rows);
            }
        } else if (sc_xset->parsed()) {
            XSet set = xset_from_name(xset_name);
            FieldSpecPtr given = resolve_field(false);
            unsigned q = 0;
            if (given) {
                q = given->q();
            } else {
                q = xset_fixed_q(set);
                if (q == 0) {
                    throw ParseError("xset " + to_string(set) +
                                     " needs a field: pass --q (the set is defined for every q > 2)");
                }
            }
            auto pairs = exceptional_set(set, q, max_s);
            if (json) {
                buf << xset_json(set, q, pairs).dump(2) << "\n";
            } else {
                for (const auto& pr : pairs) {
                    buf << "u=" << to_string(pr.first) << " m=" << to_string(pr.second) << "\n";
                }
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open output file: " << out_path << "\n";
            return 1;
        }
        file << buf.str();
        file.flush();
        if (!file) {
            err << "error: cannot write output file: " << out_path << "\n";
            return 1;
        }
    } else {
        out << buf.str();
    }
    return rc;
}

} // namespace carlitz
