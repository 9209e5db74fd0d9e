#include "carlitz/json_out.hpp"

namespace carlitz {

namespace {

ojson poly_list(const std::vector<Poly>& polys) {
    ojson arr = ojson::array();
    for (const Poly& p : polys) arr.push_back(to_string(p));
    return arr;
}

ojson large_list(const std::vector<std::pair<Poly, LargeReason>>& large) {
    ojson arr = ojson::array();
    for (const auto& [prime, reason] : large) {
        ojson item;
        item["prime"] = to_string(prime);
        item["reason"] = to_string(reason);
        arr.push_back(std::move(item));
    }
    return arr;
}

ojson pair_list(const std::vector<std::pair<Poly, Poly>>& pairs) {
    ojson arr = ojson::array();
    for (const auto& [u, m] : pairs) {
        ojson item;
        item["u"] = to_string(u);
        item["m"] = to_string(m);
        arr.push_back(std::move(item));
    }
    return arr;
}

} // namespace

ojson to_json(const Factorization& f) {
    ojson out;
    out["unit"] = to_string(f.unit);
    ojson factors = ojson::array();
    for (const auto& [prime, exp] : f.factors) {
        factors.push_back(ojson::array({to_string(prime), exp}));
    }
    out["factors"] = std::move(factors);
    return out;
}

ojson to_json(const ZsigmondyReport& r) {
    ojson out;
    out["q"] = r.q;
    out["u"] = to_string(r.u);
    out["m"] = to_string(r.m);
    if (r.psi_value) out["psi_value"] = to_string(*r.psi_value);
    out["zsigmondy_primes"] = poly_list(r.zsigmondy);
    out["large"] = large_list(r.large);
    ojson nz = ojson::array();
    for (const auto& f : r.non_zsigmondy) {
        ojson item;
        item["prime"] = to_string(f.prime);
        item["annihilator"] = to_string(f.annihilator);
        item["s"] = f.s;
        nz.push_back(std::move(item));
    }
    out["non_zsigmondy_factors"] = std::move(nz);
    if (r.m_plus_one_prime.has_value()) out["m_plus_one_prime"] = *r.m_plus_one_prime;
    if (r.unique_zsigmondy_is_m_plus_one.has_value()) {
        out["unique_zsigmondy_is_m_plus_one"] = *r.unique_zsigmondy_is_m_plus_one;
    }
    return out;
}

ojson to_json(const ExceptionReport& r) {
    ojson out;
    out["theorem"] = r.theorem;
    out["q"] = r.bounds.q;
    ojson bounds;
    bounds["max_deg_m"] = r.bounds.max_deg_m;
    bounds["max_deg_u"] = r.bounds.max_deg_u;
    out["bounds"] = std::move(bounds);
    ojson ex = ojson::array();
    for (const auto& e : r.exceptions) {
        ojson item;
        item["u"] = to_string(e.u);
        item["m"] = to_string(e.m);
        item["zsigmondy"] = poly_list(e.zsigmondy);
        item["large"] = large_list(e.large);
        ex.push_back(std::move(item));
    }
    out["exceptions"] = std::move(ex);
    out["expected"] = pair_list(r.expected);
    out["match"] = r.match;
    return out;
}

ojson table_json(const std::vector<TableRow>& rows, int which, unsigned q) {
    ojson out;
    out["table"] = which;
    out["q"] = q;
    ojson arr = ojson::array();
    for (const auto& row : rows) {
        ojson item;
        item["prime"] = to_string(row.prime);
        item["m"] = to_string(row.m);
        item["carlitz_value"] = to_json(row.carlitz_value);
        item["witness_p_minus_1"] = to_string(row.witness_p_minus_1);
        item["witness_p"] = to_string(row.witness_p);
        arr.push_back(std::move(item));
    }
    out["rows"] = std::move(arr);
    return out;
}

ojson xset_json(XSet set, unsigned q, const std::vector<std::pair<Poly, Poly>>& pairs) {
    ojson out;
    out["set"] = to_string(set);
    out["q"] = q;
    ojson arr = ojson::array();
    for (const auto& [u, m] : pairs) {
        arr.push_back(ojson::array({to_string(u), to_string(m)}));
    }
    out["pairs"] = std::move(arr);
    return out;
}

} // namespace carlitz
