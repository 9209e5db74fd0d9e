#ifndef CARLITZ_JSON_OUT_HPP
#define CARLITZ_JSON_OUT_HPP

/// JSON projections of reports, tables, and exceptional sets.
///
/// Everything serializes through nlohmann's ordered_json, and every list is
/// canonically sorted before it gets here, so dumps are byte-stable across
/// runs and across worker counts.  Polynomials appear as canonical text.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "carlitz/verify.hpp"
#include "carlitz/zsigmondy.hpp"

namespace carlitz {

using ojson = nlohmann::ordered_json;

ojson to_json(const Factorization& f);
ojson to_json(const ZsigmondyReport& report);
ojson to_json(const ExceptionReport& report);
ojson table_json(const std::vector<TableRow>& rows, int which, unsigned q);
ojson xset_json(XSet set, unsigned q, const std::vector<std::pair<Poly, Poly>>& pairs);

} // namespace carlitz

#endif
