#ifndef PPAR_REPORT_HPP
#define PPAR_REPORT_HPP

#include <string>

#include "json.hpp"

#include "ppar/congruence.hpp"
#include "ppar/cusp.hpp"

namespace ppar {

// Rationals serialize as "p/q"; big integers as decimal strings.
nlohmann::json to_json(const BoundReport &r);
nlohmann::json to_json(const SturmReport &r);
nlohmann::json to_json(const HeckeCheck &h);
nlohmann::json to_json(const LegacyBound &b, std::uint64_t t, std::uint64_t r);

inline constexpr const char *bound_report_csv_header = "t,delta,m_min,theorem_bound,legacy_bound,verdict,search_ceiling";
std::string to_csv_row(const BoundReport &r);

} // namespace ppar

#endif
