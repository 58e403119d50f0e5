#ifndef ISOCENSUS_REPORT_IO_HPP
#define ISOCENSUS_REPORT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "isocensus/census.hpp"

namespace isocensus {

inline constexpr int report_schema_version = 1;

inline constexpr char const * csv_header =
    "q,n,ell,m,count,type1,type2,N0,N1,N2,predicted,exponent_num,exponent_den,verdict";

nlohmann::json to_json(census_report const & r);
census_report report_from_json(nlohmann::json const & j);

nlohmann::json to_json(verdict_record const & v);
nlohmann::json to_json(exponent_value const & e);
nlohmann::json to_json(rational const & r);

/* canonical text: sorted keys, compact, trailing newline */
std::string canonical_dump(nlohmann::json const & j);

std::string emit_json(std::vector<census_report> const & reports);
std::string emit_csv(std::vector<census_report> const & reports);

/* accepts one report object or an array of them */
std::vector<census_report> parse_reports(std::string const & text);

std::string read_file(std::string const & path);
void write_file(std::string const & path, std::string const & data);

} // namespace isocensus

#endif
