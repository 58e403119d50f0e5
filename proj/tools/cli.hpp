#ifndef ISOCENSUS_CLI_HPP
#define ISOCENSUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "isocensus/error.hpp"

namespace isocensus::cli {

enum exit_status { exit_ok = 0, exit_validation = 2, exit_bound = 3, exit_io = 4 };

int exit_code(error_code c);

/* args excludes the program name */
int run(std::vector<std::string> args, std::ostream & out, std::ostream & err);

/* "key=value" lines, '#' comments; keys are long flag names */
std::vector<std::pair<std::string, std::string>> read_config(std::string const & path);

} // namespace isocensus::cli

#endif
