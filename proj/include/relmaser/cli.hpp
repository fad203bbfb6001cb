// Command-line front end. Subcommands:
//   occupation   occupation-number table over scalar or swept inputs
//   performance  steady-state observables of one configuration
//   figure       canonical datasets (fig2..fig5d) as CSV + run manifest
//
// Parameter precedence: flags > --config JSON > built-in defaults.
// Exit codes: 0 success, 2 usage, 3 domain/validation, 4 numerical failure.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relmaser::cli {

// Malformed flag values (bad sweep syntax and the like).
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// "1.5" -> {1.5}; "a,b,c" -> the listed values; "lo:hi:step" -> inclusive sweep.
std::vector<double> parse_value_list(const std::string& text);

// "lo:hi" -> {lo, hi}.
std::pair<double, double> parse_range(const std::string& text);

int run(int argc, const char* const* argv);

}  // namespace relmaser::cli
