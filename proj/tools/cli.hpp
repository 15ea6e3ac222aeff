#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace eisen::cli {

std::vector<std::string> split(const std::string& s, char sep = ',');
std::complex<double> parse_complex(const std::string& s);
std::string format_complex(std::complex<double> z);

// runs the named suite, one line per check; returns the number of failures
int run_paper_suite(std::ostream& out);
int run_property_suite(std::ostream& out);

}  // namespace eisen::cli
