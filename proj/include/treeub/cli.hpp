#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treeub/search.hpp"

namespace treeub::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kInvariantFailure = 2 };

// Runs the `treeub` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CSV `n,max_ub,witnesses`; the witness field is quoted and lists
// signatures separated by ';'.
std::string csv_header(bool with_all_trees);
std::string csv_row(const MaximizerRecord& record);
std::string csv_row(const DominanceReport& report);
std::string markdown_header(bool with_all_trees);
std::string markdown_row(const MaximizerRecord& record);
std::string markdown_row(const DominanceReport& report);

// Inverse of the witness field of csv_row (quotes optional).
std::vector<StarSignature> parse_witnesses(const std::string& field);

// Reals with 12 significant digits.
std::string format_real(double value);

}  // namespace treeub::cli
