#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace feynman::cli {

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 success, 1 computation or input-file error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluates an expression such as "6*zeta(3)", "zeta(3,5) - pi^2/6" or
/// "log2 + 1/3". Throws std::invalid_argument on a syntax error.
double evaluate_expression(const std::string& text);

}  // namespace feynman::cli
