#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skat::cli {

/// One entry of the measure-selection mini-grammar:
///   "X1,X2:Y1|Z"  -> I(set X : set Y | set Z)
///   "X:Y"         -> I(X:Y)
///   "A,B"         -> H(A,B)
struct MeasureExpr {
    enum class Kind { entropy, mutual_information, conditional_mutual_information };
    Kind kind = Kind::entropy;
    std::vector<std::string> x, y, z;
    std::string text;
};

MeasureExpr parse_measure_expr(std::string_view text);

/// Runs the command line given argv minus the program name.
/// Exit codes: 0 success, 1 usage error, 2 validation error, 3 budget
/// exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace skat::cli
