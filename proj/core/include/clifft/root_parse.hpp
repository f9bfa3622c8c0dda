#pragma once
// Tiny parser for multivector expressions over the generators e1..e9, used by
// the CLI to specify transform roots: "e12", "0.6e1+0.8e2", "1+e1", "-e2".
//
// Grammar: expr := [sign] term ((‘+’|‘-’) term)*
//          term := number [blade] | blade
//          blade := ‘e’ digit+          (each digit a generator index 1..m)
// Coefficients are plain decimals — no exponent notation, since ‘e’ always
// starts a blade factor. A digit run like "e12" means the product e1*e2, so
// "e21" is -e12 and repeated digits contract (e11 = -1).

#include <string>
#include <vector>

#include "clifft/algebra.hpp"

namespace clifft {

/// Parse an expression into a multivector over m generators.
/// Throws std::invalid_argument with a position diagnostic on malformed input.
Multivector parse_multivector(const std::string& expr, int m);

/// Parse and validate a root expression (must square to -1).
RootOfMinusOne parse_root(const std::string& expr, int m);

/// Parse a comma-separated list of root expressions.
std::vector<RootOfMinusOne> parse_root_list(const std::string& list, int m);

}  // namespace clifft
