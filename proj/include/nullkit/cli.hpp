#pragma once

// Text front end: the ideal file format and the command dispatcher behind
// the `nullkit` executable.
//
// Ideal file:
//   field GF(p) | field QQ
//   vars x1, x2, ...          (last listed is the greatest variable)
//   <generator>               (one per line; '#' starts a comment)

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nullkit/groebner.hpp"

namespace nullkit::cli {

Ideal parse_ideal(std::string_view text);
// An expression over the variables of `ring`.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);
// Inverse of parse_ideal for canonical output.
std::string render_ideal(const Ideal& ideal);

enum ExitCode : int { kOk = 0, kUsage = 2, kUnsupported = 3, kInternal = 4 };

int exit_code_for(const Error& e);

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nullkit::cli
