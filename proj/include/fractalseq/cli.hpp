#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractalseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Files named "-" or
/// omitted read from `in`.
///
///   generate --theta EXPR --count N [--ranks] [--json|--bfile]
///   trim (--upper|--lower) [FILE]
///   check [FILE]
///   construct --n K [--blocks B] [--branches BITS] [--type2] [--length L]
///             [--enumerate] [--trace]
///   invert [FILE] [--expect-nonempty] [--witness]
///   diverge THETA1 THETA2 --max N
///
/// Returns 0 on success, 1 on a domain failure (e.g. a sequence that is not
/// doubly fractal, or EMPTY under --expect-nonempty), 2 on usage errors.
/// FRACTALSEQ_MAX_TERMS (default 1000000) caps any generated length.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fractalseq::cli
