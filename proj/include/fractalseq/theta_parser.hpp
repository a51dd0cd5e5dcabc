#pragma once

#include <string_view>

#include "fractalseq/exact_number.hpp"

namespace fractalseq {

/// Parses a theta expression into an exact number.
///
/// Accepted forms include plain integers ("5"), rationals ("1/7"), and
/// quadratic irrationals such as "sqrt(13)", "(1+sqrt(5))/2" or
/// "(3-2*sqrt(2))/7". The grammar is ordinary arithmetic (+ - * / and
/// parentheses) over integers and sqrt(...) of a non-negative rational, as
/// long as at most one square-free radicand appears.
///
/// Throws DomainError on malformed input or a non-positive value.
ExactNumber parse_theta(std::string_view text);

}  // namespace fractalseq
