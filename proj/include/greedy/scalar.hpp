#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace greedy {

/// Exact rational number. Every coordinate and every predicate value in the
/// library is one of these; nothing is ever rounded.
using Scalar = mpq_class;

/// Parses "12", "-3", "1.25", "-0.5", "5/4" or "-7/3" exactly.
/// Throws Error(ErrorCode::ParseError) on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "3", "-5/4". parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }

double to_double(const Scalar& value);

}  // namespace greedy
