#pragma once

#include <string>

#include "seidel/seidel_matrix.hpp"

namespace seidel {

/// graph6-compatible record of the ambient graph: a header byte n+63
/// followed by the sign bits in 6-bit groups, each emitted as group+63.
/// Valid for 1 <= n <= 62.
std::string s6_encode(const SeidelMatrix& s);

/// Strict inverse of s6_encode; rejects truncated, overlong or
/// non-printable records and nonzero padding bits.
SeidelMatrix s6_decode(const std::string& record);

}  // namespace seidel
