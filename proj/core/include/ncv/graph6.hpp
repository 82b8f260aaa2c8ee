#pragma once

#include <string>
#include <string_view>

#include "ncv/graph.hpp"

namespace ncv {

/// Parses one graph6 line (short header form, n <= 62): n is chr(63+n),
/// then the upper triangle packed 6 bits per printable character, offset 63.
/// Throws FormatError on malformed header, length mismatch, characters out
/// of range, or nonzero trailing padding bits.
Graph parse_graph6(std::string_view line);

/// Companion encoder; parse_graph6(encode_graph6(g)) is bit-exact.
std::string encode_graph6(const Graph& g);

}  // namespace ncv
