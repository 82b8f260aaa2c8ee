#include "ncv/graph6.hpp"

#include <string>
#include <vector>

#include "ncv/errors.hpp"

namespace ncv {

namespace {
constexpr int kOffset = 63;  // printable range 63..126
constexpr int kHeaderMax = 62;
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw FormatError("graph6: empty line");
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == 126) throw FormatError("graph6: long-form header (n > 62) not supported");
  if (head < kOffset || head > kOffset + kHeaderMax)
    throw FormatError("graph6: malformed header byte");
  const int n = head - kOffset;
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long body = (bits + 5) / 6;
  if (static_cast<long>(line.size()) - 1 != body)
    throw FormatError("graph6: body length mismatch (expected " + std::to_string(body) +
                      " characters for n=" + std::to_string(n) + ")");

  // Upper-triangle bits packed column by column: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<Edge> edges;
  long bit = 0;
  int i = 0, j = 1;
  for (long c = 0; c < body; ++c) {
    const unsigned char raw =
        static_cast<unsigned char>(line[static_cast<std::size_t>(c) + 1]);
    if (raw < kOffset || raw > 126) throw FormatError("graph6: byte out of range");
    const int group = raw - kOffset;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1;
      if (bit >= bits) {
        if (set) throw FormatError("graph6: nonzero padding bits");
        continue;
      }
      if (set) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kHeaderMax)
    throw FormatError("graph6: cannot encode more than 62 vertices in short form");
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

}  // namespace ncv
