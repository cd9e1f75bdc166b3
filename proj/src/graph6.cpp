#include "ergraph/graph6.hpp"

#include <cstddef>

namespace ergraph {

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int filled = 0;
  int value = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      value = value << 1 | (g.row(row) >> col & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        filled = 0;
        value = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == 126)
    throw graph_size_error("graph6: multi-byte sizes (n > 62) are not supported");
  if (head < 63 || head > 125) throw std::invalid_argument("graph6: bad size byte");
  const int n = head - 63;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = (bits + 5) / 6;
  if (line.size() - 1 != want)
    throw std::invalid_argument("graph6: expected " + std::to_string(want) +
                                " data bytes, got " + std::to_string(line.size() - 1));

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  int row = 0;
  int col = 1;
  for (std::size_t k = 0; k < want; ++k) {
    const unsigned char byte = static_cast<unsigned char>(line[k + 1]);
    if (byte < 63 || byte > 126) throw std::invalid_argument("graph6: data byte out of range");
    const int value = byte - 63;
    for (int b = 5; b >= 0; --b, ++pos) {
      const int bit = value >> b & 1;
      if (pos >= bits) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if (bit) {
        rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
        rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
      }
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace ergraph
