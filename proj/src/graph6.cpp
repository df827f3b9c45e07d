#include "symdist/graph6.hpp"

#include <fstream>
#include <istream>

#include "symdist/errors.hpp"

namespace symdist {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw ParseError("graph6 byte " + std::to_string(static_cast<unsigned char>(c)) +
                     " outside 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line");

  std::size_t pos = 0;
  int n = 0;
  if (line[0] == '~') {
    if (line.size() < 2 || line[1] == '~') throw ParseError("graph6 orders above 258047 unsupported");
    if (line.size() < 4) throw ParseError("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(line[i]);
    if (n < 63) throw ParseError("non-minimal graph6 size field");
    pos = 4;
  } else {
    n = decode_byte(line[0]);
    pos = 1;
  }
  if (n > kMaxVertices) throw InvalidGraph("graph6 order " + std::to_string(n) + " exceeds 64");

  const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (pair_count + 5) / 6;
  if (line.size() - pos != byte_count) {
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                     std::to_string(byte_count));
  }
  std::vector<VertexSet> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(line[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  if (pair_count % 6 != 0) {
    const int last = decode_byte(line.back());
    const int pad = static_cast<int>(6 - pair_count % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6 padding bits are not zero");
  } else if (byte_count > 0) {
    decode_byte(line.back());
  }
  return Graph(n, std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph6 file " + path);
  return read_graph6_stream(in);
}

}  // namespace symdist
