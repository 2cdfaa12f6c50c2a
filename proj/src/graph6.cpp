#include "ecol/graph6.hpp"

#include <vector>

namespace ecol {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxByte = 126;

bool printable(unsigned char c) { return c >= kBias && c <= kMaxByte; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(base, "empty record");

  auto byte_at = [&](std::size_t i) {
    if (i >= text.size()) throw ParseError(base + i, "truncated record");
    auto c = static_cast<unsigned char>(text[i]);
    if (!printable(c)) throw ParseError(base + i, "byte " + std::to_string(c) + " outside 63..126");
    return static_cast<unsigned>(c - kBias);
  };

  for (std::size_t i = 0; i < text.size(); ++i) byte_at(i);

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == kMaxByte) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte)
      throw ParseError(base + 1, "8-byte size header not supported");
    n = (static_cast<long>(byte_at(1)) << 12) | (static_cast<long>(byte_at(2)) << 6) | byte_at(3);
    if (n < 63) throw ParseError(base, "extended size header encodes n < 63");
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() < pos + groups)
    throw ParseError(base + text.size(), "truncated bit section: expected " + std::to_string(groups) +
                                             " bytes, found " + std::to_string(text.size() - pos));
  if (text.size() > pos + groups) throw ParseError(base + pos + groups, "trailing data after record");

  std::vector<Edge> edges;
  std::size_t k = 0;
  unsigned word = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) word = byte_at(pos + k / 6);
      if (word & (1u << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  for (; k % 6 != 0; ++k)
    if (word & (1u << (5 - k % 6))) throw ParseError(base + pos + k / 6, "nonzero padding bit");

  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6 supports n <= 258047, got " + std::to_string(n));
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // Column-major upper triangle: bit index of (i, j), i < j.
    std::size_t k = static_cast<std::size_t>(e.v) * static_cast<std::size_t>(e.v - 1) / 2 + static_cast<std::size_t>(e.u);
    packed[k / 6] = static_cast<unsigned char>(packed[k / 6] | (1u << (5 - k % 6)));
  }
  for (unsigned char c : packed) out.push_back(static_cast<char>(c + kBias));
  return out;
}

}  // namespace ecol
