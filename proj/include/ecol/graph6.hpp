#ifndef ECOL_GRAPH6_HPP
#define ECOL_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecol/graph.hpp"

namespace ecol {

/// Largest order representable by the 1- and 4-byte graph6 size headers.
inline constexpr int kGraph6MaxOrder = 258047;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record. A trailing "\n" or "\r\n" and a leading
/// ">>graph6<<" header are accepted; anything else outside the record is an
/// error. Nonzero padding bits are rejected so that decoding is injective.
Graph parse_graph6(std::string_view text);

/// Throws std::invalid_argument if g.order() > kGraph6MaxOrder.
std::string encode_graph6(const Graph& g);

}  // namespace ecol

#endif  // ECOL_GRAPH6_HPP
