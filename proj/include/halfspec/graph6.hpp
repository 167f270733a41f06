#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "halfspec/graph.hpp"

namespace halfspec {

class Graph6Error : public std::invalid_argument {
 public:
  explicit Graph6Error(const std::string& what) : std::invalid_argument(what) {}
};

/// Standard header-less graph6: N(n) followed by the upper triangle in
/// column-major order, 6 bits per byte offset by 63. Orders up to 62 use the
/// one-byte length; 63 and 64 use '~' plus three bytes.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

}  // namespace halfspec
