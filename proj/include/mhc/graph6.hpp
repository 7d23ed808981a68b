#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mhc/graph.hpp"

namespace mhc {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 (McKay's format), one graph per line. A ">>graph6<<" prefix is
// tolerated and stripped; orders up to kMaxOrder use the long header form.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace mhc
