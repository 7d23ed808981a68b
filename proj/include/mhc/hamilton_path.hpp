#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhc/constructions.hpp"
#include "mhc/graph.hpp"

namespace mhc {

// Which of the dispatch tables produced a path: "1.1".."1.8" for CaseOdd,
// "2.1".."2.16" for CaseEven.
struct CaseId {
  Family family = Family::CaseOdd;
  int number = 0;
  std::string label() const {
    return std::to_string(family == Family::CaseOdd ? 1 : 2) + "." +
           std::to_string(number);
  }
  bool operator==(const CaseId&) const = default;
};

struct HamiltonPath {
  std::vector<int> vertices;
  int u = -1;
  int v = -1;
  std::optional<CaseId> case_id;
  bool verified = false;
};

// True iff vertices is a Hamilton (u,v)-path of g: starts at u, ends at v,
// visits every vertex exactly once, and walks only edges of g.
bool verify_path(const Graph& g, const HamiltonPath& p);

}  // namespace mhc
