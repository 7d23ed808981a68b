#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

// Native isomorph-free enumeration bound; larger orders arrive as external
// graph6 streams.
inline constexpr int kEnumerateMaxOrder = 8;

// Dedup set for canonical strings. Keeps everything in memory up to
// max_in_memory, then spills sorted chunks to a temporary file; size() runs
// a merge over the spilled chunks plus the live set.
class CanonicalSet {
 public:
  explicit CanonicalSet(std::size_t max_in_memory = 1 << 22);
  ~CanonicalSet();
  CanonicalSet(const CanonicalSet&) = delete;
  CanonicalSet& operator=(const CanonicalSet&) = delete;

  // True if the string was new. A hit against spilled chunks is still
  // reported as new by insert and resolved by size(); callers that need
  // exact membership should stay under the memory bound.
  bool insert(const std::string& s);
  std::size_t size();
  bool spilled() const { return spilled_; }

 private:
  void spill();
  std::size_t max_in_memory_;
  std::set<std::string> live_;
  std::string spill_path_;
  bool spilled_ = false;
  std::size_t chunks_ = 0;
};

// One representative per isomorphism class on n vertices (unfiltered),
// sorted by canonical form. Built level by level: every class on m+1
// vertices extends some class on m vertices by one new vertex.
std::vector<Graph> enumerate_classes(int n);

struct EnumFilter {
  int min_degree = 0;
  bool three_connected = false;
};

// Isomorph-free representatives passing the filter.
std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter);

struct StreamOptions {
  bool strict = true;
};

struct StreamError {
  long line_number = 0;
  std::string message;
};

// Parses graph6 lines in input order; blank lines are skipped. In strict
// mode a malformed line throws with its line number; otherwise it is
// reported through on_error and the stream continues.
void stream_graph6(std::istream& in, const StreamOptions& opts,
                   const std::function<void(Graph&&, long)>& on_graph,
                   const std::function<void(const StreamError&)>& on_error = {});

enum class SurveySource { NativeEnumeration, ExternalStream };
std::string survey_source_name(SurveySource s);

struct SurveyReport {
  int n = 0;
  SurveySource source = SurveySource::NativeEnumeration;
  long graphs_scanned = 0;
  // Funnel statistics: survivors of each successive filter.
  long pass_min_degree = 0;
  long pass_connectivity = 0;
  long pass_hc = 0;
  std::vector<std::string> mhc_graphs;  // canonical graph6 when order allows
  std::set<int> max_degree_spectrum;
  std::set<int> min_degree_spectrum;
  bool wheel_unique_at_top = false;
  long parse_errors = 0;
  double duration_seconds = 0;

  bool operator==(const SurveyReport&) const;
};

// Exhaustive minimally-HC survey over the native enumeration at order n.
SurveyReport survey_mhc(int n, int workers = 1);

// Same pipeline over an external graph6 stream (assumed isomorph-free).
SurveyReport survey_stream(std::istream& in, const StreamOptions& opts,
                           int workers = 1);

// First graph in scan order that is minimally HC with min degree >= 4;
// would settle an open question, so callers treat a hit as a headline.
std::optional<Graph> hunt_min_degree_4(int n);
std::optional<Graph> hunt_min_degree_4_stream(std::istream& in,
                                              const StreamOptions& opts);

// Hub adjacent to all others, remainder a cycle; works at any order.
bool is_wheel(const Graph& g);

}  // namespace mhc
