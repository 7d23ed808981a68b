#include "mhc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unistd.h>

#include "mhc/canonical.hpp"
#include "mhc/graph6.hpp"
#include "mhc/minimality.hpp"
#include "mhc/solver.hpp"

namespace mhc {

CanonicalSet::CanonicalSet(std::size_t max_in_memory)
    : max_in_memory_(std::max<std::size_t>(max_in_memory, 1)) {}

CanonicalSet::~CanonicalSet() {
  if (spilled_) std::remove(spill_path_.c_str());
}

void CanonicalSet::spill() {
  if (!spilled_) {
    char name[] = "/tmp/mhc-canonical-XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0) throw std::runtime_error("cannot create spill file");
    close(fd);
    spill_path_ = name;
    spilled_ = true;
  }
  std::ofstream out(spill_path_, std::ios::app);
  for (const auto& s : live_) out << s << '\n';
  out << '\x01' << '\n';  // chunk separator
  ++chunks_;
  live_.clear();
}

bool CanonicalSet::insert(const std::string& s) {
  bool fresh = live_.insert(s).second;
  if (live_.size() >= max_in_memory_) spill();
  return fresh;
}

std::size_t CanonicalSet::size() {
  if (!spilled_) return live_.size();
  // k-way merge over the sorted chunks plus the live set.
  std::vector<std::vector<std::string>> chunks;
  {
    std::ifstream in(spill_path_);
    std::vector<std::string> cur;
    std::string line;
    while (std::getline(in, line)) {
      if (line == "\x01") {
        chunks.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(line);
      }
    }
  }
  chunks.emplace_back(live_.begin(), live_.end());
  std::vector<std::size_t> pos(chunks.size(), 0);
  std::size_t count = 0;
  std::string last;
  bool have_last = false;
  while (true) {
    const std::string* best = nullptr;
    for (std::size_t c = 0; c < chunks.size(); ++c)
      if (pos[c] < chunks[c].size() &&
          (!best || chunks[c][pos[c]] < *best))
        best = &chunks[c][pos[c]];
    if (!best) break;
    if (!have_last || *best != last) {
      ++count;
      last = *best;
      have_last = true;
    }
    for (std::size_t c = 0; c < chunks.size(); ++c)
      if (pos[c] < chunks[c].size() && chunks[c][pos[c]] == last) ++pos[c];
  }
  return count;
}

std::vector<Graph> enumerate_classes(int n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw std::invalid_argument("native enumeration supports 1 <= n <= " +
                                std::to_string(kEnumerateMaxOrder));
  std::vector<Graph> level{Graph::empty(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        std::vector<Edge> es = base.edges();
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1) es.emplace_back(v, m - 1);
        seen.insert(canonical_form(Graph::from_edges(m, es)));
      }
    }
    level.clear();
    for (const auto& canon : seen) level.push_back(parse_graph6(canon));
  }
  return level;
}

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_classes(n)) {
    if (filter.min_degree > 0 &&
        degree_profile(g).min_degree < filter.min_degree)
      continue;
    if (filter.three_connected &&
        (n < 4 || vertex_connectivity_capped(g, 3) < 3))
      continue;
    out.push_back(std::move(g));
  }
  return out;
}

void stream_graph6(std::istream& in, const StreamOptions& opts,
                   const std::function<void(Graph&&, long)>& on_graph,
                   const std::function<void(const StreamError&)>& on_error) {
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    try {
      on_graph(parse_graph6(line), line_number);
    } catch (const Graph6Error& e) {
      StreamError err{line_number, e.what()};
      if (opts.strict)
        throw Graph6Error("line " + std::to_string(line_number) + ": " + e.what());
      if (on_error) on_error(err);
    }
  }
}

std::string survey_source_name(SurveySource s) {
  return s == SurveySource::NativeEnumeration ? "native" : "stream";
}

bool SurveyReport::operator==(const SurveyReport& o) const {
  // duration is informational, never part of report identity
  return n == o.n && source == o.source && graphs_scanned == o.graphs_scanned &&
         pass_min_degree == o.pass_min_degree &&
         pass_connectivity == o.pass_connectivity && pass_hc == o.pass_hc &&
         mhc_graphs == o.mhc_graphs &&
         max_degree_spectrum == o.max_degree_spectrum &&
         min_degree_spectrum == o.min_degree_spectrum &&
         wheel_unique_at_top == o.wheel_unique_at_top &&
         parse_errors == o.parse_errors;
}

bool is_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    bool rim_cycle = true;
    for (int v = 0; v < n && rim_cycle; ++v)
      if (v != hub && std::popcount(g.neighbors(v) & ~(std::uint64_t{1} << hub)) != 2)
        rim_cycle = false;
    if (rim_cycle && is_connected_within(g, g.full_mask() & ~(std::uint64_t{1} << hub)))
      return true;
  }
  return false;
}

namespace {

struct SurveyAccum {
  long scanned = 0;
  long pass_min_degree = 0;
  long pass_connectivity = 0;
  long pass_hc = 0;
  std::vector<std::string> mhc_graphs;
  std::set<int> max_spectrum;
  std::set<int> min_spectrum;
  long top_degree_hits = 0;   // MHC graphs with max degree n-1
  long top_degree_wheels = 0; // of those, wheels

  void merge(const SurveyAccum& o) {
    scanned += o.scanned;
    pass_min_degree += o.pass_min_degree;
    pass_connectivity += o.pass_connectivity;
    pass_hc += o.pass_hc;
    mhc_graphs.insert(mhc_graphs.end(), o.mhc_graphs.begin(), o.mhc_graphs.end());
    max_spectrum.insert(o.max_spectrum.begin(), o.max_spectrum.end());
    min_spectrum.insert(o.min_spectrum.begin(), o.min_spectrum.end());
    top_degree_hits += o.top_degree_hits;
    top_degree_wheels += o.top_degree_wheels;
  }
};

void survey_one(const Graph& g, SurveyAccum& acc) {
  ++acc.scanned;
  const int n = g.order();
  if (n < 4) return;
  auto profile = degree_profile(g);
  if (profile.min_degree < 3) return;
  ++acc.pass_min_degree;
  if (vertex_connectivity_capped(g, 3) < 3) return;
  ++acc.pass_connectivity;
  // Degree and connectivity are already established; skip re-pruning.
  if (!is_hamiltonian_connected(g, {.structural_pruning = false}).is_hc) return;
  ++acc.pass_hc;
  MinimalityOptions opts;
  opts.exhaustive_evidence = false;
  if (!is_minimally_hc(g, opts).is_minimal) return;
  acc.mhc_graphs.push_back(n <= kCanonicalMaxOrder ? canonical_form(g)
                                                   : emit_graph6(g));
  acc.max_spectrum.insert(profile.max_degree);
  acc.min_spectrum.insert(profile.min_degree);
  if (profile.max_degree == n - 1) {
    ++acc.top_degree_hits;
    if (is_wheel(g)) ++acc.top_degree_wheels;
  }
}

SurveyAccum survey_batch(const std::vector<Graph>& graphs, int workers) {
  SurveyAccum total;
  if (workers <= 1) {
    for (const Graph& g : graphs) survey_one(g, total);
    return total;
  }
  std::atomic<std::size_t> next{0};
  std::vector<SurveyAccum> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t idx = next.fetch_add(1); idx < graphs.size();
           idx = next.fetch_add(1))
        survey_one(graphs[idx], parts[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : parts) total.merge(part);
  return total;
}

SurveyReport finish_report(SurveyAccum acc, int n, SurveySource source,
                           long parse_errors,
                           std::chrono::steady_clock::time_point t0) {
  SurveyReport r;
  r.n = n;
  r.source = source;
  r.graphs_scanned = acc.scanned;
  r.pass_min_degree = acc.pass_min_degree;
  r.pass_connectivity = acc.pass_connectivity;
  r.pass_hc = acc.pass_hc;
  std::sort(acc.mhc_graphs.begin(), acc.mhc_graphs.end());
  r.mhc_graphs = std::move(acc.mhc_graphs);
  r.max_degree_spectrum = std::move(acc.max_spectrum);
  r.min_degree_spectrum = std::move(acc.min_spectrum);
  r.wheel_unique_at_top =
      acc.top_degree_hits == 1 && acc.top_degree_wheels == 1;
  r.parse_errors = parse_errors;
  r.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

SurveyReport survey_mhc(int n, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  auto classes = enumerate_classes(n);
  auto acc = survey_batch(classes, workers);
  return finish_report(std::move(acc), n, SurveySource::NativeEnumeration, 0, t0);
}

SurveyReport survey_stream(std::istream& in, const StreamOptions& opts,
                           int workers) {
  auto t0 = std::chrono::steady_clock::now();
  constexpr std::size_t kBatch = 8192;
  SurveyAccum total;
  long parse_errors = 0;
  int n = 0;
  std::vector<Graph> batch;
  batch.reserve(kBatch);
  auto flush = [&] {
    total.merge(survey_batch(batch, workers));
    batch.clear();
  };
  stream_graph6(
      in, opts,
      [&](Graph&& g, long) {
        n = std::max(n, g.order());
        batch.push_back(std::move(g));
        if (batch.size() >= kBatch) flush();
      },
      [&](const StreamError&) { ++parse_errors; });
  flush();
  return finish_report(std::move(total), n, SurveySource::ExternalStream,
                       parse_errors, t0);
}

namespace {

bool is_min_degree_4_mhc(const Graph& g) {
  if (g.order() < 4) return false;
  if (degree_profile(g).min_degree < 4) return false;
  MinimalityOptions opts;
  opts.exhaustive_evidence = false;
  return is_minimally_hc(g, opts).is_minimal;
}

}  // namespace

std::optional<Graph> hunt_min_degree_4(int n) {
  for (Graph& g : enumerate_classes(n))
    if (is_min_degree_4_mhc(g)) return std::move(g);
  return std::nullopt;
}

std::optional<Graph> hunt_min_degree_4_stream(std::istream& in,
                                              const StreamOptions& opts) {
  std::optional<Graph> found;
  stream_graph6(in, opts, [&](Graph&& g, long) {
    if (!found && is_min_degree_4_mhc(g)) found = std::move(g);
  });
  return found;
}

}  // namespace mhc
