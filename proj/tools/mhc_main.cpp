// mhc: construct the extremal families, check hamiltonian connectivity and
// minimality, verify the per-pair path formulas, and survey small orders.
//
// Output is line-oriented and stable: records mode prints one JSON object
// per line with fixed key order, so identical inputs give byte-identical
// output regardless of worker count.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhc/canonical.hpp"
#include "mhc/constructions.hpp"
#include "mhc/formulas.hpp"
#include "mhc/graph6.hpp"
#include "mhc/minimality.hpp"
#include "mhc/search.hpp"
#include "mhc/solver.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success/assert-pass, 1 assert-fail, 2 usage,
// 3 input parse, 4 capability bound exceeded.
enum ExitCode : int { kOk = 0, kAssertFail = 1, kUsage = 2, kParse = 3, kBound = 4 };

struct Failure {
  int code;
  std::string message;
};

int default_workers() {
  if (const char* env = std::getenv("MHC_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::vector<std::pair<mhc::Graph, long>> read_graphs(const std::string& input_path,
                                                     const std::string& input_format,
                                                     bool lenient, long& parse_errors) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input_path.empty() && input_path != "-") {
    file.open(input_path);
    if (!file) throw Failure{kParse, "cannot open " + input_path};
    in = &file;
  }
  std::vector<std::pair<mhc::Graph, long>> graphs;
  if (input_format == "edgelist") {
    std::stringstream buf;
    buf << in->rdbuf();
    try {
      graphs.emplace_back(mhc::parse_edge_list(buf.str()), 1);
    } catch (const mhc::Graph6Error& e) {
      throw Failure{kParse, e.what()};
    }
    return graphs;
  }
  try {
    mhc::stream_graph6(
        *in, {.strict = !lenient},
        [&](mhc::Graph&& g, long line) { graphs.emplace_back(std::move(g), line); },
        [&](const mhc::StreamError& err) {
          ++parse_errors;
          std::cerr << "parse error at line " << err.line_number << ": "
                    << err.message << "\n";
        });
  } catch (const mhc::Graph6Error& e) {
    throw Failure{kParse, e.what()};
  }
  return graphs;
}

std::string serialize_graph(const mhc::LabeledGraph& lg, const std::string& format) {
  if (format == "dot") return mhc::emit_dot(lg);
  if (format == "edgelist") return mhc::emit_edge_list(lg.graph());
  if (format == "graph6") return mhc::emit_graph6(lg.graph()) + "\n";
  if (format == "records") {
    json rec;
    rec["family"] = mhc::family_name(lg.family());
    rec["n"] = lg.params().n;
    rec["delta"] = lg.params().delta;
    rec["graph6"] = mhc::emit_graph6(lg.graph());
    rec["size"] = lg.graph().size();
    json roles = json::object();
    for (int v = 0; v < lg.graph().order(); ++v)
      roles[std::to_string(v)] = lg.role(v).name();
    rec["roles"] = roles;
    return rec.dump() + "\n";
  }
  throw Failure{kUsage, "unknown output format: " + format};
}

int parse_endpoint(const mhc::LabeledGraph& lg, const std::string& token) {
  int v = lg.find_vertex(token);
  if (v >= 0) return v;
  try {
    std::size_t used = 0;
    v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < lg.graph().order()) return v;
  } catch (...) {
  }
  throw Failure{kUsage, "unknown vertex \"" + token + "\""};
}

int run_construct(int n, int delta, const std::string& format,
                  const std::string& family_override, const std::string& drop_edge) {
  std::optional<mhc::LabeledGraph> lg;
  try {
    if (family_override == "wheel") lg = mhc::build_wheel(n);
    else if (family_override == "odd") lg = mhc::build_case_odd(n, delta);
    else if (family_override == "even") lg = mhc::build_case_even(n, delta);
    else lg = mhc::construct(n, delta);
  } catch (const mhc::InvalidParameters& e) {
    json rec;
    rec["error"] = "invalid_parameters";
    rec["n"] = n;
    rec["delta"] = delta;
    rec["reason"] = mhc::validity_reason_name(e.reason);
    std::cout << rec.dump() << "\n";
    std::cerr << e.what() << "\n";
    bool range_error = e.reason == mhc::ValidityReason::DeltaTooSmall ||
                       e.reason == mhc::ValidityReason::DeltaTooLarge;
    return range_error ? kUsage : kAssertFail;
  }
  if (!drop_edge.empty()) {
    auto comma = drop_edge.find(',');
    if (comma == std::string::npos)
      throw Failure{kUsage, "--drop-edge expects \"u,v\""};
    int u = parse_endpoint(*lg, drop_edge.substr(0, comma));
    int v = parse_endpoint(*lg, drop_edge.substr(comma + 1));
    if (!lg->graph().has_edge(u, v))
      throw Failure{kUsage, "--drop-edge: no such edge"};
    lg = lg->drop_edge(u, v);
  }
  std::cout << serialize_graph(*lg, format);
  return kOk;
}

json hc_record(const mhc::Graph& g, const mhc::HcResult& res) {
  json rec;
  rec["graph6"] = mhc::emit_graph6(g);
  rec["n"] = g.order();
  rec["is_hc"] = res.is_hc;
  rec["pruned_by"] =
      res.pruned_by ? json(mhc::prune_reason_name(*res.pruned_by)) : json(nullptr);
  rec["failing_pair"] = res.failing_pair
                            ? json{res.failing_pair->first, res.failing_pair->second}
                            : json(nullptr);
  rec["pairs_checked"] = res.pairs_checked;
  return rec;
}

json mhc_record(const mhc::Graph& g, const mhc::MhcVerdict& verdict, bool certificate) {
  json rec;
  rec["graph6"] = mhc::emit_graph6(g);
  rec["n"] = g.order();
  rec["is_hc"] = verdict.is_hc;
  rec["is_minimal"] = verdict.is_minimal;
  rec["fast_path_used"] = verdict.fast_path_used;
  json edges = json::array();
  for (const auto& ev : verdict.edge_evidence) {
    json e;
    e["edge"] = {ev.edge.first, ev.edge.second};
    e["reason"] = mhc::edge_reason_name(ev.reason);
    e["still_hc"] = ev.still_hc;
    if (certificate)
      e["refuting_pair"] = ev.refuting_pair
                               ? json{ev.refuting_pair->first, ev.refuting_pair->second}
                               : json(nullptr);
    edges.push_back(e);
  }
  rec["edges"] = edges;
  return rec;
}

int run_check(const std::string& mode, const std::string& input_path,
              const std::string& input_format, bool lenient, bool assert_mode,
              bool certificate, const std::string& format) {
  long parse_errors = 0;
  auto graphs = read_graphs(input_path, input_format, lenient, parse_errors);
  bool all_pass = true;
  for (auto& [g, line] : graphs) {
    try {
      if (mode == "hc") {
        auto res = mhc::is_hamiltonian_connected(g);
        all_pass = all_pass && res.is_hc;
        if (format == "records") {
          std::cout << hc_record(g, res).dump() << "\n";
        } else {
          std::cout << mhc::emit_graph6(g) << " hc=" << (res.is_hc ? "true" : "false");
          if (res.pruned_by)
            std::cout << " pruned_by=" << mhc::prune_reason_name(*res.pruned_by);
          std::cout << "\n";
        }
      } else if (mode == "mhc") {
        auto verdict = mhc::is_minimally_hc(g);
        all_pass = all_pass && verdict.is_minimal;
        if (format == "records") {
          std::cout << mhc_record(g, verdict, certificate).dump() << "\n";
        } else {
          std::cout << mhc::emit_graph6(g)
                    << " hc=" << (verdict.is_hc ? "true" : "false")
                    << " minimal=" << (verdict.is_minimal ? "true" : "false") << "\n";
        }
      } else {  // connectivity
        int kappa = mhc::vertex_connectivity(g);
        all_pass = all_pass && kappa >= 3;
        if (format == "records") {
          json rec;
          rec["graph6"] = mhc::emit_graph6(g);
          rec["n"] = g.order();
          rec["kappa"] = kappa;
          std::cout << rec.dump() << "\n";
        } else {
          std::cout << mhc::emit_graph6(g) << " kappa=" << kappa << "\n";
        }
      }
    } catch (const std::invalid_argument& e) {
      throw Failure{kBound, e.what()};
    }
  }
  if (parse_errors > 0 && !assert_mode) return kParse;
  if (assert_mode && (!all_pass || parse_errors > 0)) return kAssertFail;
  return kOk;
}

int run_verify_formulas(int n, int delta, int max_n, const std::string& format) {
  std::vector<std::pair<int, int>> params;
  if (n > 0) {
    params.emplace_back(n, delta);
  } else {
    for (auto [pn, pd] : mhc::valid_parameter_pairs(max_n))
      if (pd <= pn - 3) params.emplace_back(pn, pd);
  }
  long total = 0, verified = 0;
  for (auto [pn, pd] : params) {
    mhc::LabeledGraph lg = mhc::construct(pn, pd);
    if (lg.family() == mhc::Family::Wheel)
      throw Failure{kUsage, "formula tables cover the two bounded-degree families "
                            "only; delta = n-1 is the wheel"};
    auto report = mhc::verify_all_pairs(lg);
    total += static_cast<long>(report.pairs.size());
    verified += report.verified_count;
    for (const auto& pr : report.pairs) {
      if (format == "records") {
        json rec;
        rec["family"] = mhc::family_name(report.family);
        rec["n"] = report.n;
        rec["delta"] = report.delta;
        rec["case"] = pr.case_id.label();
        rec["u"] = lg.role(pr.u).name();
        rec["v"] = lg.role(pr.v).name();
        rec["verified"] = pr.verified && pr.anchors_in_order;
        std::cout << rec.dump() << "\n";
      } else if (!pr.verified || !pr.anchors_in_order) {
        std::cout << "FAIL n=" << report.n << " delta=" << report.delta << " case "
                  << pr.case_id.label() << " pair (" << lg.role(pr.u).name() << ","
                  << lg.role(pr.v).name() << ")\n";
      }
    }
  }
  json summary;
  summary["type"] = "summary";
  summary["parameter_sets"] = params.size();
  summary["pairs"] = total;
  summary["verified"] = verified;
  summary["failures"] = total - verified;
  if (format == "records")
    std::cout << summary.dump() << "\n";
  else
    std::cout << "pairs=" << total << " verified=" << verified
              << " failures=" << (total - verified) << "\n";
  return verified == total ? kOk : kAssertFail;
}

json survey_records(const mhc::SurveyReport& r) {
  json rec;
  rec["type"] = "summary";
  rec["n"] = r.n;
  rec["source"] = mhc::survey_source_name(r.source);
  rec["graphs_scanned"] = r.graphs_scanned;
  rec["pass_min_degree"] = r.pass_min_degree;
  rec["pass_connectivity"] = r.pass_connectivity;
  rec["pass_hc"] = r.pass_hc;
  rec["mhc_count"] = r.mhc_graphs.size();
  rec["max_degree_spectrum"] = r.max_degree_spectrum;
  rec["min_degree_spectrum"] = r.min_degree_spectrum;
  rec["wheel_unique_at_top"] = r.wheel_unique_at_top;
  rec["parse_errors"] = r.parse_errors;
  return rec;
}

std::set<int> parse_int_set(const std::string& csv) {
  std::set<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.insert(std::stoi(tok));
  }
  return out;
}

int run_search(int n, bool use_stdin, const std::string& input_path, bool lenient,
               int workers, const std::string& expect_max, const std::string& expect_min,
               bool csv, bool hunt, const std::string& format) {
  mhc::SurveyReport report;
  std::optional<mhc::Graph> hunted;
  if (use_stdin || !input_path.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input_path.empty()) {
      file.open(input_path);
      if (!file) throw Failure{kParse, "cannot open " + input_path};
      in = &file;
    }
    try {
      if (hunt) {
        hunted = mhc::hunt_min_degree_4_stream(*in, {.strict = !lenient});
      } else {
        report = mhc::survey_stream(*in, {.strict = !lenient}, workers);
      }
    } catch (const mhc::Graph6Error& e) {
      throw Failure{kParse, e.what()};
    }
  } else {
    if (n < 4 || n > mhc::kEnumerateMaxOrder)
      throw Failure{kUsage, "native enumeration covers 4 <= n <= " +
                                std::to_string(mhc::kEnumerateMaxOrder) +
                                "; larger orders need --stdin-graph6 or --input"};
    if (hunt) {
      hunted = mhc::hunt_min_degree_4(n);
    } else {
      report = mhc::survey_mhc(n, workers);
    }
  }

  if (hunt) {
    json rec;
    rec["type"] = "hunt_min_degree_4";
    rec["found"] = hunted.has_value();
    if (hunted) rec["graph6"] = mhc::emit_graph6(*hunted);
    std::cout << rec.dump() << "\n";
    return kOk;
  }

  for (const auto& canon : report.mhc_graphs) {
    mhc::Graph g = mhc::parse_graph6(canon);
    auto profile = mhc::degree_profile(g);
    if (format == "records" && !csv) {
      json rec;
      rec["type"] = "mhc_graph";
      rec["graph6"] = canon;
      rec["max_degree"] = profile.max_degree;
      rec["min_degree"] = profile.min_degree;
      rec["size"] = g.size();
      std::cout << rec.dump() << "\n";
    } else if (!csv) {
      std::cout << canon << " max_degree=" << profile.max_degree
                << " min_degree=" << profile.min_degree << " size=" << g.size()
                << "\n";
    }
  }
  if (csv) {
    auto join = [](const std::set<int>& s) {
      std::string out;
      for (int x : s) out += (out.empty() ? "" : ";") + std::to_string(x);
      return out;
    };
    std::cout << "n,graphs_scanned,pass_min_degree,pass_connectivity,pass_hc,"
                 "mhc_count,max_degree_spectrum,min_degree_spectrum,"
                 "wheel_unique_at_top\n";
    std::cout << report.n << ',' << report.graphs_scanned << ','
              << report.pass_min_degree << ',' << report.pass_connectivity << ','
              << report.pass_hc << ',' << report.mhc_graphs.size() << ','
              << join(report.max_degree_spectrum) << ','
              << join(report.min_degree_spectrum) << ','
              << (report.wheel_unique_at_top ? "true" : "false") << "\n";
  } else {
    std::cout << survey_records(report).dump() << "\n";
  }

  bool expectations_met = true;
  if (!expect_max.empty())
    expectations_met =
        expectations_met && report.max_degree_spectrum == parse_int_set(expect_max);
  if (!expect_min.empty())
    expectations_met =
        expectations_met && report.min_degree_spectrum == parse_int_set(expect_min);
  return expectations_met ? kOk : kAssertFail;
}

int run_stats(const std::string& input_path, const std::string& input_format,
              bool lenient) {
  long parse_errors = 0;
  auto graphs = read_graphs(input_path, input_format, lenient, parse_errors);
  for (auto& [g, line] : graphs) {
    auto profile = mhc::degree_profile(g);
    json rec;
    rec["graph6"] = mhc::emit_graph6(g);
    rec["n"] = g.order();
    rec["m"] = g.size();
    rec["min_degree"] = profile.min_degree;
    rec["max_degree"] = profile.max_degree;
    rec["degrees"] = profile.degrees;
    rec["connected"] = mhc::is_connected(g);
    try {
      rec["kappa"] = mhc::vertex_connectivity(g);
    } catch (const std::invalid_argument&) {
      rec["kappa"] = nullptr;
    }
    std::cout << rec.dump() << "\n";
  }
  return parse_errors > 0 ? kParse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for minimally hamiltonian-connected graphs"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a minimally HC graph");
  int c_n = 0, c_delta = 0;
  std::string c_format = "graph6", c_family, c_drop;
  construct->add_option("n", c_n, "order")->required();
  construct->add_option("delta", c_delta, "maximum degree")->required();
  construct->add_option("--format", c_format, "graph6|dot|edgelist|records");
  construct->add_flag_callback("--dot", [&c_format] { c_format = "dot"; });
  construct->add_flag_callback("--graph6", [&c_format] { c_format = "graph6"; });
  construct->add_flag_callback("--edgelist", [&c_format] { c_format = "edgelist"; });
  construct->add_flag_callback("--records", [&c_format] { c_format = "records"; });
  construct->add_option("--family", c_family, "wheel|odd|even (bypass dispatch)")
      ->check(CLI::IsMember({"wheel", "odd", "even"}));
  construct->add_option("--drop-edge", c_drop,
                        "remove an edge by role names or indices, e.g. x,z1");

  auto* check = app.add_subcommand("check", "decide properties of input graphs");
  bool m_hc = false, m_mhc = false, m_conn = false;
  bool assert_mode = false, certificate = false, lenient = false;
  std::string in_path, in_format = "graph6", out_format = "records";
  check->add_flag("--hc", m_hc, "hamiltonian connectivity");
  check->add_flag("--mhc", m_mhc, "minimal hamiltonian connectivity");
  check->add_flag("--connectivity", m_conn, "exact vertex connectivity");
  check->add_option("--input", in_path, "input file (default stdin)");
  check->add_option("--input-format", in_format, "graph6|edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  check->add_flag("--assert", assert_mode, "exit 1 unless every graph passes");
  check->add_flag("--certificate", certificate, "include refuting pairs");
  check->add_flag("--lenient", lenient, "skip malformed lines instead of aborting");
  check->add_option("--format", out_format, "records|text")
      ->check(CLI::IsMember({"records", "text"}));

  auto* verify = app.add_subcommand("verify-formulas",
                                    "emit and verify the per-pair path templates");
  int v_n = 0, v_delta = 0, v_max_n = 14;
  std::string v_format = "text";
  verify->add_option("n", v_n, "order (default: sweep all valid parameters)");
  verify->add_option("delta", v_delta, "maximum degree");
  verify->add_option("--max-n", v_max_n, "sweep bound when no (n, delta) given");
  verify->add_option("--format", v_format, "records|text")
      ->check(CLI::IsMember({"records", "text"}));

  auto* search = app.add_subcommand("search", "exhaustive minimally-HC survey");
  int s_n = 0, workers = default_workers();
  bool use_stdin = false, csv = false, hunt = false, s_lenient = false;
  std::string s_input, expect_max, expect_min, s_format = "records";
  search->add_option("n", s_n, "order for native enumeration");
  search->add_flag("--stdin-graph6", use_stdin, "read graph6 lines from stdin");
  search->add_option("--input", s_input, "read graph6 lines from a file");
  search->add_option("--workers", workers, "worker thread count");
  search->add_option("--expect-max-degrees", expect_max,
                     "assert the max-degree spectrum equals this set, e.g. 3,5");
  search->add_option("--expect-min-degrees", expect_min,
                     "assert the min-degree spectrum equals this set");
  search->add_flag("--csv", csv, "CSV summary instead of records");
  search->add_flag("--hunt-min-degree-4", hunt,
                   "report the first minimally HC graph with min degree >= 4");
  search->add_flag("--lenient", s_lenient, "skip malformed lines");
  search->add_option("--format", s_format, "records|text")
      ->check(CLI::IsMember({"records", "text"}));

  auto* stats = app.add_subcommand("stats", "degree/connectivity statistics");
  std::string st_path, st_format = "graph6";
  bool st_lenient = false;
  stats->add_option("--input", st_path, "input file (default stdin)");
  stats->add_option("--input-format", st_format, "graph6|edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  stats->add_flag("--lenient", st_lenient, "skip malformed lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (construct->parsed())
      return run_construct(c_n, c_delta, c_format, c_family, c_drop);
    if (check->parsed()) {
      int modes = int(m_hc) + int(m_mhc) + int(m_conn);
      if (modes != 1)
        throw Failure{kUsage, "check needs exactly one of --hc, --mhc, --connectivity"};
      std::string mode = m_hc ? "hc" : m_mhc ? "mhc" : "connectivity";
      return run_check(mode, in_path, in_format, lenient, assert_mode, certificate,
                       out_format);
    }
    if (verify->parsed()) {
      if ((v_n > 0) != (v_delta > 0))
        throw Failure{kUsage, "verify-formulas needs both n and delta, or neither"};
      return run_verify_formulas(v_n, v_delta, v_max_n, v_format);
    }
    if (search->parsed())
      return run_search(s_n, use_stdin, s_input, s_lenient, workers, expect_max,
                        expect_min, csv, hunt, s_format);
    if (stats->parsed()) return run_stats(st_path, st_format, st_lenient);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const mhc::InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
