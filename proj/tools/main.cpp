// hadamard: construct, enumerate, verify and analyze seminormalized
// Hadamard matrices from the command line.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/analysis.hpp"
#include "hadamard/annealing.hpp"
#include "hadamard/matrix_io.hpp"
#include "hadamard/ortho_graph.hpp"
#include "hadamard/search.hpp"
#include "hadamard/vectorspace.hpp"
#include "hadamard/version.hpp"

namespace {

using namespace hadamard;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

unsigned worker_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HF_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

// Primary result stream: buffered so the run manifest can digest exactly the
// bytes that were emitted, then flushed to stdout or --out/--csv.
struct Output {
  std::ostringstream buffer;
  std::string path;  // empty = stdout

  void flush() const {
    if (path.empty()) {
      std::cout << buffer.str();
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << buffer.str();
  }
};

struct ManifestInfo {
  std::string path;
  std::string subcommand;
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
};

void write_manifest(const ManifestInfo& info, const Output& out,
                    double duration_s) {
  if (info.path.empty()) return;
  nlohmann::json j;
  j["subcommand"] = info.subcommand;
  j["flags"] = info.argv;
  j["seed"] = info.seed;
  j["version"] = kVersion;
  j["duration_seconds"] = duration_s;
  char digest[32];
  std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(out.buffer.str())));
  j["result_digest"] = digest;
  std::ofstream f(info.path);
  if (!f) throw std::runtime_error("cannot open manifest file: " + info.path);
  f << j.dump(2) << '\n';
}

ThresholdSchedule parse_schedule(const std::string& text,
                                 std::uint64_t total_steps) {
  ThresholdSchedule s;
  s.total_steps = total_steps;
  if (text.empty()) return s;
  std::istringstream in(text);
  std::string shape, start, end;
  if (!std::getline(in, shape, ':') || !std::getline(in, start, ':') ||
      !std::getline(in, end, ':'))
    throw CLI::ValidationError("--schedule",
                               "expected shape:start:end, e.g. linear:0.5:1.0");
  if (shape == "linear")
    s.shape = ThresholdSchedule::Shape::Linear;
  else if (shape == "geometric")
    s.shape = ThresholdSchedule::Shape::Geometric;
  else
    throw CLI::ValidationError("--schedule", "shape must be linear|geometric");
  s.start_p = std::stod(start);
  s.end_p = std::stod(end);
  if (!(0.0 <= s.start_p && s.start_p <= s.end_p && s.end_p <= 1.0))
    throw CLI::ValidationError("--schedule", "need 0 <= start <= end <= 1");
  return s;
}

// --- enumerate -----------------------------------------------------------

int cmd_enumerate(int k, const std::string& family, Output& out) {
  if (family == "sh") {
    ShVectorEnumerator e(k);
    while (auto v = e.next()) out.buffer << v->to_string() << '\n';
  } else if (family == "psh") {
    PshVectorEnumerator e(k);
    while (auto v = e.next()) out.buffer << v->to_string() << '\n';
  } else {
    for (const auto& v : enumerate_hsh_vectors(k))
      out.buffer << v.to_string() << '\n';
  }
  return 0;
}

// --- construct -----------------------------------------------------------

void write_trace_csv(const std::string& path, const RvsTrace& trace) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open trace file: " + path);
  f << "# schema: rvs-trace-v1\n";
  f << "stage,iterations\n";
  for (const auto& s : trace.stages) f << s.stage << ',' << s.iterations << '\n';
}

int cmd_construct(int order, const std::string& method, std::uint64_t seed,
                  std::uint64_t max_iter, std::uint32_t restarts,
                  const std::string& schedule_text, const std::string& rule,
                  const std::string& trace_csv, Output& out) {
  int k = order / 4;
  SearchBudget budget{max_iter, restarts, seed};
  if (method == "exhaustive") {
    auto result = exhaustive_search(k);
    for (const auto& m : result.matrices)
      write_sign_matrix(out.buffer, m.to_sign_matrix());
    std::cerr << "exhaustive: " << result.matrices.size() << " matrices, "
              << result.candidates_examined << " candidates examined"
              << (result.used_clique_path ? " (clique path)" : "") << '\n';
    return result.matrices.empty() ? 1 : 0;
  }
  if (method == "rvs") {
    auto result = rvs_construct(k, budget);
    write_sign_matrix(out.buffer, result.matrix.to_sign_matrix());
    if (!trace_csv.empty()) write_trace_csv(trace_csv, result.trace);
    std::cerr << "rvs: " << result.trace.total_iterations() << " draws, "
              << result.trace.restarts_used << " restarts, seed "
              << result.seed << '\n';
    return 0;
  }
  OsaOptions opt;
  opt.schedule = parse_schedule(schedule_text, max_iter);
  opt.rule = rule == "metropolis" ? AcceptanceRule::Metropolis
                                  : AcceptanceRule::Threshold;
  auto result = osa_construct(k, opt, budget);
  write_sign_matrix(out.buffer, result.matrix.to_sign_matrix());
  std::cerr << "osa: " << result.total_steps << " steps, "
            << result.restarts_used << " restarts, seed " << result.seed
            << '\n';
  return 0;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const std::string& path, Output& out) {
  SignMatrix m = read_sign_matrix_file(path);  // ParseError handled by caller
  if (m.order() % 4 != 0) {
    out.buffer << "order: " << m.order() << '\n'
               << "error: order must be a multiple of 4\n";
    return 3;
  }
  bool semi = m.first_column_ones();
  bool norm = semi && m.first_row_ones();
  bool hadamard = is_hadamard(m);
  out.buffer << "order: " << m.order() << '\n'
             << "seminormalized: " << (semi ? "yes" : "no") << '\n'
             << "normalized: " << (norm ? "yes" : "no") << '\n'
             << "hadamard: " << (hadamard ? "yes" : "no") << '\n'
             << "energy: " << energy(m) << '\n';
  return hadamard ? 0 : 1;
}

// --- graph ---------------------------------------------------------------

int cmd_graph(int k, const std::string& format, bool cliques, Output& out) {
  OrthoGraph g = OrthoGraph::build(k);
  if (cliques) {
    auto found = g.find_cliques(4 * k - 1);
    for (const auto& c : found) {
      for (std::size_t i = 0; i < c.size(); ++i)
        out.buffer << (i ? " " : "") << c[i];
      out.buffer << '\n';
    }
    std::cerr << "graph: " << found.size() << " cliques of size " << 4 * k - 1
              << '\n';
    return 0;
  }
  GraphFormat f = format == "dot"    ? GraphFormat::Dot
                  : format == "json" ? GraphFormat::Json
                                     : GraphFormat::EdgeList;
  g.export_graph(out.buffer, f);
  return 0;
}

// --- analyze -------------------------------------------------------------

void analyze_row(std::ostream& o, int k) {
  CountReport c = count_report(k);
  ProbabilityReport p = probability_report(k);
  o << k << ',' << 4 * k << ',' << c.n_v << ',' << c.n_o << ',' << c.n_q << ','
    << c.n_qu << ',' << c.n_d << ',';
  if (c.n_nh) o << *c.n_nh;
  o << ',';
  if (c.n_sh) o << *c.n_sh;
  o << ',' << boost::multiprecision::numerator(p.p_perp_exact) << ','
    << boost::multiprecision::denominator(p.p_perp_exact) << ','
    << p.p_perp_log2 << ',' << p.p_perp_bounds.first << ','
    << p.p_perp_bounds.second << ',' << p.p_h_given_q_log2 << ','
    << p.p_h_given_q_bounds_log2.first << ',' << p.p_h_given_q_bounds_log2.second
    << ',' << p.expected_h_log2_bounds.first << ','
    << p.expected_h_log2_bounds.second << ',' << p.expected_h_log2_exact
    << '\n';
}

int cmd_analyze(int k_lo, int k_hi, bool discrepancy, Output& out) {
  std::ostream& o = out.buffer;
  o.precision(12);
  if (discrepancy) {
    o << "# schema: discrepancy-v1\n";
    o << "k,order,eh_log2_lower,eh_log2_upper,eh_log2_exact,nsh_log2\n";
    for (const auto& row : discrepancy_table(k_hi)) {
      if (row.k < k_lo) continue;
      o << row.k << ',' << 4 * row.k << ',' << row.eh_log2_lower << ','
        << row.eh_log2_upper << ',' << row.eh_log2_exact << ',';
      if (row.nsh_log2) o << *row.nsh_log2;
      o << '\n';
    }
    return 0;
  }
  o << "# schema: analyze-v1\n";
  o << "k,order,n_v,n_o,n_q,n_qu,n_d,n_nh,n_sh,p_perp_num,p_perp_den,"
       "p_perp_log2,p_perp_lower,p_perp_upper,p_hq_log2,p_hq_lower_log2,"
       "p_hq_upper_log2,eh_lower_log2,eh_upper_log2,eh_exact_log2\n";
  for (int k = k_lo; k <= k_hi; ++k) analyze_row(o, k);
  return 0;
}

// --- bench ---------------------------------------------------------------

struct BenchRun {
  int order;
  std::uint64_t seed;
  std::uint64_t iterations = 0;
  std::uint32_t restarts = 0;
  double wall_ms = 0;
  bool ok = false;
  std::vector<RvsStage> stages;  // rvs only
};

BenchRun bench_one(const std::string& method, int order, std::uint64_t seed,
                   std::uint64_t max_iter, std::uint32_t restarts,
                   const ThresholdSchedule& schedule) {
  BenchRun r{order, seed};
  SearchBudget budget{max_iter, restarts, seed};
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (method == "rvs") {
      auto res = rvs_construct(order / 4, budget);
      r.iterations = res.trace.total_iterations();
      r.restarts = res.trace.restarts_used;
      r.stages = res.trace.stages;
      r.ok = true;
    } else {
      OsaOptions opt;
      opt.schedule = schedule;
      auto res = osa_construct(order / 4, opt, budget);
      r.iterations = res.total_steps;
      r.restarts = res.restarts_used;
      r.ok = true;
    }
  } catch (const SearchFailure&) {
    r.ok = false;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

int cmd_bench(const std::string& method, int order_lo, int order_hi,
              int seeds, std::uint64_t base_seed, std::uint64_t max_iter,
              std::uint32_t restarts, const std::string& schedule_text,
              Output& out) {
  ThresholdSchedule schedule = parse_schedule(schedule_text, max_iter);
  std::vector<BenchRun> runs;
  for (int order = order_lo; order <= order_hi; order += 4)
    for (int s = 0; s < seeds; ++s)
      runs.push_back(BenchRun{order, base_seed + static_cast<std::uint64_t>(s)});

  // Fan out over seeds; results land in preallocated slots so output order
  // is independent of scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < runs.size();)
      runs[i] = bench_one(method, runs[i].order, runs[i].seed, max_iter,
                          restarts, schedule);
  };
  unsigned n_threads = std::min<unsigned>(worker_cap(),
                                          std::max<std::size_t>(1, runs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostream& o = out.buffer;
  o << "# schema: bench-v1\n";
  o << "# aggregate rvs rows append mean iterations for stages 3..order\n";
  o << "method,order,seed,status,iterations,restarts,wall_ms\n";
  o.precision(6);
  for (const auto& r : runs)
    o << method << ',' << r.order << ',' << r.seed << ','
      << (r.ok ? "ok" : "fail") << ',' << r.iterations << ',' << r.restarts
      << ',' << std::fixed << r.wall_ms << std::defaultfloat << '\n';

  for (int order = order_lo; order <= order_hi; order += 4) {
    double iters = 0, wall = 0;
    int ok = 0;
    std::vector<double> stage_sums;
    for (const auto& r : runs) {
      if (r.order != order || !r.ok) continue;
      ++ok;
      iters += static_cast<double>(r.iterations);
      wall += r.wall_ms;
      if (stage_sums.size() < r.stages.size())
        stage_sums.resize(r.stages.size(), 0.0);
      for (std::size_t i = 0; i < r.stages.size(); ++i)
        stage_sums[i] += static_cast<double>(r.stages[i].iterations);
    }
    o << method << ',' << order << ",mean,ok=" << ok << '/' << seeds << ','
      << (ok ? iters / ok : 0.0) << ",," << std::fixed
      << (ok ? wall / ok : 0.0) << std::defaultfloat;
    for (double s : stage_sums) o << ',' << (ok ? s / ok : 0.0);
    o << '\n';
  }
  return 0;
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (lo > hi) throw CLI::ValidationError(flag, "range lower bound > upper");
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seminormalized Hadamard matrix toolkit"};
  app.set_version_flag("--version", hadamard::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  ManifestInfo manifest;
  manifest.argv.assign(argv + 1, argv + argc);
  app.add_option("--manifest", manifest.path,
                 "Write a JSON run manifest (flags, seed, digest) here");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream a vector family");
  int enum_k = 1;
  std::string family = "sh";
  std::string out_path;
  enumerate->add_option("--k", enum_k, "Quarter order (order = 4k)")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--family", family, "Vector family")
      ->check(CLI::IsMember({"sh", "psh", "hsh"}));
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build an SH matrix");
  int order = 0;
  std::string method = "rvs";
  std::uint64_t seed = 0, max_iter = 10'000'000;
  std::uint32_t restarts = 20;
  std::string schedule_text = "linear:0.5:1.0";
  std::string rule = "threshold";
  std::string trace_csv;
  construct->add_option("--order", order, "Matrix order (multiple of 4)")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--method", method, "Construction method")
      ->check(CLI::IsMember({"exhaustive", "rvs", "osa"}));
  construct->add_option("--seed", seed, "Base RNG seed; restart r uses seed+r");
  construct->add_option("--max-iter", max_iter, "Iteration cap per restart");
  construct->add_option("--restarts", restarts, "Restart cap");
  construct->add_option("--schedule", schedule_text,
                        "OSA acceptance threshold, shape:start:end");
  construct->add_option("--rule", rule, "OSA acceptance rule")
      ->check(CLI::IsMember({"threshold", "metropolis"}));
  construct->add_option("--trace-csv", trace_csv,
                        "Write the RVS per-stage trace as CSV here");
  construct->add_option("--out", out_path, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a matrix file");
  std::string verify_path;
  verify->add_option("path", verify_path, "Matrix text file")->required();

  // graph
  auto* graph = app.add_subcommand("graph", "Orthogonality graph tools");
  int graph_k = 1;
  std::string export_format = "edges";
  bool cliques = false;
  graph->add_option("--k", graph_k, "Quarter order")
      ->required()
      ->check(CLI::PositiveNumber);
  graph->add_option("--export", export_format, "Serialization format")
      ->check(CLI::IsMember({"dot", "json", "edges"}));
  graph->add_flag("--cliques", cliques,
                  "List the (4k-1)-cliques instead of exporting");
  graph->add_option("--out", out_path, "Output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Counting and probability CSV");
  int analyze_k = 0;
  std::string k_range;
  bool discrepancy = false;
  std::string csv_path;
  analyze->add_option("--k", analyze_k, "Single k")->check(CLI::PositiveNumber);
  analyze->add_option("--k-range", k_range, "Range a..b");
  analyze->add_flag("--discrepancy", discrepancy,
                    "Emit the expected-count vs known-count comparison");
  analyze->add_option("--csv", csv_path, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Timing CSV for rvs/osa");
  std::string bench_method = "rvs";
  std::string bench_orders = "12..24";
  int bench_seeds = 10;
  std::uint64_t bench_seed = 1, bench_max_iter = 10'000'000;
  std::uint32_t bench_restarts = 20;
  std::string bench_schedule = "linear:0.5:1.0";
  bench->add_option("--method", bench_method, "Method to time")
      ->check(CLI::IsMember({"rvs", "osa"}));
  bench->add_option("--orders", bench_orders, "Order range a..b, step 4");
  bench->add_option("--seeds", bench_seeds, "Seeds per order")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "First seed");
  bench->add_option("--max-iter", bench_max_iter, "Iteration cap per restart");
  bench->add_option("--restarts", bench_restarts, "Restart cap");
  bench->add_option("--schedule", bench_schedule, "OSA threshold schedule");
  bench->add_option("--csv", csv_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  Output out;
  auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (*enumerate) {
      manifest.subcommand = "enumerate";
      out.path = out_path;
      status = cmd_enumerate(enum_k, family, out);
    } else if (*construct) {
      manifest.subcommand = "construct";
      manifest.seed = seed;
      out.path = out_path;
      if (order % 4 != 0 || order < 4) {
        std::cerr << "error: order must be a positive multiple of 4\n";
        return 3;
      }
      status = cmd_construct(order, method, seed, max_iter, restarts,
                             schedule_text, rule, trace_csv, out);
    } else if (*verify) {
      manifest.subcommand = "verify";
      status = cmd_verify(verify_path, out);
    } else if (*graph) {
      manifest.subcommand = "graph";
      out.path = out_path;
      status = cmd_graph(graph_k, export_format, cliques, out);
    } else if (*analyze) {
      manifest.subcommand = "analyze";
      out.path = csv_path;
      int lo = 1, hi = 8;
      if (analyze_k > 0) lo = hi = analyze_k;
      if (!k_range.empty()) std::tie(lo, hi) = parse_range(k_range, "--k-range");
      status = cmd_analyze(lo, hi, discrepancy, out);
    } else if (*bench) {
      manifest.subcommand = "bench";
      manifest.seed = bench_seed;
      out.path = csv_path;
      auto [lo, hi] = parse_range(bench_orders, "--orders");
      if (lo % 4 != 0 || hi % 4 != 0) {
        std::cerr << "error: --orders endpoints must be multiples of 4\n";
        return 3;
      }
      status = cmd_bench(bench_method, lo, hi, bench_seeds, bench_seed,
                         bench_max_iter, bench_restarts, bench_schedule, out);
    }
  } catch (const hadamard::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const hadamard::SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  out.flush();
  double duration =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_manifest(manifest, out, duration);
  return status;
}
