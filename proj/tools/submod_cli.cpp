// submod: solve instances, run the scaling bench, replay the dynamic-base self-check.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "submod/io.hpp"
#include "submod/pipeline.hpp"
#include "submod/selfcheck.hpp"

using namespace submod;
using json = nlohmann::json;

namespace {

Algo parse_algo(const std::string& s) {
  if (s == "pipeline") return Algo::Pipeline;
  if (s == "greedy") return Algo::Greedy;
  if (s == "lazy-only") return Algo::LazyOnly;
  throw ParameterError("unknown algo '" + s + "'");
}

json report_json(const SolveReport& r, const std::string& instance, int n, int rank) {
  json j;
  j["schema_version"] = 1;
  j["instance"] = instance;
  j["n"] = n;
  j["rank"] = rank;
  j["algo"] = r.algo;
  j["seed"] = r.seed;
  j["eps"] = r.eps;
  j["restarts"] = r.restarts;
  j["solution"] = r.solution;
  j["value"] = r.value;
  j["M"] = r.M;
  j["lazy_size"] = r.lazy_size;
  j["F_estimate"] = r.F_estimate;
  j["calls"] = r.calls;
  j["total_calls"] = r.total_calls;
  j["indep_ops"] = r.indep_ops;
  j["secs"] = r.secs;
  if (r.brute_force_opt) j["brute_force_opt"] = *r.brute_force_opt;
  return j;
}

// "2^12..2^16" -> 4096,8192,...,65536; "1000..8000" doubles; commas separate items.
std::vector<int> parse_sizes(const std::string& text) {
  auto one = [](const std::string& t) -> long {
    auto caret = t.find('^');
    try {
      if (caret == std::string::npos) return std::stol(t);
      long b = std::stol(t.substr(0, caret)), e = std::stol(t.substr(caret + 1));
      if (e < 0 || e > 30) throw ParameterError("exponent out of range in '" + t + "'");
      return std::lround(std::pow(static_cast<double>(b), static_cast<double>(e)));
    } catch (const std::logic_error&) {
      throw ParameterError("bad size '" + t + "'");
    }
  };
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(one(item)));
      continue;
    }
    long lo = one(item.substr(0, dots)), hi = one(item.substr(dots + 2));
    if (lo < 1 || hi < lo) throw ParameterError("bad size range '" + item + "'");
    for (long v = lo; v <= hi; v *= 2) out.push_back(static_cast<int>(v));
  }
  for (int v : out)
    if (v < 4 || v > (1 << 24)) throw ParameterError("sizes must lie in [4, 2^24]");
  if (out.empty()) throw ParameterError("no sizes given");
  return out;
}

int cmd_solve(const std::string& path, const PipelineOptions& opt, const std::string& out,
              bool brute) {
  Instance inst = load_instance(path);
  SolveReport rep = maximize(*inst.oracle, inst.matroid, opt);
  const int n = inst.matroid.ground_size();
  if (brute) {
    if (n > 24 || inst.matroid.rank() > 4)
      throw ParameterError("--brute-force needs n <= 24 and rank <= 4");
    rep.brute_force_opt = brute_force_opt(*inst.oracle, inst.matroid);
  }
  json j = report_json(rep, path, n, inst.matroid.rank());
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw ValidationError("cannot write " + out);
    f << j.dump(2) << "\n";
    std::cerr << "value " << rep.value << " calls " << rep.total_calls << " -> " << out << "\n";
  }
  return 0;
}

struct BenchRow {
  std::string instance;
  int n = 0, k = 0;
  uint64_t seed = 0;
  double eps = 0.0;
  std::string algo;
  double value = 0.0;
  long calls = 0;
  double secs = 0.0;
};

int cmd_bench(const std::string& family, const std::string& sizes_spec, int seeds,
              const std::vector<std::string>& algos, PipelineOptions base, const std::string& out) {
  auto sizes = parse_sizes(sizes_spec);
  if (seeds < 1) throw ParameterError("--seeds must be >= 1");
  std::vector<Algo> as;
  for (const auto& a : algos) as.push_back(parse_algo(a));
  if (as.empty()) throw ParameterError("no algos given");
  bench_instance(family, 8, 0);  // validates the family name up front

  struct Cell {
    int n;
    uint64_t seed;
    Algo algo;
  };
  std::vector<Cell> cells;
  for (int n : sizes)
    for (int s = 0; s < seeds; ++s)
      for (Algo a : as) cells.push_back({n, static_cast<uint64_t>(s + 1), a});
  std::vector<BenchRow> rows(cells.size());

  // Each cell owns its instance and oracle, so cells run independently.
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < static_cast<long>(cells.size()); ++c) {
    auto g = bench_instance(family, cells[c].n, cells[c].seed);
    PipelineOptions opt = base;
    opt.algo = cells[c].algo;
    opt.seed = cells[c].seed;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = maximize(*g.oracle, g.matroid, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows[c] = {g.name, g.matroid.ground_size(), g.matroid.rank(), cells[c].seed, opt.eps,
               algo_name(opt.algo), rep.value, rep.total_calls, secs};
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw ValidationError("cannot write " + out);
    os = &file;
  }
  *os << "instance,n,k,seed,eps,algo,value,calls,secs\n";
  for (const auto& r : rows)
    *os << r.instance << "," << r.n << "," << r.k << "," << r.seed << "," << r.eps << "," << r.algo
        << "," << r.value << "," << r.calls << "," << r.secs << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone submodular maximization under partition and graphic matroids"};
  app.require_subcommand(1);

  PipelineOptions opt;
  std::string algo = "pipeline";
  std::string out;

  auto* solve = app.add_subcommand("solve", "Maximize f over the matroid in an instance file");
  std::string path;
  bool brute = false;
  solve->add_option("instance", path, "Instance file")->required();
  solve->add_option("--eps", opt.eps, "Accuracy, in (0, 1/4)");
  solve->add_option("--seed", opt.seed, "RNG seed");
  solve->add_option("--algo", algo, "pipeline | greedy | lazy-only");
  solve->add_option("--restarts", opt.restarts, "Independent runs; best is kept");
  solve->add_option("--cg-samples", opt.cg_samples, "Fixed continuous-greedy sample count (0 = formula)");
  solve->add_option("--out", out, "Write the JSON report here instead of stdout");
  solve->add_flag("--brute-force", brute, "Also report exhaustive OPT (tiny instances only)");

  auto* bench = app.add_subcommand("bench", "Scaling bench, CSV output");
  std::string family = "coverage", sizes = "2^12..2^16";
  int seeds = 3;
  std::vector<std::string> algos{"pipeline", "greedy"};
  double bench_eps = 0.2;
  int bench_cg = 4;
  int threads = 0;
  bench->add_option("--family", family, "coverage | welfare");
  bench->add_option("--sizes", sizes, "e.g. 2^12..2^16 or 1000,2000");
  bench->add_option("--seeds", seeds, "Seeds per size");
  bench->add_option("--algos", algos, "Algorithms to run")->delimiter(',');
  bench->add_option("--eps", bench_eps, "Accuracy, in (0, 1/4)");
  bench->add_option("--cg-samples", bench_cg, "Continuous-greedy samples per pass");
  bench->add_option("--restarts", opt.restarts, "Restarts per cell");
  bench->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  bench->add_option("--out", out, "CSV path (default stdout)");

  auto* self = app.add_subcommand("selfcheck", "Replay dynamic-base update sequences against a naive backend");
  SelfcheckOptions sc;
  bool fault = false;
  self->add_option("--sequences", sc.sequences, "Random sequences");
  self->add_option("--updates", sc.updates_per_sequence, "Updates per sequence");
  self->add_option("--seed", sc.seed, "RNG seed");
  self->add_flag("--inject-fault", fault, "Break the naive backend on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      opt.algo = parse_algo(algo);
      return cmd_solve(path, opt, out, brute);
    }
    if (*bench) {
      if (threads > 0) omp_set_num_threads(threads);
      opt.eps = bench_eps;
      opt.cg_samples = bench_cg;
      return cmd_bench(family, sizes, seeds, algos, opt, out);
    }
    if (*self) {
      if (fault) sc.fault = NaiveFault::DropHeaviest;
      return run_selfcheck(sc, std::cout) ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "bad parameter: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
