#include "submod/io.hpp"

#include "submod/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace submod {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  // Next line that is not a comment; blank lines are returned as-is.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto p = line.find_first_not_of(" \t");
      if (p != std::string::npos && line[p] == '#') continue;
      return true;
    }
    return false;
  }
  // Next non-blank, non-comment line.
  bool next_content(std::string& line) {
    while (next(line))
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("line " + std::to_string(lineno_) + ": " + what);
  }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

template <class T>
std::vector<T> tokens(const std::string& line, LineReader& rd) {
  std::istringstream ss(line);
  std::vector<T> out;
  T v;
  while (ss >> v) out.push_back(v);
  if (!ss.eof()) rd.fail("malformed number in '" + line + "'");
  return out;
}

void expect_header(const std::vector<std::string>& head, size_t n, LineReader& rd) {
  if (head.size() != n) rd.fail("header '" + head[0] + "' expects " + std::to_string(n - 1) + " integers");
}

int to_int(const std::string& s, LineReader& rd) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0 || v > (1L << 30)) rd.fail("bad count '" + s + "'");
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    rd.fail("bad count '" + s + "'");
  }
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader rd(in);
  std::string line;
  Instance inst;
  if (!rd.next_content(line)) rd.fail("empty instance");
  auto head = words(line);
  int n = 0;
  try {
    if (head[0] == "coverage") {
      expect_header(head, 3, rd);
      n = to_int(head[1], rd);
      int U = to_int(head[2], rd);
      std::vector<std::vector<int>> sets(n);
      for (int e = 0; e < n; ++e) {
        if (!rd.next(line)) rd.fail("missing coverage rows");
        sets[e] = tokens<int>(line, rd);
        for (int u : sets[e])
          if (u < 0 || u >= U) rd.fail("coverage item outside universe");
      }
      inst.objective = "coverage";
      inst.oracle = std::make_unique<CoverageOracle>(U, sets);
    } else if (head[0] == "facility") {
      expect_header(head, 3, rd);
      n = to_int(head[1], rd);
      int m = to_int(head[2], rd);
      std::vector<std::vector<double>> g(n);
      for (int e = 0; e < n; ++e) {
        if (!rd.next_content(line)) rd.fail("missing facility rows");
        g[e] = tokens<double>(line, rd);
        if (static_cast<int>(g[e].size()) != m) rd.fail("facility row has wrong length");
        for (double v : g[e])
          if (!(v >= 0.0) || !std::isfinite(v)) rd.fail("facility gains must be finite and >= 0");
      }
      inst.objective = "facility";
      inst.oracle = std::make_unique<FacilityLocationOracle>(g);
    } else {
      rd.fail("unknown objective '" + head[0] + "'");
    }

    if (!rd.next_content(line)) rd.fail("missing matroid block");
    head = words(line);
    if (head[0] == "partition") {
      expect_header(head, 3, rd);
      if (to_int(head[1], rd) != n) rd.fail("matroid ground size differs from objective");
      int h = to_int(head[2], rd);
      std::vector<int> part_of(n, -1), budgets(h);
      for (int p = 0; p < h; ++p) {
        if (!rd.next_content(line)) rd.fail("missing partition rows");
        auto t = tokens<long>(line, rd);
        if (t.empty()) rd.fail("partition row needs a budget");
        budgets[p] = static_cast<int>(t[0]);
        for (size_t i = 1; i < t.size(); ++i) {
          if (t[i] < 0 || t[i] >= n) rd.fail("partition element out of range");
          if (part_of[t[i]] >= 0) rd.fail("element listed in two parts");
          part_of[t[i]] = p;
        }
      }
      for (int e = 0; e < n; ++e)
        if (part_of[e] < 0) rd.fail("element " + std::to_string(e) + " belongs to no part");
      inst.matroid = Matroid::partition(part_of, budgets);
    } else if (head[0] == "graphic") {
      expect_header(head, 3, rd);
      int V = to_int(head[1], rd);
      if (to_int(head[2], rd) != n) rd.fail("edge count differs from objective ground size");
      std::vector<std::pair<int, int>> edges(n);
      for (int e = 0; e < n; ++e) {
        if (!rd.next_content(line)) rd.fail("missing edge rows");
        auto t = tokens<int>(line, rd);
        if (t.size() != 2) rd.fail("edge row needs two endpoints");
        edges[e] = {t[0], t[1]};
      }
      inst.matroid = Matroid::graphic(V, edges);
    } else {
      rd.fail("unknown matroid '" + head[0] + "'");
    }
  } catch (const DomainError& err) {
    throw ValidationError(err.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return parse_instance(in);
}

void write_coverage(std::ostream& out, int universe, const std::vector<std::vector<int>>& sets) {
  out << "coverage " << sets.size() << " " << universe << "\n";
  for (const auto& s : sets) {
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\n";
  }
}

void write_facility(std::ostream& out, const std::vector<std::vector<double>>& gains) {
  out << "facility " << gains.size() << " " << (gains.empty() ? 0 : gains[0].size()) << "\n";
  for (const auto& row : gains) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
}

void write_matroid(std::ostream& out, const Matroid& m) {
  if (m.is_partition()) {
    out << "partition " << m.ground_size() << " " << m.num_parts() << "\n";
    for (int p = 0; p < m.num_parts(); ++p) {
      out << m.budget(p);
      for (int e : m.part(p)) out << " " << e;
      out << "\n";
    }
  } else {
    out << "graphic " << m.num_vertices() << " " << m.ground_size() << "\n";
    for (auto [u, v] : m.edges()) out << u << " " << v << "\n";
  }
}

std::vector<std::vector<int>> random_coverage_sets(int n, int universe, int min_size, int max_size,
                                                   Rng& rng) {
  std::uniform_int_distribution<int> size(min_size, max_size);
  std::uniform_int_distribution<int> item(0, universe - 1);
  std::vector<std::vector<int>> sets(n);
  for (auto& s : sets) {
    int k = size(rng);
    for (int i = 0; i < k; ++i) s.push_back(item(rng));
    s = normalized(s);
  }
  return sets;
}

Matroid random_partition_matroid(int n, int parts, int max_budget, Rng& rng) {
  std::vector<int> part_of(n);
  std::vector<int> sizes(parts, 0);
  for (int e = 0; e < n; ++e) {
    part_of[e] = e % parts;
    ++sizes[e % parts];
  }
  std::shuffle(part_of.begin(), part_of.end(), rng);
  std::vector<int> budgets(parts);
  for (int p = 0; p < parts; ++p) {
    std::uniform_int_distribution<int> b(std::min(1, sizes[p]), std::min(max_budget, sizes[p]));
    budgets[p] = b(rng);
  }
  return Matroid::partition(part_of, budgets);
}

Matroid uniform_matroid(int n, int k) {
  return Matroid::partition(std::vector<int>(n, 0), std::vector<int>{k});
}

std::vector<std::pair<int, int>> random_connected_graph(int vertices, int edges, Rng& rng) {
  std::vector<std::pair<int, int>> out;
  std::vector<int> order(vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<int> prev(0, i - 1);
    out.emplace_back(order[prev(rng)], order[i]);
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  while (static_cast<int>(out.size()) < edges && vertices > 1) {
    int u = any(rng), v = any(rng);
    if (u != v) out.emplace_back(u, v);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

int bench_rank(int n) {
  return std::max(2, static_cast<int>(std::lround(std::pow(n, 0.7) / 16.0)));
}

GeneratedInstance bench_instance(const std::string& family, int n, uint64_t seed) {
  Rng rng(splitmix64(seed) ^ static_cast<uint64_t>(n));
  GeneratedInstance g;
  if (family == "coverage") {
    g.name = "coverage-" + std::to_string(n) + "-" + std::to_string(seed);
    const int k = bench_rank(n), universe = 4 * k;
    g.oracle = std::make_unique<CoverageOracle>(universe, random_coverage_sets(n, universe, 1, 8, rng));
    g.matroid = uniform_matroid(n, k);
  } else if (family == "welfare") {
    const int players = 4;
    int items = std::max(1, n / players);
    WelfareInstance w;
    w.items = items;
    w.players = players;
    for (int i = 0; i < players; ++i)
      w.valuations.push_back(
          std::make_shared<CoverageOracle>(items, random_coverage_sets(items, items, 1, 4, rng)));
    auto red = welfare_reduce(std::move(w));
    g.name = "welfare-" + std::to_string(items * players) + "-" + std::to_string(seed);
    g.oracle = std::move(red.oracle);
    g.matroid = std::move(red.matroid);
  } else {
    throw ValidationError("unknown bench family '" + family + "'");
  }
  return g;
}

}  // namespace submod
