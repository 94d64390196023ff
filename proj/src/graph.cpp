#include "apsp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include "apsp/errors.hpp"

namespace apsp {

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool directed)
    : n_(n), edges_(std::move(edges)), directed_(directed) {
  if (n_ == 0) throw InvariantError("graph must have at least one node");
  if (n_ > std::numeric_limits<std::uint32_t>::max())
    throw InvariantError("node count exceeds 32-bit id range");
  Dist max_w = 0;
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw InvariantError("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                           " out of range for n=" + std::to_string(n_));
    if (e.u == e.v) throw InvariantError("self loop on node " + std::to_string(e.u));
    if (e.w < 1) throw InvariantError("edge weight must be >= 1");
    max_w = std::max(max_w, e.w);
  }
  if (static_cast<unsigned __int128>(n_ - 1) * max_w > kMaxFinite)
    throw InvariantError("(n - 1) * max weight exceeds the distance range");
}

DistMatrix::DistMatrix(std::size_t n, std::vector<Dist> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw InvariantError("distance matrix needs n*n entries");
  for (std::size_t i = 0; i < n_; ++i)
    if (entries_[i * n_ + i] != 0)
      throw InvariantError("diagonal entry " + std::to_string(i) + " is not zero");
}

DistMatrix DistMatrix::identity(std::size_t n) {
  std::vector<Dist> e(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 0;
  return DistMatrix(n, std::move(e));
}

bool DistMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool directed) {
  struct Pending {
    std::uint64_t u, v, w;
    std::size_t line;
  };
  std::vector<Pending> raw;
  std::uint64_t declared_n = 0;
  bool have_header = false;
  std::uint64_t max_id = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto toks = split_ws(line.substr(1));
      if (!toks.empty() && toks[0] == "n") {
        std::uint64_t count = 0;
        if (toks.size() != 2 || !parse_u64(toks[1], count) || count == 0)
          throw ParseError(line_no, "malformed node-count header, expected \"#n <count>\"");
        declared_n = count;
        have_header = true;
      }
      continue;
    }
    auto toks = split_ws(line);
    if (toks.size() != 2 && toks.size() != 3)
      throw ParseError(line_no, "expected \"u v\" or \"u v w\"");
    Pending p{0, 0, 1, line_no};
    if (!parse_u64(toks[0], p.u) || !parse_u64(toks[1], p.v) ||
        (toks.size() == 3 && !parse_u64(toks[2], p.w)))
      throw ParseError(line_no, "expected nonnegative integers");
    if (p.u == p.v) throw ParseError(line_no, "self loop on node " + std::to_string(p.u));
    if (p.w < 1) throw ParseError(line_no, "edge weight must be >= 1");
    if (p.w > kMaxFinite) throw ParseError(line_no, "edge weight too large");
    max_id = std::max({max_id, p.u, p.v});
    raw.push_back(p);
  }

  if (raw.empty() && !have_header) throw ParseError(0, "empty graph");
  const std::uint64_t n = have_header ? declared_n : max_id + 1;
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw ParseError(0, "node count exceeds 32-bit id range");

  std::map<std::pair<std::uint32_t, std::uint32_t>, Dist> unique;
  for (const auto& p : raw) {
    if (p.u >= n || p.v >= n)
      throw ParseError(p.line, "node id " + std::to_string(std::max(p.u, p.v)) +
                                   " >= declared node count " + std::to_string(n));
    auto u = static_cast<std::uint32_t>(p.u);
    auto v = static_cast<std::uint32_t>(p.v);
    if (!directed && u > v) std::swap(u, v);
    const auto w = static_cast<Dist>(p.w);
    auto [it, inserted] = unique.try_emplace({u, v}, w);
    if (!inserted) it->second = std::min(it->second, w);
  }

  std::vector<Edge> edges;
  edges.reserve(unique.size());
  for (const auto& [key, w] : unique) edges.push_back({key.first, key.second, w});
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges), directed);
  } catch (const InvariantError& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "#n " << g.n() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1) out << ' ' << e.w;
    out << '\n';
  }
  return out.str();
}

RemappedGraph compact_node_ids(const Graph& g) {
  std::vector<char> used(g.n(), 0);
  for (const Edge& e : g.edges()) used[e.u] = used[e.v] = 1;
  std::vector<std::uint32_t> old_ids;
  std::vector<std::uint32_t> new_id(g.n(), 0);
  for (std::uint32_t i = 0; i < g.n(); ++i) {
    if (!used[i]) continue;
    new_id[i] = static_cast<std::uint32_t>(old_ids.size());
    old_ids.push_back(i);
  }
  if (old_ids.empty()) {
    // an edgeless graph keeps a single node so the result stays valid
    old_ids.push_back(0);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({new_id[e.u], new_id[e.v], e.w});
  const auto n = old_ids.size();
  return {Graph(n, std::move(edges), g.directed()), std::move(old_ids)};
}

DistMatrix to_distance_matrix(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Dist> e(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 0;
  for (const Edge& ed : g.edges()) {
    auto& fwd = e[std::size_t{ed.u} * n + ed.v];
    fwd = std::min(fwd, ed.w);
    if (!g.directed()) {
      auto& back = e[std::size_t{ed.v} * n + ed.u];
      back = std::min(back, ed.w);
    }
  }
  return DistMatrix(n, std::move(e));
}

std::size_t finite_count(const DistMatrix& m) {
  const auto e = m.entries();
  return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](Dist d) { return d != kInf; }));
}

DensityReport density(const DistMatrix& m) {
  DensityReport r;
  r.finite_count = finite_count(m);
  r.n_squared = m.n() * m.n();
  r.density = r.n_squared == 0 ? 0.0
                               : static_cast<double>(r.finite_count) / static_cast<double>(r.n_squared);
  return r;
}

}  // namespace apsp
