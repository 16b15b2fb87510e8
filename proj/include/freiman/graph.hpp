// Balanced bipartite graphs with a matched vertex pairing (x_i, y_i),
// stored as one adjacency bitmask per x-vertex.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freiman {

// Pair subsets are 32-bit masks, whole vertex sets (both sides) 64-bit masks.
inline constexpr int max_pairs = 32;

// Safety bounds for the enumeration-heavy operations. Callers raise them
// explicitly when they mean it.
struct Limits {
  int max_vertices = 28;                  // 2n bound for cover/poset enumeration
  int max_enum_n = 4;                     // exhaustive graph enumeration cap
  long long max_power_work = 20'000'000;  // materialized sums in power_mu
};

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A configured safety bound was exceeded.
class bound_error : public error {
 public:
  using error::error;
};

// The caller broke an operation's contract.
class precondition_error : public error {
 public:
  using error::error;
};

// Two independent computations of the same value disagreed, or a theorem
// the code relies on failed to hold: a bug, not an input problem.
class consistency_error : public error {
 public:
  using error::error;
};

inline std::uint32_t mask_n32(int n) {
  return n >= 32 ? ~0u : (1u << n) - 1u;
}

inline std::uint64_t mask_n64(int n) {
  return n >= 64 ? ~0ull : (1ull << n) - 1ull;
}

// Pre-pairing input form: sides may have different sizes and no matching is
// assumed. Edges are 0-based (left, right) pairs, kept sorted and unique.
struct RawBipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int left, int right) const {
    return std::binary_search(edges.begin(), edges.end(),
                              std::make_pair(left, right));
  }

  bool operator==(const RawBipartiteGraph&) const = default;
};

// Balanced bipartite graph on pairs (x_1,y_1)..(x_n,y_n). Bit j of rows[i]
// is the edge {x_{i+1}, y_{j+1}}. After find_pairing the diagonal is present.
struct BipartiteGraph {
  int pairs = 0;
  std::vector<std::uint32_t> rows;

  bool has_edge(int i, int j) const { return rows[i] >> j & 1u; }

  int edge_count() const {
    int total = 0;
    for (std::uint32_t row : rows) total += std::popcount(row);
    return total;
  }

  // Mask of x-indices adjacent to y_j.
  std::uint32_t column(int j) const {
    std::uint32_t col = 0;
    for (int i = 0; i < pairs; ++i) col |= (rows[i] >> j & 1u) << i;
    return col;
  }

  bool matched() const {
    for (int i = 0; i < pairs; ++i)
      if (!has_edge(i, i)) return false;
    return true;
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < pairs; ++i)
      for (std::uint32_t bits = rows[i]; bits; bits &= bits - 1)
        out.emplace_back(i, std::countr_zero(bits));
    return out;
  }

  bool operator==(const BipartiteGraph&) const = default;
};

inline BipartiteGraph make_graph(int pairs,
                                 const std::vector<std::pair<int, int>>& edges) {
  if (pairs < 1 || pairs > max_pairs)
    throw precondition_error("pair count out of range");
  BipartiteGraph g{pairs, std::vector<std::uint32_t>(pairs, 0)};
  for (auto [i, j] : edges) {
    if (i < 0 || i >= pairs || j < 0 || j >= pairs)
      throw precondition_error("edge index out of range");
    g.rows[i] |= 1u << j;
  }
  return g;
}

// --------------------------------------------------------------------------
// Graph file format: one record per line; `#` starts a comment.
//   n <pairs>
//   e <i> <j>      the edge {x_i, y_j}, 1-based
// --------------------------------------------------------------------------
namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r')
      ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t k = 0;
  bool neg = false;
  if (tok[0] == '-') {
    neg = true;
    k = 1;
    if (tok.size() == 1) return std::nullopt;
  }
  long long value = 0;
  for (; k < tok.size(); ++k) {
    if (tok[k] < '0' || tok[k] > '9') return std::nullopt;
    value = value * 10 + (tok[k] - '0');
    if (value > 1'000'000'000) return std::nullopt;
  }
  return neg ? -value : value;
}

}  // namespace detail

inline RawBipartiteGraph parse_graph(std::string_view text) {
  RawBipartiteGraph g;
  bool have_n = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = detail::split_ws(line);
    if (toks.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (toks[0] == "n") {
      if (have_n) throw parse_error(line_no, "duplicate n header");
      if (toks.size() != 2)
        throw parse_error(line_no, "expected: n <pairs>");
      auto n = detail::to_int(toks[1]);
      if (!n || *n < 1) throw parse_error(line_no, "pair count must be positive");
      if (*n > max_pairs)
        throw parse_error(line_no, "pair count exceeds supported maximum of " +
                                       std::to_string(max_pairs));
      g.left_size = g.right_size = static_cast<int>(*n);
      have_n = true;
    } else if (toks[0] == "e") {
      if (!have_n) throw parse_error(line_no, "edge before n header");
      if (toks.size() != 3) throw parse_error(line_no, "expected: e <i> <j>");
      auto i = detail::to_int(toks[1]);
      auto j = detail::to_int(toks[2]);
      if (!i || !j) throw parse_error(line_no, "malformed edge indices");
      if (*i < 1 || *i > g.left_size)
        throw parse_error(line_no, "index " + std::to_string(*i) +
                                       " out of range");
      if (*j < 1 || *j > g.right_size)
        throw parse_error(line_no, "index " + std::to_string(*j) +
                                       " out of range");
      std::pair<int, int> e{static_cast<int>(*i) - 1,
                            static_cast<int>(*j) - 1};
      if (std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end())
        throw parse_error(line_no, "duplicate edge");
      g.edges.push_back(e);
    } else {
      throw parse_error(line_no, "unknown record '" + std::string(toks[0]) +
                                     "'");
    }
    if (pos > text.size()) break;
  }
  if (!have_n) throw parse_error(line_no, "missing n header");
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// --------------------------------------------------------------------------
// Matched pairing
// --------------------------------------------------------------------------

// Perfect matching by augmenting paths; left vertices processed in order,
// right candidates tried ascending, so the result is deterministic.
// Returns labels[i] = the right vertex matched to left i, or nullopt.
inline std::optional<std::vector<int>> pairing_labels(
    const RawBipartiteGraph& g) {
  if (g.left_size != g.right_size || g.left_size < 1) return std::nullopt;
  const int n = g.left_size;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : g.edges) adj[i].push_back(j);
  std::vector<int> match_right(n, -1);
  std::vector<char> visited(n, 0);

  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : adj[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_right[j] < 0 || self(self, match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, i)) return std::nullopt;
  }
  std::vector<int> labels(n, -1);
  for (int j = 0; j < n; ++j) labels[match_right[j]] = j;
  return labels;
}

// Relabel the right side so that x_i is paired with y_i. Returns the graph in
// matched labeling, or nullopt when no perfect matching exists (such a graph
// cannot be unmixed).
inline std::optional<BipartiteGraph> find_pairing(const RawBipartiteGraph& g) {
  auto labels = pairing_labels(g);
  if (!labels) return std::nullopt;
  const int n = g.left_size;
  std::vector<int> new_of_old(n);  // new right index of original right j
  for (int i = 0; i < n; ++i) new_of_old[(*labels)[i]] = i;
  BipartiteGraph out{n, std::vector<std::uint32_t>(n, 0)};
  for (auto [i, j] : g.edges) out.rows[i] |= 1u << new_of_old[j];
  return out;
}

// Restrict to the pairs in `keep` (vertex pairs are always deleted together);
// surviving indices are renumbered 1..|keep| preserving order.
inline BipartiteGraph induced_subgraph(const BipartiteGraph& g,
                                       std::uint32_t keep) {
  keep &= mask_n32(g.pairs);
  if (keep == 0) throw precondition_error("induced subgraph needs a nonempty set");
  std::vector<int> old_index;
  for (std::uint32_t bits = keep; bits; bits &= bits - 1)
    old_index.push_back(std::countr_zero(bits));
  const int m = static_cast<int>(old_index.size());
  BipartiteGraph out{m, std::vector<std::uint32_t>(m, 0)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.has_edge(old_index[a], old_index[b])) out.rows[a] |= 1u << b;
  return out;
}

inline bool is_connected(const BipartiteGraph& g) {
  const int n = g.pairs;
  if (n == 0) return true;
  std::uint32_t seen_x = 1u, seen_y = 0;
  for (;;) {
    std::uint32_t next_y = seen_y;
    for (std::uint32_t bits = seen_x; bits; bits &= bits - 1)
      next_y |= g.rows[std::countr_zero(bits)];
    std::uint32_t next_x = seen_x;
    for (std::uint32_t bits = next_y & ~seen_y; bits; bits &= bits - 1)
      next_x |= g.column(std::countr_zero(bits));
    if (next_x == seen_x && next_y == seen_y) break;
    seen_x = next_x;
    seen_y = next_y;
  }
  return seen_x == mask_n32(n) && seen_y == mask_n32(n);
}

// Streams every matched graph (diagonal forced, all 2^(n^2-n) off-diagonal
// subsets) for each n <= max_n, exactly once. Restartable: construct anew.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int max_n, const Limits& limits = {})
      : max_n_(max_n) {
    if (max_n < 1) throw precondition_error("max_n must be positive");
    if (max_n > limits.max_enum_n)
      throw bound_error("enumeration bound exceeded: max_n " +
                        std::to_string(max_n) + " > " +
                        std::to_string(limits.max_enum_n));
    if (max_n * (max_n - 1) > 62)
      throw bound_error("enumeration stratum too large");
    begin_stratum(1);
  }

  std::optional<BipartiteGraph> next() {
    while (n_ <= max_n_) {
      if (counter_ < total_) {
        return build(counter_++);
      }
      begin_stratum(n_ + 1);
    }
    return std::nullopt;
  }

 private:
  void begin_stratum(int n) {
    n_ = n;
    counter_ = 0;
    total_ = n <= max_n_ ? (1ull << (n * (n - 1))) : 0;
    cells_.clear();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) cells_.emplace_back(i, j);
  }

  BipartiteGraph build(std::uint64_t code) const {
    BipartiteGraph g{n_, std::vector<std::uint32_t>(n_, 0)};
    for (int i = 0; i < n_; ++i) g.rows[i] = 1u << i;
    for (std::size_t c = 0; c < cells_.size(); ++c)
      if (code >> c & 1ull) g.rows[cells_[c].first] |= 1u << cells_[c].second;
    return g;
  }

  int max_n_;
  int n_ = 1;
  std::uint64_t counter_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace freiman
