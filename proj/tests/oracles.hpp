// Test-only oracles: small, slow, definition-level implementations that are
// independent of the library's computation paths, plus fixture helpers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freiman/freiman.hpp"

namespace oracle {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FREIMAN_FIXTURE_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline freiman::BipartiteGraph load_fixture(const std::string& name) {
  return *freiman::find_pairing(freiman::parse_graph(read_fixture(name)));
}

// Edge {x_i, y_j} iff i <= j.
inline freiman::BipartiteGraph chain_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) edges.emplace_back(i, j);
  return freiman::make_graph(n, edges);
}

inline freiman::BipartiteGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
  return freiman::make_graph(n, edges);
}

// Matched pairs plus edges from pair 1 to every other pair.
inline freiman::BipartiteGraph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i);
  for (int j = 1; j < n; ++j) edges.emplace_back(0, j);
  return freiman::make_graph(n, edges);
}

// Definition-level minimal vertex covers: every subset of the 2n vertices is
// tested for coverage, then for minimality by single-element removal.
inline std::vector<freiman::MinimalCover> brute_force_covers(
    const freiman::BipartiteGraph& g) {
  const int n = g.pairs;
  auto edges = g.edge_list();
  auto is_cover = [&](std::uint64_t s) {
    for (auto [i, j] : edges)
      if (!(s >> i & 1ull) && !(s >> (n + j) & 1ull)) return false;
    return true;
  };
  std::vector<freiman::MinimalCover> out;
  for (std::uint64_t s = 0; s < (1ull << (2 * n)); ++s) {
    if (!is_cover(s)) continue;
    bool minimal = true;
    for (int v = 0; v < 2 * n && minimal; ++v)
      if (s >> v & 1ull) minimal = !is_cover(s & ~(1ull << v));
    if (minimal)
      out.push_back({static_cast<std::uint32_t>(s & ((1ull << n) - 1)),
                     static_cast<std::uint32_t>(s >> n)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool brute_force_unmixed(const freiman::BipartiteGraph& g) {
  auto covers = brute_force_covers(g);
  for (const auto& c : covers)
    if (c.size() != covers.front().size()) return false;
  return true;
}

// Rank over Q by plain rational Gaussian elimination with exact arithmetic;
// independent of the fraction-free integer route.
inline int rational_rank(const std::vector<std::vector<long long>>& input) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> m(input.size());
  for (std::size_t r = 0; r < input.size(); ++r)
    m[r].assign(input[r].begin(), input[r].end());
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      cpp_rational f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline int rational_rank(const freiman::MonomialIdeal& ideal) {
  std::vector<std::vector<long long>> m;
  for (const auto& g : ideal.gens) m.emplace_back(g.begin(), g.end());
  return rational_rank(m);
}

// Distinct k-fold generator sums by ordered-tuple enumeration into a std::set
// (the library walks unordered combinations and deduplicates by hash).
inline long long tuple_power_count(const freiman::MonomialIdeal& ideal,
                                   int k) {
  std::set<std::vector<int>> sums;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::vector<int> acc(ideal.n_vars, 0);
    for (int t = 0; t < k; ++t)
      for (int v = 0; v < ideal.n_vars; ++v) acc[v] += ideal.gens[pick[t]][v];
    sums.insert(acc);
    int t = k - 1;
    while (t >= 0 && pick[t] + 1 == ideal.gens.size()) pick[t--] = 0;
    if (t < 0) break;
    ++pick[t];
  }
  return static_cast<long long>(sums.size());
}

// Down-closed subsets straight from the definition.
inline std::vector<std::uint32_t> brute_force_ideals(const freiman::Poset& p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << p.n); ++s) {
    bool closed = true;
    for (int a = 0; a < p.n && closed; ++a)
      for (int b = 0; b < p.n && closed; ++b)
        if ((s >> b & 1u) && p.leq(a, b)) closed = s >> a & 1u;
    if (closed) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
