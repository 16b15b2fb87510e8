// Minimal vertex covers, unmixedness (two independent routes), the lattice of
// cover x-parts, and the order-theoretic view of a matched bipartite graph.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freiman/graph.hpp"

namespace freiman {

// The lattice of cover x-parts is not closed under union/intersection:
// the input is not unmixed, or something upstream is broken.
class closure_error : public error {
 public:
  using error::error;
};

// A minimal vertex cover, split into its x- and y-side index masks.
struct MinimalCover {
  std::uint32_t x_mask = 0;
  std::uint32_t y_mask = 0;

  int size() const { return std::popcount(x_mask) + std::popcount(y_mask); }
  auto operator<=>(const MinimalCover&) const = default;
};

namespace detail {

// Bron-Kerbosch with pivoting over an arbitrary adjacency; used with the
// complement adjacency it enumerates maximal independent sets.
inline void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          const std::vector<std::uint64_t>& adj,
                          std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (std::uint64_t bits = p | x; bits; bits &= bits - 1) {
    int u = std::countr_zero(bits);
    int gain = std::popcount(p & adj[u]);
    if (gain > best) {
      best = gain;
      pivot = u;
    }
  }
  std::uint64_t cand = p & ~adj[pivot];
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    bron_kerbosch(r | (1ull << v), p & adj[v], x & adj[v], adj, out);
    p &= ~(1ull << v);
    x |= 1ull << v;
  }
}

// Adjacency of the complement graph over all 2n vertices: x-side first,
// y-side shifted by n. Cliques there are independent sets of g.
inline std::vector<std::uint64_t> complement_adjacency(const BipartiteGraph& g) {
  const int n = g.pairs;
  const std::uint64_t full = mask_n64(2 * n);
  std::vector<std::uint64_t> adj(2 * n, 0);
  for (int i = 0; i < n; ++i)
    adj[i] = static_cast<std::uint64_t>(g.rows[i]) << n;
  for (int j = 0; j < n; ++j) adj[n + j] = g.column(j);
  for (int v = 0; v < 2 * n; ++v) adj[v] = ~adj[v] & full & ~(1ull << v);
  return adj;
}

// Condition (ii) of the matched-labeling characterization of unmixedness:
// {x_i,y_j} and {x_j,y_k} edges with i,j,k distinct force {x_i,y_k}.
inline bool matched_transitive(const BipartiteGraph& g) {
  for (int i = 0; i < g.pairs; ++i) {
    for (std::uint32_t bits = g.rows[i] & ~(1u << i); bits; bits &= bits - 1) {
      int j = std::countr_zero(bits);
      if (g.rows[j] & ~(1u << i) & ~(1u << j) & ~g.rows[i]) return false;
    }
  }
  return true;
}

}  // namespace detail

// All minimal vertex covers, computed as complements of maximal independent
// sets, in sorted order. This route never looks at the lattice or the poset,
// so it serves as the oracle for the order-theoretic constructions.
inline std::vector<MinimalCover> minimal_vertex_covers(
    const BipartiteGraph& g, const Limits& limits = {}) {
  const int n = g.pairs;
  if (g.edge_count() == 0)
    throw precondition_error("cover enumeration needs at least one edge");
  if (2 * n > limits.max_vertices)
    throw bound_error("cover enumeration bound exceeded: " +
                      std::to_string(2 * n) + " vertices > " +
                      std::to_string(limits.max_vertices));
  auto adj = detail::complement_adjacency(g);
  std::vector<std::uint64_t> independent;
  detail::bron_kerbosch(0, mask_n64(2 * n), 0, adj, independent);
  std::vector<MinimalCover> covers;
  covers.reserve(independent.size());
  const std::uint64_t full = mask_n64(2 * n);
  for (std::uint64_t s : independent) {
    std::uint64_t c = full & ~s;
    covers.push_back({static_cast<std::uint32_t>(c & mask_n64(n)),
                      static_cast<std::uint32_t>(c >> n)});
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

// Searches for a right-side relabeling under which the matched-labeling
// unmixedness conditions hold: a perfect matching m with the relation
// "(i, m(j)) is an edge" transitive. The current pairing is tried first.
// Returns m as a vector (new pair j keeps original right vertex m[j]).
inline std::optional<std::vector<int>> unmixed_pairing(
    const BipartiteGraph& g) {
  const int n = g.pairs;
  if (!g.matched())
    throw precondition_error("unmixedness checks need a matched labeling");
  if (detail::matched_transitive(g)) {
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    return identity;
  }
  std::vector<std::uint32_t> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = g.column(j);

  std::vector<int> assign(n, -1);       // assign[c] = original right vertex
  std::vector<std::uint32_t> col_of(n); // relabeled column masks
  std::uint32_t used = 0;

  // Ordered pair (a,b) of assigned columns: every arc into a, composed with
  // a->b, must land in b.
  auto pair_ok = [&](int a, int b) {
    if (!(col_of[b] >> a & 1u)) return true;
    return (col_of[a] & ~(1u << a) & ~(1u << b) & ~col_of[b]) == 0;
  };

  auto dfs = [&](auto&& self, int c) -> bool {
    if (c == n) return true;
    for (std::uint32_t cand = g.rows[c] & ~used; cand; cand &= cand - 1) {
      int r = std::countr_zero(cand);
      assign[c] = r;
      col_of[c] = cols[r];
      used |= 1u << r;
      bool ok = true;
      for (int b = 0; b < c && ok; ++b)
        ok = pair_ok(c, b) && pair_ok(b, c);
      if (ok && self(self, c + 1)) return true;
      used &= ~(1u << r);
      assign[c] = -1;
    }
    return false;
  };
  if (dfs(dfs, 0)) return assign;
  return std::nullopt;
}

// Relabeled copy of g in which the unmixedness conditions hold, if any.
inline std::optional<BipartiteGraph> unmixed_labeling(const BipartiteGraph& g) {
  auto assign = unmixed_pairing(g);
  if (!assign) return std::nullopt;
  const int n = g.pairs;
  std::vector<int> new_of_old(n);
  for (int c = 0; c < n; ++c) new_of_old[(*assign)[c]] = c;
  BipartiteGraph out{n, std::vector<std::uint32_t>(n, 0)};
  for (int i = 0; i < n; ++i)
    for (std::uint32_t bits = g.rows[i]; bits; bits &= bits - 1)
      out.rows[i] |= 1u << new_of_old[std::countr_zero(bits)];
  return out;
}

// Structural unmixedness: some perfect-matching relabeling satisfies the
// matched-labeling conditions.
inline bool is_unmixed_structural(const BipartiteGraph& g) {
  return unmixed_pairing(g).has_value();
}

struct UnmixedResult {
  bool unmixed = false;
  // Two minimal covers of different cardinality when not unmixed.
  std::optional<std::pair<MinimalCover, MinimalCover>> witness;
};

// Direct unmixedness: every minimal cover has cardinality n. Cross-checked
// against the structural route; disagreement is a bug.
inline UnmixedResult is_unmixed(const BipartiteGraph& g,
                                const Limits& limits = {}) {
  const int n = g.pairs;
  auto covers = minimal_vertex_covers(g, limits);
  UnmixedResult result{true, std::nullopt};
  for (const auto& c : covers) {
    if (c.size() != n) {
      auto ref = std::find_if(covers.begin(), covers.end(),
                              [n](const MinimalCover& d) { return d.size() == n; });
      result.unmixed = false;
      result.witness = std::make_pair(ref != covers.end() ? *ref : covers.front(), c);
      break;
    }
  }
  if (is_unmixed_structural(g) != result.unmixed)
    throw consistency_error(
        "direct and structural unmixedness checks disagree");
  return result;
}

// The x-parts of all minimal covers. For an unmixed graph this is a
// sublattice of the Boolean lattice containing the empty set and [n].
struct CoverLattice {
  int n = 0;
  std::vector<std::uint32_t> members;  // sorted, unique

  bool contains(std::uint32_t s) const {
    return std::binary_search(members.begin(), members.end(), s);
  }
};

inline CoverLattice cover_lattice(const BipartiteGraph& g,
                                  const Limits& limits = {}) {
  auto covers = minimal_vertex_covers(g, limits);
  CoverLattice lat{g.pairs, {}};
  for (const auto& c : covers) lat.members.push_back(c.x_mask);
  std::sort(lat.members.begin(), lat.members.end());
  lat.members.erase(std::unique(lat.members.begin(), lat.members.end()),
                    lat.members.end());
  if (!lat.contains(0) || !lat.contains(mask_n32(g.pairs)))
    throw closure_error("cover lattice must contain the empty set and [n]");
  for (std::size_t a = 0; a < lat.members.size(); ++a)
    for (std::size_t b = a + 1; b < lat.members.size(); ++b) {
      if (!lat.contains(lat.members[a] | lat.members[b]))
        throw closure_error("cover lattice not closed under union");
      if (!lat.contains(lat.members[a] & lat.members[b]))
        throw closure_error("cover lattice not closed under intersection");
    }
  return lat;
}

// Finite poset on [n]; below[j] is the mask of elements <= j (including j).
struct Poset {
  int n = 0;
  std::vector<std::uint32_t> below;

  bool leq(int i, int j) const { return below[j] >> i & 1u; }
  bool operator==(const Poset&) const = default;
};

struct PosetFromGraph {
  std::optional<Poset> poset;
  // Antisymmetry failure: the pair {i,j} (0-based) with both cross edges,
  // i.e. an induced matched complete bipartite block of size 2.
  std::optional<std::pair<int, int>> kmm_witness;
};

// The relation p_i <= p_j iff {x_i, y_j} is an edge. Fails with a witness
// when antisymmetry does not hold; throws when transitivity fails, which
// means the input was not unmixed in this labeling.
inline PosetFromGraph poset_from_graph(const BipartiteGraph& g) {
  const int n = g.pairs;
  if (!g.matched())
    throw precondition_error("poset construction needs a matched labeling");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(i, j) && g.has_edge(j, i))
        return {std::nullopt, std::make_pair(i, j)};
  Poset p{n, std::vector<std::uint32_t>(n, 0)};
  for (int j = 0; j < n; ++j) p.below[j] = g.column(j);
  for (int k = 0; k < n; ++k)
    for (std::uint32_t bits = p.below[k]; bits; bits &= bits - 1) {
      int j = std::countr_zero(bits);
      if (p.below[j] & ~p.below[k])
        throw precondition_error(
            "relation not transitive: graph is not unmixed in this labeling");
    }
  return {p, std::nullopt};
}

// All down-closed subsets, ascending as masks (so the empty set is first and
// [n] last).
inline std::vector<std::uint32_t> poset_ideals(const Poset& p,
                                               const Limits& limits = {}) {
  if (2 * p.n > limits.max_vertices)
    throw bound_error("poset ideal enumeration bound exceeded");
  std::vector<std::uint32_t> ideals;
  const std::uint32_t full = mask_n32(p.n);
  for (std::uint32_t s = 0;; ++s) {
    bool closed = true;
    for (std::uint32_t bits = s; bits && closed; bits &= bits - 1)
      closed = (p.below[std::countr_zero(bits)] & ~s) == 0;
    if (closed) ideals.push_back(s);
    if (s == full) break;
  }
  return ideals;
}

inline bool is_chain(const Poset& p) {
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (!p.leq(i, j) && !p.leq(j, i)) return false;
  return true;
}

}  // namespace freiman
