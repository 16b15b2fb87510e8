// Structural classification: Cohen-Macaulay tests, matched complete
// bipartite blocks, block reduction, and the almost-complete-C-M criterion
// that decides the Freiman property without touching mu(I^2).
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freiman/covers.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideal.hpp"

namespace freiman {

// Two maximal matched complete bipartite blocks share a pair index. The
// reduction would depend on removal order, so this is surfaced instead.
class overlap_error : public error {
 public:
  using error::error;
};

// A maximal index set S (|S| >= 2) whose pairs induce a complete bipartite
// subgraph: every {x_i, y_j} with i, j in S is an edge.
struct KmmBlock {
  std::uint32_t indices = 0;

  int size() const { return std::popcount(indices); }
  int max_index() const { return 31 - std::countl_zero(indices); }
  auto operator<=>(const KmmBlock&) const = default;
};

struct CmResult {
  bool cm = false;
  // Offending pair {i,j} (0-based) inducing a matched K_{2,2} when not C-M.
  std::optional<std::pair<int, int>> witness;
};

namespace detail {

// Deterministic linear extension: repeatedly take the smallest-index
// minimal element.
inline std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order;
  std::uint32_t remaining = mask_n32(p.n);
  while (remaining) {
    for (std::uint32_t bits = remaining; bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      if ((p.below[v] & remaining & ~(1u << v)) == 0) {
        order.push_back(v);
        remaining &= ~(1u << v);
        break;
      }
    }
  }
  return order;
}

}  // namespace detail

// C-M test for a connected unmixed matched graph: no pair {i,j} may induce a
// matched K_{2,2}. Cross-validated by relabeling along a linear extension of
// the induced order and checking the staircase labeling directly (matched
// diagonal, edges only upward, composition closed).
inline CmResult is_cm(const BipartiteGraph& g) {
  auto built = poset_from_graph(g);
  if (!built.poset) return {false, built.kmm_witness};

  const Poset& p = *built.poset;
  auto order = detail::linear_extension(p);
  std::vector<int> place(p.n);
  for (int k = 0; k < p.n; ++k) place[order[k]] = k;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (!g.has_edge(i, j)) continue;
      if (place[i] > place[j])
        throw consistency_error("linear extension violated by an edge");
      for (int k = 0; k < p.n; ++k)
        if (g.has_edge(j, k) && !g.has_edge(i, k))
          throw consistency_error("staircase labeling not closed");
    }
  return {true, std::nullopt};
}

struct CompleteCmResult {
  bool complete_cm = false;
  // Total order certificate: pair indices from bottom to top (0-based).
  std::vector<int> order;
};

// Complete C-M means the induced order is a total order; some labeling then
// realizes edges exactly as i <= j.
inline CompleteCmResult is_complete_cm(const BipartiteGraph& g) {
  auto built = poset_from_graph(g);
  if (!built.poset || !is_chain(*built.poset)) return {false, {}};
  return {true, detail::linear_extension(*built.poset)};
}

struct AlmostCmResult {
  bool almost = false;
  int deleted_index = -1;     // 0-based pair index
  std::vector<int> order;     // total order of the remaining pairs
};

// Almost complete C-M: deleting one matched pair leaves a complete C-M
// graph; equivalently the order minus one element is a chain. The smallest
// such index is reported.
inline AlmostCmResult is_almost_complete_cm(const BipartiteGraph& g) {
  auto cm = is_cm(g);
  if (!cm.cm)
    throw precondition_error("almost-complete-C-M test needs a C-M graph");
  auto built = poset_from_graph(g);
  const Poset& p = *built.poset;
  for (int drop = 0; drop < p.n; ++drop) {
    bool chain = true;
    for (int i = 0; i < p.n && chain; ++i) {
      if (i == drop) continue;
      for (int j = i + 1; j < p.n && chain; ++j) {
        if (j == drop) continue;
        chain = p.leq(i, j) || p.leq(j, i);
      }
    }
    if (chain) {
      std::vector<int> order;
      if (p.n > 1) {
        Poset q{p.n, p.below};
        std::uint32_t rest = mask_n32(p.n) & ~(1u << drop);
        for (int j = 0; j < p.n; ++j) q.below[j] &= rest;
        order = detail::linear_extension(q);
        order.erase(std::find(order.begin(), order.end(), drop));
      }
      return {true, drop, std::move(order)};
    }
  }
  return {false, -1, {}};
}

// All maximal matched complete bipartite blocks of size >= 2. Mutual
// adjacency i~j means both cross edges {x_i,y_j}, {x_j,y_i} exist; blocks
// are the maximal cliques of that relation. Pairwise disjointness holds for
// graphs in an unmixed labeling and is validated.
inline std::vector<KmmBlock> find_kmm_blocks(const BipartiteGraph& g) {
  const int n = g.pairs;
  if (!g.matched())
    throw precondition_error("block search needs a matched labeling");
  std::vector<std::uint64_t> sym(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j) && g.has_edge(j, i)) sym[i] |= 1ull << j;
  std::vector<std::uint64_t> cliques;
  detail::bron_kerbosch(0, mask_n64(n), 0, sym, cliques);
  std::vector<KmmBlock> blocks;
  for (std::uint64_t c : cliques)
    if (std::popcount(c) >= 2)
      blocks.push_back({static_cast<std::uint32_t>(c)});
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      if (blocks[a].indices & blocks[b].indices)
        throw overlap_error("maximal complete bipartite blocks overlap");
  return blocks;
}

// Delete all but one pair of each block, keeping the block's largest index.
inline BipartiteGraph reduce_graph(const BipartiteGraph& g,
                                   const std::vector<KmmBlock>& blocks) {
  std::uint32_t keep = mask_n32(g.pairs);
  for (const auto& block : blocks)
    keep &= ~(block.indices & ~(1u << block.max_index()));
  return induced_subgraph(g, keep);
}

// Pair indices (0-based, ascending) surviving the reduction.
inline std::vector<int> reduction_kept(const BipartiteGraph& g,
                                       const std::vector<KmmBlock>& blocks) {
  std::uint32_t keep = mask_n32(g.pairs);
  for (const auto& block : blocks)
    keep &= ~(block.indices & ~(1u << block.max_index()));
  std::vector<int> kept;
  for (std::uint32_t bits = keep; bits; bits &= bits - 1)
    kept.push_back(std::countr_zero(bits));
  return kept;
}

enum class Verdict {
  almost_complete_cm,             // the graph itself passes the chain test
  reduces_to_almost_complete_cm,  // it passes after block reduction
  not_freiman,
};

struct Classification {
  Verdict verdict = Verdict::not_freiman;
  std::vector<KmmBlock> blocks;
  // Certificate when the verdict is Freiman: pair to delete (reduced-graph
  // index, 0-based) and the resulting total order.
  std::optional<AlmostCmResult> chain_witness;
  BipartiteGraph reduced;
  std::vector<int> kept;  // original pair indices of the reduced graph
};

// The structural Freiman decision: remove all matched complete bipartite
// blocks, then test almost-complete-C-M on what is left. Requires a
// connected unmixed graph in its unmixedness-witnessing labeling.
inline Classification classify_structural(const BipartiteGraph& g,
                                          const Limits& limits = {}) {
  if (!is_connected(g))
    throw precondition_error("structural classification needs a connected graph");
  if (!detail::matched_transitive(g))
    throw precondition_error(
        "structural classification needs the unmixed labeling");
  if (!is_unmixed(g, limits).unmixed)
    throw precondition_error("structural classification needs an unmixed graph");

  Classification result;
  result.blocks = find_kmm_blocks(g);
  result.reduced = reduce_graph(g, result.blocks);
  result.kept = reduction_kept(g, result.blocks);

  if (!is_connected(result.reduced) ||
      !is_unmixed(result.reduced, limits).unmixed)
    throw consistency_error(
        "block reduction left a disconnected or mixed graph");
  auto cm = is_cm(result.reduced);
  if (!cm.cm)
    throw consistency_error(
        "block reduction left an induced matched K_{2,2}");

  auto almost = is_almost_complete_cm(result.reduced);
  if (almost.almost) {
    result.verdict = result.blocks.empty()
                         ? Verdict::almost_complete_cm
                         : Verdict::reduces_to_almost_complete_cm;
    // Re-validate the certificate on the reduced graph before handing it out.
    std::uint32_t rest = mask_n32(result.reduced.pairs) &
                         ~(1u << almost.deleted_index);
    if (rest != 0) {
      auto sub = poset_from_graph(induced_subgraph(result.reduced, rest));
      if (!sub.poset || !is_chain(*sub.poset))
        throw consistency_error("chain certificate failed re-validation");
    }
    result.chain_witness = std::move(almost);
  } else {
    result.verdict = Verdict::not_freiman;
  }
  return result;
}

struct BijectionResult {
  bool ok = false;
  // A cover for which the correspondence failed, when not ok.
  std::optional<MinimalCover> counterexample;
};

// Check the cover correspondence behind block reduction: mapping a cover C
// of the reduced graph to C plus the block's x-side (when x of the kept pair
// is in C) or the block's y-side (otherwise) is a bijection onto the covers
// of the original graph.
inline BijectionResult verify_cover_bijection(const BipartiteGraph& g,
                                              const KmmBlock& block,
                                              const Limits& limits = {}) {
  const int n = g.pairs;
  const int kept_index = block.max_index();
  std::uint32_t keep = mask_n32(n) & ~(block.indices & ~(1u << kept_index));
  BipartiteGraph h = induced_subgraph(g, keep);
  std::vector<int> old_of_new;
  for (std::uint32_t bits = keep; bits; bits &= bits - 1)
    old_of_new.push_back(std::countr_zero(bits));

  auto covers_g = minimal_vertex_covers(g, limits);
  auto covers_h = minimal_vertex_covers(h, limits);
  std::vector<MinimalCover> images;
  for (const auto& c : covers_h) {
    MinimalCover lifted{0, 0};
    for (int a = 0; a < h.pairs; ++a) {
      if (c.x_mask >> a & 1u) lifted.x_mask |= 1u << old_of_new[a];
      if (c.y_mask >> a & 1u) lifted.y_mask |= 1u << old_of_new[a];
    }
    if (lifted.x_mask >> kept_index & 1u)
      lifted.x_mask |= block.indices;
    else
      lifted.y_mask |= block.indices;
    if (!std::binary_search(covers_g.begin(), covers_g.end(), lifted))
      return {false, c};
    images.push_back(lifted);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return {false, std::nullopt};
  if (images.size() != covers_g.size()) {
    for (const auto& c : covers_g)
      if (!std::binary_search(images.begin(), images.end(), c))
        return {false, c};
    return {false, std::nullopt};
  }
  return {true, std::nullopt};
}

}  // namespace freiman
