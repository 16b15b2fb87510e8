// Equigenerated monomial ideals as sets of exponent vectors: cover/Hibi/edge
// ideal constructions, powers, analytic spread by exact rank, and the Freiman
// defect mu(I^2) - (l*mu - C(l,2)).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freiman/covers.hpp"
#include "freiman/graph.hpp"

namespace freiman {

// A Freiman-style operation was asked of an ideal whose generators do not
// share a common degree.
class not_equigenerated_error : public error {
 public:
  using error::error;
};

using Exponents = std::vector<int>;

// Monomial ideal given by the exponent vectors of its minimal generators,
// kept sorted and deduplicated. For generators of one common degree,
// distinctness is minimality.
struct MonomialIdeal {
  int n_vars = 0;
  std::vector<Exponents> gens;

  long long mu() const { return static_cast<long long>(gens.size()); }

  int degree_of(std::size_t k) const {
    return std::accumulate(gens[k].begin(), gens[k].end(), 0);
  }

  bool equigenerated() const {
    if (gens.empty()) return true;
    int d = degree_of(0);
    for (std::size_t k = 1; k < gens.size(); ++k)
      if (degree_of(k) != d) return false;
    return true;
  }

  // Common generator degree; -1 when mixed or empty.
  int degree() const {
    if (gens.empty() || !equigenerated()) return -1;
    return degree_of(0);
  }

  bool operator==(const MonomialIdeal&) const = default;
};

inline MonomialIdeal make_ideal(int n_vars, std::vector<Exponents> gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n_vars)
      throw precondition_error("generator length does not match n_vars");
    for (int e : g)
      if (e < 0) throw precondition_error("negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return {n_vars, std::move(gens)};
}

namespace detail {

struct ExponentsHash {
  std::size_t operator()(const Exponents& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : v) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Exponents cover_exponents(int n, const MinimalCover& c) {
  Exponents e(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (c.x_mask >> i & 1u) e[i] = 1;
    if (c.y_mask >> i & 1u) e[n + i] = 1;
  }
  return e;
}

}  // namespace detail

// One squarefree generator per minimal cover: the product of its vertices.
// For an unmixed graph all generators have degree n; otherwise the ideal is
// still returned and its equigenerated() flag is off.
inline MonomialIdeal cover_ideal(const BipartiteGraph& g,
                                 const Limits& limits = {}) {
  auto covers = minimal_vertex_covers(g, limits);
  std::vector<Exponents> gens;
  gens.reserve(covers.size());
  for (const auto& c : covers)
    gens.push_back(detail::cover_exponents(g.pairs, c));
  return make_ideal(2 * g.pairs, std::move(gens));
}

// One generator per down-closed set J: x_p over J times y_p over the rest.
inline MonomialIdeal hibi_ideal(const Poset& p, const Limits& limits = {}) {
  auto ideals = poset_ideals(p, limits);
  std::vector<Exponents> gens;
  gens.reserve(ideals.size());
  for (std::uint32_t j : ideals)
    gens.push_back(detail::cover_exponents(
        p.n, {j, mask_n32(p.n) & ~j}));
  return make_ideal(2 * p.n, std::move(gens));
}

// x_i * y_j per edge.
inline MonomialIdeal edge_ideal(const BipartiteGraph& g) {
  std::vector<Exponents> gens;
  for (auto [i, j] : g.edge_list()) {
    Exponents e(2 * g.pairs, 0);
    e[i] += 1;
    e[g.pairs + j] += 1;
    gens.push_back(std::move(e));
  }
  return make_ideal(2 * g.pairs, std::move(gens));
}

namespace detail {

inline long long multiset_count(long long m, int k) {
  // C(m+k-1, k), saturating at a sentinel past any sane work bound.
  long long result = 1;
  for (int t = 1; t <= k; ++t) {
    result = result * (m + t - 1) / t;
    if (result > (1ll << 60)) return 1ll << 60;
  }
  return result;
}

}  // namespace detail

struct PowerResult {
  long long count = 0;     // mu(I^k)
  MonomialIdeal power;     // its generators
};

// Distinct sums of k generators with repetition. Distinctness is minimality
// because every product has the same total degree. Deduplicates through a
// hash set, then sorts and verifies the two agree.
inline PowerResult power_mu(const MonomialIdeal& ideal, int k,
                            const Limits& limits = {}) {
  if (k < 1) throw precondition_error("power must be >= 1");
  const long long work = detail::multiset_count(ideal.mu(), k);
  if (work > limits.max_power_work)
    throw bound_error("power computation work bound exceeded: " +
                      std::to_string(work) + " sums");
  std::unordered_set<Exponents, detail::ExponentsHash> seen;
  Exponents acc(ideal.n_vars, 0);
  auto dfs = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      seen.insert(acc);
      return;
    }
    for (std::size_t g = start; g < ideal.gens.size(); ++g) {
      for (int v = 0; v < ideal.n_vars; ++v) acc[v] += ideal.gens[g][v];
      self(self, g, remaining - 1);
      for (int v = 0; v < ideal.n_vars; ++v) acc[v] -= ideal.gens[g][v];
    }
  };
  dfs(dfs, 0, k);
  std::vector<Exponents> sums(seen.begin(), seen.end());
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end())
    throw consistency_error("hash deduplication produced duplicates");
  PowerResult out;
  out.count = static_cast<long long>(sums.size());
  out.power = MonomialIdeal{ideal.n_vars, std::move(sums)};
  return out;
}

// --------------------------------------------------------------------------
// Exact rank of the generator exponent matrix (fraction-free elimination:
// one-step division by the previous pivot stays integral). Entries can grow
// like minors, so the int64 path watches for overflow and the computation
// restarts with arbitrary-precision integers when it would wrap.
// --------------------------------------------------------------------------
namespace detail {

inline std::optional<int> rank_int64(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  long long prev = 1;
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
      for (int c = col + 1; c < cols; ++c) {
        __int128 t = static_cast<__int128>(m[r][c]) * m[rank][col] -
                     static_cast<__int128>(m[r][col]) * m[rank][c];
        t /= prev;  // exact by the fraction-free invariant
        if (t > INT64_MAX || t < INT64_MIN) return std::nullopt;
        m[r][c] = static_cast<long long>(t);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

inline int rank_bigint(const std::vector<std::vector<long long>>& input) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> m(input.size());
  for (std::size_t r = 0; r < input.size(); ++r)
    m[r].assign(input[r].begin(), input[r].end());
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  cpp_int prev = 1;
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
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline int exponent_matrix_rank(const MonomialIdeal& ideal) {
  std::vector<std::vector<long long>> m;
  m.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) m.emplace_back(g.begin(), g.end());
  if (auto rank = detail::rank_int64(m)) return *rank;
  return detail::rank_bigint(m);
}

// Analytic spread of an equigenerated monomial ideal: the rank over Q of the
// matrix whose rows are the generator exponent vectors.
inline int analytic_spread(const MonomialIdeal& ideal) {
  if (!ideal.equigenerated())
    throw not_equigenerated_error(
        "analytic spread is defined here only for equigenerated ideals");
  return exponent_matrix_rank(ideal);
}

inline long long binomial(long long n, int k) {
  if (k < 0 || n < k) return 0;
  long long result = 1;
  for (int t = 1; t <= k; ++t) result = result * (n - k + t) / t;
  return result;
}

// Closed form mu(I^k) takes for a Freiman ideal:
//   C(l+k-2, k-1) * mu - (k-1) * C(l+k-2, k)
inline long long mu_power_expected(int ell, long long mu, int k) {
  if (ell < 1 || mu < 1 || k < 2)
    throw precondition_error("mu_power_expected needs ell, mu >= 1 and k >= 2");
  return binomial(ell + k - 2, k - 1) * mu -
         static_cast<long long>(k - 1) * binomial(ell + k - 2, k);
}

struct FreimanReport {
  long long mu = 0;
  long long mu2 = 0;
  int ell = 0;
  long long bound = 0;       // l*mu - C(l,2)
  long long deficiency = 0;  // mu2 - bound, >= 0 always
  bool is_freiman = false;

  bool operator==(const FreimanReport&) const = default;
};

// mu, mu(I^2), analytic spread, and the defect against the lower bound
// mu(I^2) >= l*mu - C(l,2). A negative defect is a computation bug: the
// bound is a theorem.
inline FreimanReport freiman_report(const MonomialIdeal& ideal,
                                    const Limits& limits = {}) {
  if (!ideal.equigenerated())
    throw not_equigenerated_error(
        "the Freiman condition is defined only for equigenerated ideals");
  if (ideal.gens.empty())
    throw precondition_error("Freiman report needs a nonzero ideal");
  FreimanReport r;
  r.mu = ideal.mu();
  r.mu2 = power_mu(ideal, 2, limits).count;
  r.ell = analytic_spread(ideal);
  r.bound = static_cast<long long>(r.ell) * r.mu - binomial(r.ell, 2);
  r.deficiency = r.mu2 - r.bound;
  if (r.deficiency < 0)
    throw consistency_error("lower bound violated: mu(I^2) < l*mu - C(l,2)");
  r.is_freiman = r.deficiency == 0;
  return r;
}

// All pairwise generator sums. Factors must live in the same variable ring
// with disjoint supports; the self-product (the square) is the exception.
inline MonomialIdeal product_ideal(const MonomialIdeal& a,
                                   const MonomialIdeal& b) {
  if (a.n_vars != b.n_vars)
    throw precondition_error("product factors must share the variable ring");
  if (!(a == b)) {
    for (int v = 0; v < a.n_vars; ++v) {
      bool in_a = false, in_b = false;
      for (const auto& g : a.gens) in_a = in_a || g[v] > 0;
      for (const auto& g : b.gens) in_b = in_b || g[v] > 0;
      if (in_a && in_b)
        throw precondition_error(
            "product factors must have disjoint variable supports");
    }
  }
  std::vector<Exponents> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const auto& ga : a.gens)
    for (const auto& gb : b.gens) {
      Exponents e(a.n_vars);
      for (int v = 0; v < a.n_vars; ++v) e[v] = ga[v] + gb[v];
      gens.push_back(std::move(e));
    }
  return make_ideal(a.n_vars, std::move(gens));
}

// --------------------------------------------------------------------------
// Ideal exchange format:
//   vars <n_vars> deg <degree>
//   <e_1> ... <e_{n_vars}>        one generator per line
// --------------------------------------------------------------------------

inline std::string write_ideal(const MonomialIdeal& ideal) {
  if (!ideal.equigenerated() || ideal.gens.empty())
    throw not_equigenerated_error(
        "exchange format requires a nonzero equigenerated ideal");
  std::string out = "vars " + std::to_string(ideal.n_vars) + " deg " +
                    std::to_string(ideal.degree()) + "\n";
  for (const auto& g : ideal.gens) {
    for (int v = 0; v < ideal.n_vars; ++v) {
      if (v) out += ' ';
      out += std::to_string(g[v]);
    }
    out += '\n';
  }
  return out;
}

inline MonomialIdeal read_ideal(std::string_view text) {
  int line_no = 0;
  std::size_t pos = 0;
  int n_vars = -1, degree = -1;
  std::vector<Exponents> gens;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (n_vars < 0) {
      if (toks.size() != 4 || toks[0] != "vars" || toks[2] != "deg")
        throw parse_error(line_no, "expected: vars <n> deg <d>");
      auto v = detail::to_int(toks[1]);
      auto d = detail::to_int(toks[3]);
      if (!v || *v < 1 || !d || *d < 0)
        throw parse_error(line_no, "malformed exchange header");
      n_vars = static_cast<int>(*v);
      degree = static_cast<int>(*d);
      continue;
    }
    if (static_cast<int>(toks.size()) != n_vars)
      throw parse_error(line_no, "expected " + std::to_string(n_vars) +
                                     " exponents");
    Exponents e(n_vars);
    int total = 0;
    for (int v = 0; v < n_vars; ++v) {
      auto val = detail::to_int(toks[v]);
      if (!val || *val < 0) throw parse_error(line_no, "malformed exponent");
      e[v] = static_cast<int>(*val);
      total += e[v];
    }
    if (total != degree)
      throw parse_error(line_no, "generator degree differs from header");
    gens.push_back(std::move(e));
  }
  if (n_vars < 0) throw parse_error(line_no, "missing exchange header");
  if (gens.empty()) throw parse_error(line_no, "no generators");
  return make_ideal(n_vars, std::move(gens));
}

}  // namespace freiman
