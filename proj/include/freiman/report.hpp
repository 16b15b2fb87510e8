// Whole-pipeline report for one graph (pairing, unmixedness, direct Freiman
// computation, structural classification, certificates) plus the exhaustive
// corpus cross-check. Text and structured renderings carry identical numeric
// content and parse back to identical reports.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "freiman/classify.hpp"
#include "freiman/covers.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideal.hpp"

namespace freiman {

struct Report {
  int n_left = 0;
  int n_right = 0;
  int edge_count = 0;
  bool pairing = false;
  std::vector<int> pair_labels;  // 1-based input right label paired with x_i
  bool connected = false;
  bool unmixed = false;
  std::optional<bool> cm;
  long long covers = 0;
  std::optional<FreimanReport> freiman;
  bool structural = false;
  std::optional<std::string> verdict;
  std::vector<std::vector<int>> blocks;  // 1-based pair indices per block
  std::vector<int> kept;                 // 1-based pair indices after reduction
  std::optional<int> chain_deleted;      // 1-based reduced-graph index
  std::vector<int> chain_order;          // 1-based reduced-graph indices
  std::string note;
  std::int64_t elapsed_us = 0;

  bool operator==(const Report&) const = default;
};

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::almost_complete_cm:
      return "almost-complete-cm";
    case Verdict::reduces_to_almost_complete_cm:
      return "reduces-to-almost-complete-cm";
    case Verdict::not_freiman:
      return "not-freiman";
  }
  return "not-freiman";
}

// Full pipeline: pairing, unmixedness (both routes), cover ideal and the
// direct Freiman report, and, when the graph is connected and unmixed, the
// structural classification. The two Freiman decisions must agree.
inline Report analyze(const RawBipartiteGraph& raw, const Limits& limits = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.n_left = raw.left_size;
  r.n_right = raw.right_size;
  r.edge_count = static_cast<int>(raw.edges.size());

  auto finish = [&t0](Report& rep) -> Report& {
    rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
  };

  auto labels = pairing_labels(raw);
  if (!labels) {
    r.note = "no perfect matching: the graph cannot be unmixed";
    return finish(r);
  }
  r.pairing = true;
  BipartiteGraph g = *find_pairing(raw);

  // Move to the labeling witnessing unmixedness when there is one; x-labels
  // never change, so pair indices in certificates stay meaningful.
  auto sigma = unmixed_pairing(g);
  if (sigma) {
    g = *unmixed_labeling(g);
    r.pair_labels.resize(g.pairs);
    for (int c = 0; c < g.pairs; ++c)
      r.pair_labels[c] = (*labels)[(*sigma)[c]] + 1;
  } else {
    r.pair_labels.resize(g.pairs);
    for (int c = 0; c < g.pairs; ++c) r.pair_labels[c] = (*labels)[c] + 1;
  }

  r.connected = is_connected(g);
  auto covers = minimal_vertex_covers(g, limits);
  r.covers = static_cast<long long>(covers.size());
  r.unmixed = true;
  for (const auto& c : covers)
    if (c.size() != g.pairs) {
      r.unmixed = false;
      break;
    }
  if (r.unmixed != sigma.has_value())
    throw consistency_error(
        "direct and structural unmixedness checks disagree");

  if (!r.unmixed) {
    r.note = "not unmixed: cover ideal is not equigenerated";
    return finish(r);
  }

  r.freiman = freiman_report(cover_ideal(g, limits), limits);
  if (!r.connected) {
    r.note = "disconnected: structural theorem not applicable";
    return finish(r);
  }

  r.cm = is_cm(g).cm;
  auto cls = classify_structural(g, limits);
  r.structural = true;
  r.verdict = verdict_name(cls.verdict);
  for (const auto& block : cls.blocks) {
    std::vector<int> indices;
    for (std::uint32_t bits = block.indices; bits; bits &= bits - 1)
      indices.push_back(std::countr_zero(bits) + 1);
    r.blocks.push_back(std::move(indices));
  }
  for (int k : cls.kept) r.kept.push_back(k + 1);
  if (cls.chain_witness) {
    r.chain_deleted = cls.chain_witness->deleted_index + 1;
    for (int v : cls.chain_witness->order) r.chain_order.push_back(v + 1);
  }
  if ((cls.verdict != Verdict::not_freiman) != r.freiman->is_freiman)
    throw consistency_error(
        "structural and direct Freiman decisions disagree");
  return finish(r);
}

// 0 = Freiman, 1 = not Freiman, 2 = outside the structural hypotheses.
inline int exit_code(const Report& r) {
  if (r.structural && r.freiman) return r.freiman->is_freiman ? 0 : 1;
  return 2;
}

// --------------------------------------------------------------------------
// Text rendering: one `key: value` line per field, every key always present,
// `na` / `none` for absent values. Parses back exactly.
// --------------------------------------------------------------------------
namespace detail {

inline std::string int_list(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::vector<int> parse_int_list(std::string_view s, int line) {
  std::vector<int> out;
  if (s == "none") return out;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error(line, "expected a bracketed list");
  for (auto tok : split_ws(s.substr(1, s.size() - 2))) {
    auto v = to_int(tok);
    if (!v) throw parse_error(line, "malformed list entry");
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

}  // namespace detail

inline std::string render_text(const Report& r) {
  std::string out;
  out += "pairs: " + std::to_string(r.n_left) + " " +
         std::to_string(r.n_right) + "\n";
  out += "edges: " + std::to_string(r.edge_count) + "\n";
  out += "pairing: " + detail::yes_no(r.pairing) + "\n";
  out += "pair-labels: " + detail::int_list(r.pair_labels) + "\n";
  out += "connected: " + detail::yes_no(r.connected) + "\n";
  out += "unmixed: " + detail::yes_no(r.unmixed) + "\n";
  out += "cm: " + (r.cm ? detail::yes_no(*r.cm) : std::string("na")) + "\n";
  out += "covers: " + std::to_string(r.covers) + "\n";
  if (r.freiman) {
    out += "mu: " + std::to_string(r.freiman->mu) + "\n";
    out += "mu2: " + std::to_string(r.freiman->mu2) + "\n";
    out += "ell: " + std::to_string(r.freiman->ell) + "\n";
    out += "bound: " + std::to_string(r.freiman->bound) + "\n";
    out += "deficiency: " + std::to_string(r.freiman->deficiency) + "\n";
    out += "freiman: " + detail::yes_no(r.freiman->is_freiman) + "\n";
  } else {
    out += "mu: na\nmu2: na\nell: na\nbound: na\ndeficiency: na\nfreiman: na\n";
  }
  out += "structural: " + detail::yes_no(r.structural) + "\n";
  out += "verdict: " + (r.verdict ? *r.verdict : std::string("na")) + "\n";
  if (r.blocks.empty()) {
    out += "blocks: none\n";
  } else {
    out += "blocks:";
    for (const auto& b : r.blocks) out += " " + detail::int_list(b);
    out += "\n";
  }
  out += "kept: " + detail::int_list(r.kept) + "\n";
  out += "chain-deleted: " +
         (r.chain_deleted ? std::to_string(*r.chain_deleted)
                          : std::string("na")) +
         "\n";
  out += "chain-order: " + detail::int_list(r.chain_order) + "\n";
  out += "note: " + r.note + "\n";
  out += "elapsed-us: " + std::to_string(r.elapsed_us) + "\n";
  return out;
}

inline Report parse_report_text(std::string_view text) {
  Report r;
  int line_no = 0;
  std::size_t pos = 0;
  auto need_int = [](std::string_view s, int line) -> long long {
    auto v = detail::to_int(s);
    if (!v) throw parse_error(line, "expected an integer");
    return *v;
  };
  auto need_bool = [](std::string_view s, int line) -> bool {
    if (s == "yes") return true;
    if (s == "no") return false;
    throw parse_error(line, "expected yes or no");
  };
  bool have_mu = false;
  FreimanReport fr;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw parse_error(line_no, "expected key: value");
    std::string_view key = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (key == "pairs") {
      auto toks = detail::split_ws(value);
      if (toks.size() != 2) throw parse_error(line_no, "expected two sizes");
      r.n_left = static_cast<int>(need_int(toks[0], line_no));
      r.n_right = static_cast<int>(need_int(toks[1], line_no));
    } else if (key == "edges") {
      r.edge_count = static_cast<int>(need_int(value, line_no));
    } else if (key == "pairing") {
      r.pairing = need_bool(value, line_no);
    } else if (key == "pair-labels") {
      r.pair_labels = detail::parse_int_list(value, line_no);
    } else if (key == "connected") {
      r.connected = need_bool(value, line_no);
    } else if (key == "unmixed") {
      r.unmixed = need_bool(value, line_no);
    } else if (key == "cm") {
      if (value != "na") r.cm = need_bool(value, line_no);
    } else if (key == "covers") {
      r.covers = need_int(value, line_no);
    } else if (key == "mu") {
      if (value != "na") {
        fr.mu = need_int(value, line_no);
        have_mu = true;
      }
    } else if (key == "mu2") {
      if (value != "na") fr.mu2 = need_int(value, line_no);
    } else if (key == "ell") {
      if (value != "na") fr.ell = static_cast<int>(need_int(value, line_no));
    } else if (key == "bound") {
      if (value != "na") fr.bound = need_int(value, line_no);
    } else if (key == "deficiency") {
      if (value != "na") fr.deficiency = need_int(value, line_no);
    } else if (key == "freiman") {
      if (value != "na") fr.is_freiman = need_bool(value, line_no);
    } else if (key == "structural") {
      r.structural = need_bool(value, line_no);
    } else if (key == "verdict") {
      if (value != "na") r.verdict = std::string(value);
    } else if (key == "blocks") {
      if (value != "none") {
        std::size_t p = 0;
        while (p < value.size()) {
          while (p < value.size() && value[p] == ' ') ++p;
          if (p >= value.size()) break;
          std::size_t close = value.find(']', p);
          if (value[p] != '[' || close == std::string_view::npos)
            throw parse_error(line_no, "malformed block list");
          r.blocks.push_back(detail::parse_int_list(
              value.substr(p, close - p + 1), line_no));
          p = close + 1;
        }
      }
    } else if (key == "kept") {
      r.kept = detail::parse_int_list(value, line_no);
    } else if (key == "chain-deleted") {
      if (value != "na")
        r.chain_deleted = static_cast<int>(need_int(value, line_no));
    } else if (key == "chain-order") {
      r.chain_order = detail::parse_int_list(value, line_no);
    } else if (key == "note") {
      r.note = std::string(value);
    } else if (key == "elapsed-us") {
      r.elapsed_us = need_int(value, line_no);
    } else {
      throw parse_error(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (have_mu) r.freiman = fr;
  return r;
}

// --------------------------------------------------------------------------
// Structured (JSON) rendering of the same content.
// --------------------------------------------------------------------------

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["graph"]["pairs"] = {r.n_left, r.n_right};
  j["graph"]["edges"] = r.edge_count;
  j["graph"]["pairing"] = r.pairing;
  j["graph"]["pair_labels"] = r.pair_labels;
  j["graph"]["connected"] = r.connected;
  j["graph"]["unmixed"] = r.unmixed;
  j["graph"]["cm"] = r.cm ? nlohmann::json(*r.cm) : nlohmann::json(nullptr);
  j["covers"] = r.covers;
  if (r.freiman) {
    j["freiman"] = {{"mu", r.freiman->mu},
                    {"mu2", r.freiman->mu2},
                    {"ell", r.freiman->ell},
                    {"bound", r.freiman->bound},
                    {"deficiency", r.freiman->deficiency},
                    {"is_freiman", r.freiman->is_freiman}};
  } else {
    j["freiman"] = nullptr;
  }
  if (r.structural) {
    j["structural"] = {{"verdict", *r.verdict},
                       {"blocks", r.blocks},
                       {"kept", r.kept},
                       {"chain_deleted",
                        r.chain_deleted ? nlohmann::json(*r.chain_deleted)
                                        : nlohmann::json(nullptr)},
                       {"chain_order", r.chain_order}};
  } else {
    j["structural"] = nullptr;
  }
  j["note"] = r.note;
  j["elapsed_us"] = r.elapsed_us;
  return j;
}

inline std::string render_json(const Report& r) {
  return report_to_json(r).dump(2) + "\n";
}

inline Report parse_report_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  const auto& g = j.at("graph");
  r.n_left = g.at("pairs").at(0).get<int>();
  r.n_right = g.at("pairs").at(1).get<int>();
  r.edge_count = g.at("edges").get<int>();
  r.pairing = g.at("pairing").get<bool>();
  r.pair_labels = g.at("pair_labels").get<std::vector<int>>();
  r.connected = g.at("connected").get<bool>();
  r.unmixed = g.at("unmixed").get<bool>();
  if (!g.at("cm").is_null()) r.cm = g.at("cm").get<bool>();
  r.covers = j.at("covers").get<long long>();
  if (!j.at("freiman").is_null()) {
    const auto& f = j.at("freiman");
    r.freiman = FreimanReport{f.at("mu").get<long long>(),
                              f.at("mu2").get<long long>(),
                              f.at("ell").get<int>(),
                              f.at("bound").get<long long>(),
                              f.at("deficiency").get<long long>(),
                              f.at("is_freiman").get<bool>()};
  }
  if (!j.at("structural").is_null()) {
    const auto& s = j.at("structural");
    r.structural = true;
    r.verdict = s.at("verdict").get<std::string>();
    r.blocks = s.at("blocks").get<std::vector<std::vector<int>>>();
    r.kept = s.at("kept").get<std::vector<int>>();
    if (!s.at("chain_deleted").is_null())
      r.chain_deleted = s.at("chain_deleted").get<int>();
    r.chain_order = s.at("chain_order").get<std::vector<int>>();
  }
  r.note = j.at("note").get<std::string>();
  r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  return r;
}

// --------------------------------------------------------------------------
// Graph input helpers shared by the CLI and tests.
// --------------------------------------------------------------------------

inline std::string write_graph(const BipartiteGraph& g) {
  std::string out = "n " + std::to_string(g.pairs) + "\n";
  for (auto [i, j] : g.edge_list())
    out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

// Structured graph input: {"n": <pairs>, "edges": [[i, j], ...]} (1-based).
inline RawBipartiteGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw parse_error(0, "expected an object with fields n and edges");
  if (!j["n"].is_number_integer())
    throw parse_error(0, "n must be an integer");
  long long n = j["n"].get<long long>();
  if (n < 1) throw parse_error(0, "pair count must be positive");
  if (n > max_pairs)
    throw parse_error(0, "pair count exceeds supported maximum of " +
                             std::to_string(max_pairs));
  RawBipartiteGraph g;
  g.left_size = g.right_size = static_cast<int>(n);
  int entry = 0;
  for (const auto& e : j["edges"]) {
    ++entry;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw parse_error(0, "edge " + std::to_string(entry) +
                               " must be a pair of integers");
    long long i = e[0].get<long long>(), k = e[1].get<long long>();
    if (i < 1 || i > n || k < 1 || k > n)
      throw parse_error(0, "edge " + std::to_string(entry) +
                               ": index out of range");
    std::pair<int, int> edge{static_cast<int>(i) - 1, static_cast<int>(k) - 1};
    if (std::find(g.edges.begin(), g.edges.end(), edge) != g.edges.end())
      throw parse_error(0, "edge " + std::to_string(entry) + ": duplicate");
    g.edges.push_back(edge);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline RawBipartiteGraph load_graph(std::string_view content) {
  for (char c : content) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_graph_json(content);
    break;
  }
  return parse_graph(content);
}

// --------------------------------------------------------------------------
// Exhaustive corpus cross-check: over every matched graph with n <= max_n,
// filtered to connected and unmixed, the structural verdict must equal the
// direct deficiency-zero verdict.
// --------------------------------------------------------------------------

struct CorpusStratum {
  int n = 0;
  long long graphs = 0;
  long long connected_unmixed = 0;
  long long freiman = 0;
  long long not_freiman = 0;
};

struct CorpusSummary {
  int max_n = 0;
  long long graphs = 0;
  long long connected_unmixed = 0;
  long long freiman = 0;
  long long not_freiman = 0;
  std::vector<CorpusStratum> strata;
  std::vector<BipartiteGraph> disagreements;
};

inline CorpusSummary run_corpus(int max_n, const Limits& limits = {}) {
  CorpusSummary summary;
  summary.max_n = max_n;
  summary.strata.resize(max_n);
  for (int n = 1; n <= max_n; ++n) summary.strata[n - 1].n = n;
  GraphEnumerator en(max_n, limits);
  while (auto g = en.next()) {
    auto& stratum = summary.strata[g->pairs - 1];
    ++stratum.graphs;
    ++summary.graphs;
    if (!is_connected(*g)) continue;
    if (!is_unmixed(*g, limits).unmixed) continue;
    ++stratum.connected_unmixed;
    ++summary.connected_unmixed;
    BipartiteGraph canon = *unmixed_labeling(*g);
    auto direct = freiman_report(cover_ideal(canon, limits), limits);
    auto cls = classify_structural(canon, limits);
    bool structural = cls.verdict != Verdict::not_freiman;
    if (structural != direct.is_freiman) {
      summary.disagreements.push_back(*g);
      continue;
    }
    if (direct.is_freiman) {
      ++stratum.freiman;
      ++summary.freiman;
    } else {
      ++stratum.not_freiman;
      ++summary.not_freiman;
    }
  }
  return summary;
}

inline std::string render_corpus_text(const CorpusSummary& s) {
  std::string out;
  out += "corpus-max-n: " + std::to_string(s.max_n) + "\n";
  out += "graphs: " + std::to_string(s.graphs) + "\n";
  out += "connected-unmixed: " + std::to_string(s.connected_unmixed) + "\n";
  out += "freiman: " + std::to_string(s.freiman) + "\n";
  out += "not-freiman: " + std::to_string(s.not_freiman) + "\n";
  out += "disagreements: " + std::to_string(s.disagreements.size()) + "\n";
  for (const auto& st : s.strata)
    out += "n=" + std::to_string(st.n) + ": graphs " +
           std::to_string(st.graphs) + " connected-unmixed " +
           std::to_string(st.connected_unmixed) + " freiman " +
           std::to_string(st.freiman) + " not-freiman " +
           std::to_string(st.not_freiman) + "\n";
  for (const auto& g : s.disagreements)
    out += "disagreement:\n" + write_graph(g);
  return out;
}

inline std::string render_corpus_json(const CorpusSummary& s) {
  nlohmann::json j;
  j["max_n"] = s.max_n;
  j["graphs"] = s.graphs;
  j["connected_unmixed"] = s.connected_unmixed;
  j["freiman"] = s.freiman;
  j["not_freiman"] = s.not_freiman;
  j["disagreements"] = nlohmann::json::array();
  for (const auto& g : s.disagreements)
    j["disagreements"].push_back(write_graph(g));
  j["strata"] = nlohmann::json::array();
  for (const auto& st : s.strata)
    j["strata"].push_back({{"n", st.n},
                           {"graphs", st.graphs},
                           {"connected_unmixed", st.connected_unmixed},
                           {"freiman", st.freiman},
                           {"not_freiman", st.not_freiman}});
  return j.dump(2) + "\n";
}

// Listing of the cover ideal's k-th power in the exchange format, with the
// generator count, the analytic spread of the base ideal, and its Freiman
// bound appended.
inline std::string render_ideal_listing(const BipartiteGraph& g, int k,
                                        const Limits& limits = {}) {
  MonomialIdeal base = cover_ideal(g, limits);
  if (!base.equigenerated())
    throw not_equigenerated_error(
        "cover ideal is not equigenerated: the graph is not unmixed");
  auto power = k == 1 ? PowerResult{base.mu(), base} : power_mu(base, k, limits);
  int ell = analytic_spread(base);
  long long bound =
      static_cast<long long>(ell) * base.mu() - binomial(ell, 2);
  std::string out = write_ideal(power.power);
  out += "mu " + std::to_string(power.count) + "\n";
  out += "ell " + std::to_string(ell) + "\n";
  out += "bound " + std::to_string(bound) + "\n";
  return out;
}

}  // namespace freiman
