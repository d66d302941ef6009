#include <algorithm>
#include <optional>
#include <sstream>

#include "difflat/enumeration.hpp"

namespace difflat {
namespace {

using Coloring = std::vector<std::int64_t>;

struct Graph {
  std::vector<Weight> weight;
  std::vector<std::vector<std::uint32_t>> lower;
  std::vector<std::vector<std::uint32_t>> upper;
};

std::size_t count_colors(const Coloring& colors) {
  Coloring sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Replaces each key by its rank among the distinct keys.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Coloring out(keys.size(), 0);
  std::int64_t rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && keys[order[k - 1]] < keys[order[k]]) {
      ++rank;
    }
    out[order[k]] = rank;
  }
  return out;
}

// Colour refinement on the cover DAG, separating lower and upper
// neighbourhoods. Each new colour is ordered by (old colour, signature), so
// the ordered partition only ever splits.
void refine(const Graph& g, Coloring& colors) {
  const std::size_t n = colors.size();
  std::size_t cells = count_colors(colors);
  while (true) {
    std::vector<std::vector<std::int64_t>> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.push_back(colors[v]);
      std::vector<std::int64_t> lo;
      for (auto u : g.lower[v]) lo.push_back(colors[u]);
      std::sort(lo.begin(), lo.end());
      key.push_back(static_cast<std::int64_t>(lo.size()));
      key.insert(key.end(), lo.begin(), lo.end());
      std::vector<std::int64_t> hi;
      for (auto u : g.upper[v]) hi.push_back(colors[u]);
      std::sort(hi.begin(), hi.end());
      key.push_back(static_cast<std::int64_t>(hi.size()));
      key.insert(key.end(), hi.begin(), hi.end());
    }
    colors = rank_keys(keys);
    const std::size_t next = count_colors(colors);
    if (next == cells) {
      return;
    }
    cells = next;
  }
}

std::vector<std::int64_t> encode(const Graph& g, const Coloring& colors) {
  const std::size_t n = colors.size();
  std::vector<std::size_t> at(n);
  for (std::size_t v = 0; v < n; ++v) {
    at[static_cast<std::size_t>(colors[v])] = v;
  }
  std::vector<std::int64_t> code;
  code.push_back(static_cast<std::int64_t>(n));
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t v = at[pos];
    code.push_back(g.weight[v]);
    std::vector<std::int64_t> lo;
    for (auto u : g.lower[v]) lo.push_back(colors[u]);
    std::sort(lo.begin(), lo.end());
    code.push_back(static_cast<std::int64_t>(lo.size()));
    code.insert(code.end(), lo.begin(), lo.end());
  }
  return code;
}

bool twins(const Graph& g, std::size_t a, std::size_t b) {
  return g.weight[a] == g.weight[b] && g.lower[a] == g.lower[b] &&
         g.upper[a] == g.upper[b];
}

// Individualisation/refinement over every branch; the minimum leaf code is
// the canonical form. Twins (identical weight and neighbourhoods) in the
// target cell give isomorphic subtrees, so only one per class is explored.
void search(const Graph& g, Coloring colors,
            std::optional<std::vector<std::int64_t>>& best) {
  refine(g, colors);
  const std::size_t n = colors.size();
  if (count_colors(colors) == n) {
    auto code = encode(g, colors);
    if (!best || code < *best) {
      best = std::move(code);
    }
    return;
  }
  // First non-singleton cell in colour order.
  std::vector<std::size_t> cell_size(n, 0);
  for (auto c : colors) ++cell_size[static_cast<std::size_t>(c)];
  std::int64_t target = 0;
  while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;

  std::vector<std::size_t> tried;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    const bool redundant = std::any_of(tried.begin(), tried.end(),
                                       [&](std::size_t t) { return twins(g, t, v); });
    if (redundant) continue;
    tried.push_back(v);
    Coloring next(n);
    for (std::size_t u = 0; u < n; ++u) {
      next[u] = 2 * colors[u] + ((u == v || colors[u] != target) ? 0 : 1);
    }
    search(g, rank_keys(next), best);
  }
}

}  // namespace

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < code.size(); ++i) {
    os << (i > 0 ? "." : "") << code[i];
  }
  return os.str();
}

CanonicalForm canonical_form(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n > kCanonicalFormMaxPoints) {
    throw PosetError("canonical form size guard: " + std::to_string(n) +
                     " points exceeds " + std::to_string(kCanonicalFormMaxPoints));
  }
  Graph g;
  g.weight.resize(n);
  g.lower.resize(n);
  g.upper.resize(n);
  for (PointId p : poset.ids()) {
    g.weight[p.value] = poset.weight(p);
    for (PointId q : poset.lower_covers(p)) g.lower[p.value].push_back(q.value);
    for (PointId q : poset.upper_covers(p)) g.upper[p.value].push_back(q.value);
    std::sort(g.lower[p.value].begin(), g.lower[p.value].end());
    std::sort(g.upper[p.value].begin(), g.upper[p.value].end());
  }
  CanonicalForm form;
  if (n == 0) {
    form.code = {0};
    return form;
  }
  std::optional<std::vector<std::int64_t>> best;
  search(g, rank_keys(g.weight), best);
  form.code = std::move(*best);
  return form;
}

}  // namespace difflat
