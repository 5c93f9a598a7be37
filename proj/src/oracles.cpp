#include "xipoly/oracles.hpp"

#include <functional>
#include <string>

#include "xipoly/error.hpp"

namespace xipoly::oracles {

namespace {

void require(bool ok, const std::string& what, std::size_t value, std::size_t cap) {
  if (!ok) {
    throw oracle_too_large(what + " " + std::to_string(value) + " exceeds oracle cap " +
                           std::to_string(cap));
  }
}

void check_vertices(const Multigraph& g, const OracleCaps& caps) {
  require(g.vertex_count() <= caps.max_vertices, "vertex count", g.vertex_count(), caps.max_vertices);
}

void check_edges(const Multigraph& g, const OracleCaps& caps) {
  require(g.edge_count() <= caps.max_edges, "edge count", g.edge_count(), caps.max_edges);
}

// Components of the graph on `vertices` using the edges flagged in `use`,
// by depth-first search over an adjacency list built from scratch.
std::size_t count_components(std::size_t n, const std::vector<Edge>& edges, const std::vector<bool>& use,
                             const std::vector<bool>& vertices) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!use[i]) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (!vertices[s] || seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

void check_vertex_cap(const Multigraph& g, const OracleCaps& caps) { check_vertices(g, caps); }

std::uint64_t count_generalized_colorings(const Multigraph& g, ColoringModel model, const OracleCaps& caps) {
  if (model.proper_colors > model.total_colors) {
    throw invalid_parameter("coloring model needs proper colors <= total colors");
  }
  require(model.total_colors <= caps.max_colors, "color count", model.total_colors, caps.max_colors);
  check_vertices(g, caps);

  const std::size_t n = g.vertex_count();
  const std::size_t x = model.total_colors;
  const std::size_t y = model.proper_colors;
  if (n == 0) return 1;
  if (x == 0) return 0;

  // colors are 0..x-1 here; 0..y-1 are proper
  std::vector<std::size_t> color(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (color[e.u] == color[e.v] && color[e.u] < y) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++color[i] == x) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::uint64_t count_proper_colorings(const Multigraph& g, std::size_t colors, const OracleCaps& caps) {
  return count_generalized_colorings(g, {colors, colors}, caps);
}

std::vector<std::uint64_t> independent_set_profile(const Multigraph& g, const OracleCaps& caps) {
  check_vertices(g, caps);
  require(g.vertex_count() <= 30, "vertex count", g.vertex_count(), 30);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> profile(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges()) {
      if (((mask >> e.u) & 1U) && ((mask >> e.v) & 1U)) {
        independent = false;
        break;
      }
    }
    if (independent) ++profile[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  return profile;
}

MultiPoly3 xi_reference(const Multigraph& g, const OracleCaps& caps) {
  check_edges(g, caps);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto& edges = g.edges();
  MultiPoly3 result;

  std::vector<bool> in_a(m, false);
  std::vector<bool> in_b(m, false);

  std::function<void(std::size_t, std::vector<bool>, std::vector<bool>)> branch =
      [&](std::size_t i, std::vector<bool> covered_a, std::vector<bool> covered_b) {
        if (i == m) {
          std::vector<bool> in_union(m);
          std::size_t size = 0;
          for (std::size_t j = 0; j < m; ++j) {
            in_union[j] = in_a[j] || in_b[j];
            if (in_union[j]) ++size;
          }
          const std::size_t k = count_components(n, edges, in_union, std::vector<bool>(n, true));
          const std::size_t k_cov = count_components(n, edges, in_b, covered_b);
          result.add_term({static_cast<std::uint32_t>(k - k_cov), static_cast<std::uint32_t>(size - k_cov),
                           static_cast<std::uint32_t>(k_cov)},
                          Rational(1));
          return;
        }
        const Edge& e = edges[i];
        branch(i + 1, covered_a, covered_b);
        if (!covered_b[e.u] && !covered_b[e.v]) {
          auto next = covered_a;
          next[e.u] = next[e.v] = true;
          in_a[i] = true;
          branch(i + 1, next, covered_b);
          in_a[i] = false;
        }
        if (!covered_a[e.u] && !covered_a[e.v]) {
          auto next = covered_b;
          next[e.u] = next[e.v] = true;
          in_b[i] = true;
          branch(i + 1, covered_a, next);
          in_b[i] = false;
        }
      };
  branch(0, std::vector<bool>(n, false), std::vector<bool>(n, false));
  return result;
}

Rational potts_direct(const Multigraph& g, const Rational& q, const Rational& v, const OracleCaps& caps) {
  check_edges(g, caps);
  require(g.edge_count() <= 30, "edge count", g.edge_count(), 30);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  Rational sum;
  std::vector<bool> use(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t size = 0;
    for (std::size_t j = 0; j < m; ++j) {
      use[j] = ((mask >> j) & 1U) != 0;
      if (use[j]) ++size;
    }
    const std::size_t k = count_components(n, g.edges(), use, std::vector<bool>(n, true));
    sum += pow(q, k) * pow(v, size);
  }
  return sum;
}

}  // namespace xipoly::oracles
