#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "xipoly/graph.hpp"

namespace xipoly {

enum class EdgeRole : std::uint8_t { none, a, b };

/// Statistics of one vertex-disjoint pair (A, B).
struct PairStats {
  std::size_t components = 0;          // k(A ∪ B)
  std::size_t covered_components = 0;  // k_cov(B)
  std::size_t edges_used = 0;          // |A| + |B|
};

namespace detail {

// Union-find with union by size and no path compression so that every
// merge can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Returns true when two components were merged; must be paired with undo().
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(kNoMerge);
      return false;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    if (b == kNoMerge) return;
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  static constexpr std::size_t kNoMerge = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

// Depth-first ternary walk over edges (none < A < B, edge 0 most
// significant), pruning any assignment that breaks vertex-disjointness.
// The visitor is either callable as f(roles, stats) or provides
// leaf(roles, stats); it may also provide
// descend(edge, role) / ascend(edge, role), called around every non-none
// choice.
template <class Visitor>
class DisjointPairWalker {
 public:
  DisjointPairWalker(const Multigraph& g, Visitor& visitor)
      : g_(g),
        visitor_(visitor),
        roles_(g.edge_count(), EdgeRole::none),
        cover_a_(g.vertex_count(), 0),
        cover_b_(g.vertex_count(), 0),
        uf_(g.vertex_count()) {}

  void run() { walk(0); }

 private:
  void walk(std::size_t i) {
    if (i == g_.edge_count()) {
      PairStats s;
      s.components = g_.vertex_count() - merges_;
      s.covered_components = covered_b_ - merges_b_;
      s.edges_used = used_;
      const std::span<const EdgeRole> roles(roles_);
      if constexpr (std::is_invocable_v<Visitor&, std::span<const EdgeRole>, const PairStats&>) {
        visitor_(roles, s);
      } else {
        visitor_.leaf(roles, s);
      }
      return;
    }
    const Edge& e = g_.edge(i);

    roles_[i] = EdgeRole::none;
    walk(i + 1);

    if (cover_b_[e.u] == 0 && cover_b_[e.v] == 0) {
      roles_[i] = EdgeRole::a;
      ++cover_a_[e.u];
      ++cover_a_[e.v];
      const bool merged = uf_.unite(e.u, e.v);
      merges_ += merged ? 1 : 0;
      ++used_;
      notify_descend(i, EdgeRole::a);
      walk(i + 1);
      notify_ascend(i, EdgeRole::a);
      --used_;
      merges_ -= merged ? 1 : 0;
      uf_.undo();
      --cover_a_[e.u];
      --cover_a_[e.v];
    }

    if (cover_a_[e.u] == 0 && cover_a_[e.v] == 0) {
      roles_[i] = EdgeRole::b;
      std::size_t newly = 0;
      if (cover_b_[e.u]++ == 0) ++newly;
      if (e.v != e.u && cover_b_[e.v]++ == 0) ++newly;
      covered_b_ += newly;
      const bool merged = uf_.unite(e.u, e.v);
      merges_ += merged ? 1 : 0;
      merges_b_ += merged ? 1 : 0;
      ++used_;
      notify_descend(i, EdgeRole::b);
      walk(i + 1);
      notify_ascend(i, EdgeRole::b);
      --used_;
      merges_b_ -= merged ? 1 : 0;
      merges_ -= merged ? 1 : 0;
      uf_.undo();
      covered_b_ -= newly;
      --cover_b_[e.u];
      if (e.v != e.u) --cover_b_[e.v];
    }
    roles_[i] = EdgeRole::none;
  }

  void notify_descend(std::size_t i, EdgeRole r) {
    if constexpr (requires { visitor_.descend(i, r); }) visitor_.descend(i, r);
  }

  void notify_ascend(std::size_t i, EdgeRole r) {
    if constexpr (requires { visitor_.ascend(i, r); }) visitor_.ascend(i, r);
  }

  const Multigraph& g_;
  Visitor& visitor_;
  std::vector<EdgeRole> roles_;
  std::vector<std::uint32_t> cover_a_;
  std::vector<std::uint32_t> cover_b_;
  RollbackUnionFind uf_;
  std::size_t merges_ = 0;    // successful unions over A ∪ B
  std::size_t merges_b_ = 0;  // successful unions over B alone
  std::size_t covered_b_ = 0;
  std::size_t used_ = 0;
};

}  // namespace detail

/// Visits every pair of vertex-disjoint edge sets (A, B) in ternary-counter
/// order. Since A and B share no vertex, the B-components inside (V, A ∪ B)
/// are exactly the components of (V(B), B).
template <class Visitor>
void for_each_disjoint_pair(const Multigraph& g, Visitor&& visitor) {
  detail::DisjointPairWalker<std::remove_reference_t<Visitor>> walker(g, visitor);
  walker.run();
}

/// Materialized list of all vertex-disjoint pairs (A, B), in the order of
/// for_each_disjoint_pair.
std::vector<std::pair<EdgeSubset, EdgeSubset>> enumerate_disjoint_pairs(const Multigraph& g);

/// Number of vertex-disjoint pairs, without materializing them.
std::uint64_t count_disjoint_pairs(const Multigraph& g);

}  // namespace xipoly
