#include "xipoly/enumerate.hpp"

namespace xipoly {

std::vector<std::pair<EdgeSubset, EdgeSubset>> enumerate_disjoint_pairs(const Multigraph& g) {
  struct Collector {
    std::size_t m;
    std::vector<std::pair<EdgeSubset, EdgeSubset>> out;

    void leaf(std::span<const EdgeRole> roles, const PairStats&) {
      EdgeSubset a(m);
      EdgeSubset b(m);
      for (std::size_t i = 0; i < m; ++i) {
        if (roles[i] == EdgeRole::a) a.insert(i);
        if (roles[i] == EdgeRole::b) b.insert(i);
      }
      out.emplace_back(std::move(a), std::move(b));
    }
  } collector{g.edge_count(), {}};
  for_each_disjoint_pair(g, collector);
  return std::move(collector.out);
}

std::uint64_t count_disjoint_pairs(const Multigraph& g) {
  struct Counter {
    std::uint64_t n = 0;
    void leaf(std::span<const EdgeRole>, const PairStats&) { ++n; }
  } counter;
  for_each_disjoint_pair(g, counter);
  return counter.n;
}

}  // namespace xipoly
