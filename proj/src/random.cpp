#include "xipoly/random.hpp"

#include <functional>
#include <limits>

#include "xipoly/error.hpp"

namespace xipoly {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw invalid_parameter("Rng::below needs a positive bound");
  // rejection sampling keeps the draw exactly uniform
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return r % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den) {
  const auto num = between(-max_num, max_num);
  const auto den = between(1, max_den);
  return Rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  Rational r = rational(max_num, max_den);
  while (r.is_zero()) r = rational(max_num, max_den);
  return r;
}

Multigraph random_multigraph(Rng& rng, std::size_t min_n, std::size_t max_n, std::size_t max_m) {
  const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(min_n),
                                                      static_cast<std::int64_t>(max_n)));
  const auto m = n == 0 ? 0 : static_cast<std::size_t>(rng.below(max_m + 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({rng.below(n), rng.below(n)});
  return Multigraph(n, std::move(edges));
}

std::vector<Multigraph> exhaustive_multigraphs(std::size_t max_n, std::size_t max_m) {
  std::vector<Multigraph> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u; v < n; ++v) pairs.push_back({u, v});
    }
    std::vector<Edge> current;
    std::function<void(std::size_t)> extend = [&](std::size_t first) {
      out.emplace_back(n, current);
      if (current.size() == max_m) return;
      for (std::size_t p = first; p < pairs.size(); ++p) {
        current.push_back(pairs[p]);
        extend(p);
        current.pop_back();
      }
    };
    extend(0);
  }
  return out;
}

std::vector<Multigraph> random_corpus(std::size_t count, std::size_t max_n, std::size_t max_m,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Multigraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_multigraph(rng, 1, max_n, max_m));
  return out;
}

}  // namespace xipoly
