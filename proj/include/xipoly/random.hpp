#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "xipoly/graph.hpp"
#include "xipoly/rational.hpp"

namespace xipoly {

/// Seeded generator whose output depends only on the seed: draws reduce
/// raw mt19937_64 words directly instead of going through the
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 9);
  Rational nonzero_rational(std::int64_t max_num = 9, std::int64_t max_den = 9);

 private:
  std::mt19937_64 engine_;
};

/// n uniform in [min_n, max_n], m uniform in [0, max_m], endpoints uniform
/// (so loops appear with probability 1/n per edge).
Multigraph random_multigraph(Rng& rng, std::size_t min_n, std::size_t max_n, std::size_t max_m);

/// Every multigraph with n <= max_n and m <= max_m up to reordering of its
/// edge list: edges are non-decreasing sequences of pairs (u <= v).
std::vector<Multigraph> exhaustive_multigraphs(std::size_t max_n, std::size_t max_m);

std::vector<Multigraph> random_corpus(std::size_t count, std::size_t max_n, std::size_t max_m,
                                      std::uint64_t seed);

}  // namespace xipoly
