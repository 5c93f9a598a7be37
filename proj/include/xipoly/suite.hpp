#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "xipoly/graph.hpp"
#include "xipoly/oracles.hpp"
#include "xipoly/reductions.hpp"

namespace xipoly {

enum class Suite { psi_xi, doubling, thickening, cone, specialization, pipeline, all };

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Accepts psi-xi, doubling, thickening, cone, specialization, pipeline, all.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteOptions {
  std::size_t trials = 10;
  std::uint64_t seed = kDefaultSeed;
  oracles::OracleCaps caps;
};

/// Runs the identity checks of a suite on one graph at seeded random
/// points. Each suite draws from its own stream derived from the seed, so
/// the verdicts of a suite do not depend on which other suites run.
std::vector<Verdict> run_suite(const Multigraph& g, Suite suite, const SuiteOptions& options);

}  // namespace xipoly
