#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skat/dist.hpp"

namespace skat::fixtures {

enum class FixtureId { p1, p2, p3, pmix };

std::optional<FixtureId> parse_fixture_id(std::string_view text);
std::string to_string(FixtureId id);
std::vector<std::string> fixture_names();

/// Bit-faithful constructors: every table entry is the nearest binary64
/// to its exact rational value. p2 and p3 are the two cyclic relabelings
/// of p1's honest parties; pmix is the canonical equally weighted mixture
/// of the three.
JointDistribution build(FixtureId id);

}  // namespace skat::fixtures
