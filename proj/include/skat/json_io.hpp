#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "skat/dist.hpp"
#include "skat/intrinsic.hpp"
#include "skat/protocols.hpp"

namespace skat {

using Json = nlohmann::ordered_json;

/// Probability/bit values serialize as strings: the exact rational when
/// one is tracked, otherwise a 17-significant-digit decimal.
std::string format_real(double value, const std::optional<Rational>& exact = std::nullopt);

Json to_json(const JointDistribution& d);
Json to_json(const Channel& ch);
Json to_json(const IntrinsicResult& r);
Json to_json(const ProtocolStats& s);
Json to_json(const FilterResult& f);
Json to_json(const Certificate& c);

/// Canonical text form: variables in declared order, outcomes in
/// lexicographic order, two-space indentation, trailing newline.
/// Serialization is deterministic.
std::string to_canonical_string(const JointDistribution& d);
std::string to_pretty_string(const Json& j);

JointDistribution distribution_from_json(const nlohmann::json& j);
Channel channel_from_json(const nlohmann::json& j);

/// Parses and converts; malformed JSON raises validation_error with the
/// line and column of the offending byte.
JointDistribution load_distribution_text(std::string_view text);

}  // namespace skat
