#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "skat/dist.hpp"
#include "skat/measures.hpp"

namespace skat {

enum class SearchMethod {
    exhaustive_deterministic,
    continuous_local_search,
    combined,
};

std::string to_string(SearchMethod m);

/// Result of minimizing I(x:y|E') over channels acting on Eve's variable.
/// The value is an upper bound on the true infimum; it is exact whenever a
/// (near-)zero witness is found.
struct IntrinsicResult {
    Bits value;
    Channel witness;
    SearchMethod method = SearchMethod::combined;
    int restarts_used = 0;
    bool converged = true;
};

struct IntrinsicConfig {
    std::int64_t max_output_size = 0;  // 0 -> size of Eve's alphabet
    int restarts = 32;
    std::uint64_t seed = 0;
    int max_iters = 200;
    std::uint64_t max_deterministic_maps = 10'000'000;
    double improvement_tol = 1e-12;
};

/// I(x:y|E') for the distribution obtained by post-processing Eve's
/// variable through `ch`.
Bits cmi_after_channel(const JointDistribution& d, std::span<const std::string> x,
                       std::span<const std::string> y, std::string_view eve,
                       const Channel& ch);

/// Exact minimum over all functions from Eve's alphabet into an output
/// alphabet of the given size (default: same size). Ties are broken
/// toward the lexicographically smallest map.
IntrinsicResult min_over_deterministic(const JointDistribution& d,
                                       std::span<const std::string> x,
                                       std::span<const std::string> y,
                                       std::string_view eve,
                                       std::int64_t max_output_size = 0,
                                       std::uint64_t max_maps = 10'000'000);

/// Random-restart coordinate descent over row-stochastic channels. Each
/// restart starts from rows drawn uniformly from the simplex and sweeps
/// the rows, line-searching toward every vertex of the output simplex
/// until a sweep yields no improvement. The best value across restarts is
/// returned, together with the deterministic-search result when that
/// search is cheap enough to include.
IntrinsicResult local_search(const JointDistribution& d, std::span<const std::string> x,
                             std::span<const std::string> y, std::string_view eve,
                             int restarts, std::uint64_t seed, int max_iters = 200,
                             std::int64_t max_output_size = 0);

/// Minimum of the deterministic and continuous searches; records which
/// method produced the winning witness.
IntrinsicResult intrinsic_info(const JointDistribution& d, std::span<const std::string> x,
                               std::span<const std::string> y, std::string_view eve,
                               const IntrinsicConfig& config = {});

}  // namespace skat
