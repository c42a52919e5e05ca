#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skat/dist.hpp"
#include "skat/intrinsic.hpp"
#include "skat/measures.hpp"

namespace skat {

/// Statistics of one run of the repeated-code protocol at block length N.
/// eve_key_information is I(s_A : Eve's full view | accepted), where the
/// view is her N symbols, the broadcast string and both acceptance bits.
struct ProtocolStats {
    enum class Method { exact, monte_carlo };

    int block_length = 0;
    double accept_probability = 0.0;
    double agree_probability_given_accept = 0.0;
    Bits eve_key_information;
    Method method = Method::exact;
    std::uint64_t trials = 0;  // 0 for exact
    double std_error = 0.0;    // largest per-statistic standard error; 0 for exact

    // Per-statistic standard errors (Monte Carlo only).
    double std_error_accept = 0.0;
    double std_error_agree = 0.0;
    double std_error_eve_info = 0.0;
    // Plug-in estimates of Eve's information are biased when the number of
    // accepted samples is small relative to the occupied view cells.
    bool eve_info_small_sample = false;

    std::optional<Rational> accept_exact;
    std::optional<Rational> agree_exact;
};

struct FilterResult {
    JointDistribution filtered;
    double survival_probability = 0.0;
    std::optional<Rational> survival_exact;
};

/// Conditions d on the publicly announced event p = q; Eve learns the
/// announcement, which the conditioning models.
FilterResult equality_filter(const JointDistribution& d, std::string_view p,
                             std::string_view q);

struct ExactProtocolConfig {
    int max_block_length = 8;  // full-view Eve computation budget
    std::uint64_t max_types = std::uint64_t{1} << 24;
};

/// Per-realization mismatch-pattern masses: entry w is the probability
/// that party j differs from the first party exactly where bit j-1 of w
/// is set. The protocol accepts a block iff the pattern is constant
/// across the block, so acceptance = sum_w p_w^N.
struct PatternMasses {
    std::vector<double> p;
    std::vector<std::optional<Rational>> exact;
};

PatternMasses mismatch_pattern_masses(const JointDistribution& d);

/// Exact protocol analysis exploiting the i.i.d. product structure: block
/// acceptance classifies into the constant mismatch patterns, and Eve's
/// information is summed over types of her (symbol, broadcast) sequences.
ProtocolStats repeated_code_exact(const JointDistribution& d, int n,
                                  const ExactProtocolConfig& config = {});

/// Samples `trials` independent N-blocks and runs the protocol verbatim.
/// Eve's information is a plug-in estimate over her empirical view
/// distribution. Reproducible for fixed (seed, trials) regardless of
/// execution order.
ProtocolStats repeated_code_monte_carlo(const JointDistribution& d, int n,
                                        std::uint64_t trials, std::uint64_t seed);

struct SplittingEvidence {
    Splitting splitting;
    IntrinsicResult intrinsic;
    bool zero_within_tol = false;
};

struct FilterEvidence {
    std::string p, q;               // pair joined by a private channel
    double survival_probability = 0.0;
    std::optional<Rational> survival_exact;
    double filtered_key_bound = 0.0;  // bits, on the filtered distribution
    double rate = 0.0;                // survival * bound, bits per realization
};

struct RepeatedCodeEvidence {
    std::vector<ProtocolStats> stats;       // block lengths 1..max
    std::vector<double> induced_key_bound;  // one-way bound per block, bits
    double best_bound = 0.0;
    int best_block_length = 0;
};

struct CertifyConfig {
    IntrinsicConfig intrinsic;
    ExactProtocolConfig exact;
    int max_block_length = 8;
    double zero_tolerance = 1e-6;
    double rate_tolerance = 1e-6;
};

/// Machine-checkable report on the secrecy structure of a tripartite
/// distribution: does it hold secret correlations, and are they
/// distillable into a key?
struct Certificate {
    bool bound_information = false;
    std::string reason;  // bound-information | distillable | no-secret-correlations | inconclusive

    std::vector<SplittingEvidence> pairwise;  // the two cuts covering all pairs
    SplittingEvidence one_vs_rest;            // first party vs the other two
    FilterEvidence filter;
    RepeatedCodeEvidence repeated_code;

    double iform_lower_bound = 0.0;  // bits, via the achieved secret rate
    CertifyConfig config;
};

/// Requires exactly three binary honest variables and one eavesdropper.
Certificate certify(const JointDistribution& d, const CertifyConfig& config = {});

struct CertificateCheck {
    bool ok = true;
    std::string detail;
};

/// Re-evaluates every witness and statistic embedded in the certificate
/// against the distribution and checks the verdict logic.
CertificateCheck verify_certificate(const JointDistribution& d, const Certificate& cert,
                                    double tol = 1e-6);

}  // namespace skat
