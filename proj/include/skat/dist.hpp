#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skat/error.hpp"
#include "skat/rational.hpp"

namespace skat {

using Symbol = std::int64_t;
using Outcome = std::vector<Symbol>;

enum class Role { honest, eavesdropper };

struct VariableSpec {
    std::string name;
    std::int64_t alphabet_size = 0;
    Role role = Role::honest;

    friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

struct PmfEntry {
    Outcome outcome;
    double p = 0.0;
    std::optional<Rational> exact;  // set when the value is known as a rational

    friend bool operator==(const PmfEntry&, const PmfEntry&) = default;
};

/// Joint probability mass function over a tuple of named finite-alphabet
/// variables. Immutable after construction; zero-probability outcomes are
/// stored only if explicitly provided (operations omit them). Entries are
/// kept sorted lexicographically by outcome, which makes serialization and
/// iteration deterministic.
class JointDistribution {
public:
    JointDistribution() = default;

    /// Builds without checking invariants; pair with validate().
    static JointDistribution unchecked(std::vector<VariableSpec> variables,
                                       std::vector<PmfEntry> entries);

    const std::vector<VariableSpec>& variables() const { return variables_; }
    const std::vector<PmfEntry>& entries() const { return entries_; }

    std::size_t variable_count() const { return variables_.size(); }
    std::size_t support_size() const { return entries_.size(); }

    /// Position of a variable; throws unknown_variable_error.
    std::size_t index_of(std::string_view name) const;
    bool has_variable(std::string_view name) const;

    std::optional<std::size_t> eve_index() const;
    std::vector<std::string> honest_names() const;

    double total_mass() const;

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

private:
    std::vector<VariableSpec> variables_;
    std::vector<PmfEntry> entries_;
};

/// Accumulating construction helper used by all operations: repeated adds
/// to the same outcome sum their mass (and their exact rationals, while
/// that stays representable). Zero-mass outcomes are dropped at build().
class DistributionBuilder {
public:
    explicit DistributionBuilder(std::vector<VariableSpec> variables);

    void add(const Outcome& outcome, double p,
             const std::optional<Rational>& exact = std::nullopt);

    JointDistribution build() &&;

private:
    struct Acc {
        double p = 0.0;
        std::optional<Rational> exact;
        bool exact_ok = true;
    };
    std::vector<VariableSpec> variables_;
    std::map<Outcome, Acc> acc_;
};

/// Row-stochastic map from one finite alphabet to another; models the
/// post-processing of the eavesdropper's variable.
struct Channel {
    std::int64_t input_size = 0;
    std::int64_t output_size = 0;
    std::vector<std::vector<double>> matrix;  // input_size rows

    static Channel identity(std::int64_t size);
    /// map[e] is the output symbol for input e.
    static Channel deterministic_map(std::int64_t input_size, std::int64_t output_size,
                                     std::span<const std::int64_t> map);

    /// True iff every row has a single entry equal to 1.
    bool deterministic() const;

    friend bool operator==(const Channel&, const Channel&) = default;
};

/// Bipartition of the honest parties used to analyze key extraction
/// across that cut.
struct Splitting {
    std::vector<std::string> side_x;
    std::vector<std::string> side_y;
    std::string eve;
};

struct Validation {
    bool ok = true;
    std::string message;
};

/// Names the first violated invariant and the offending entry, if any.
Validation validate(const JointDistribution& d);
Validation validate(const Channel& ch);
Validation validate(const JointDistribution& d, const Splitting& s);

/// Sums matching outcomes of d over the dropped variables; keeps the
/// declared variable order restricted to `keep`.
JointDistribution marginalize(const JointDistribution& d,
                              std::span<const std::string> keep);

struct Conditioned {
    JointDistribution dist;   // over the remaining variables, renormalized
    double event_probability = 0.0;
    std::optional<Rational> event_exact;
};

Conditioned condition(const JointDistribution& d, std::string_view var, Symbol value);

/// Lexicographic coding of a product alphabet, recorded so that merged
/// variables can be split apart again.
struct ProductCoding {
    std::vector<std::string> parts;        // merged variable names, original order
    std::vector<std::int64_t> sizes;       // their alphabet sizes

    std::int64_t encode(std::span<const Symbol> symbols) const;
    Outcome decode(std::int64_t index) const;
};

struct MergeResult {
    JointDistribution dist;
    ProductCoding coding;
};

/// Replaces the variables in `parts` by one variable over their product
/// alphabet. Information-preserving: a bijection on outcomes. The merged
/// variable sits at the position of the earliest part.
MergeResult merge(const JointDistribution& d, std::span<const std::string> parts,
                  std::string new_name);

/// Moves each mapped variable's value to its image: the outcome value of
/// v appears at position mapping[v] in the result. Only honest variables
/// may be permuted and alphabets must agree along the cycle.
JointDistribution permute(const JointDistribution& d,
                          const std::map<std::string, std::string>& mapping);

/// Weighted mixture. The eavesdropper's alphabet in the result is the
/// tagged disjoint union of the inputs' eavesdropper alphabets (inputs
/// without one contribute a single tag), so Eve retains knowledge of
/// which distribution occurred.
JointDistribution mix(std::span<const JointDistribution> ds,
                      std::span<const double> weights);

/// Merges Eve symbols whose conditional distributions over the honest
/// variables agree within `tol`, drops zero-probability Eve symbols, and
/// relabels the classes in a canonical order (classes sorted by their
/// conditional distribution, largest-first lexicographically over honest
/// outcomes).
JointDistribution eve_canonicalize(const JointDistribution& d, double tol = 1e-9);

struct EnumerationBudget {
    std::uint64_t max_tuples = std::uint64_t{1} << 24;
};

/// Product distribution over n independent realizations; each variable's
/// alphabet becomes its n-fold product alphabet, coded lexicographically
/// with the first realization most significant.
JointDistribution iid_power(const JointDistribution& d, int n,
                            const EnumerationBudget& budget = {});

/// Replaces `var` by the channel output: P(..., e') = sum_e P(..., e) ch[e][e'].
JointDistribution apply_channel(const JointDistribution& d, std::string_view var,
                                const Channel& ch);

/// Entry-by-entry comparison over the union of supports.
bool approx_equal(const JointDistribution& a, const JointDistribution& b, double tol);

/// Compensated summation; keeps entropy identities tight enough for the
/// 1e-12 internal tolerances.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// Resolves names to positions; throws unknown_variable_error for unknown
/// names and validation_error for duplicates.
std::vector<std::size_t> resolve_variables(const JointDistribution& d,
                                           std::span<const std::string> names);

/// Distinct projections of the support onto `positions` (lexicographic
/// order) plus, per pmf entry, the cell it lands in.
struct ProjectionTable {
    std::vector<Outcome> cells;
    std::vector<std::size_t> entry_cell;
};

ProjectionTable project(const JointDistribution& d,
                        std::span<const std::size_t> positions);

}  // namespace skat
