#include "skat/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace skat {

namespace {

constexpr double kSumTol = 1e-9;

std::string format_outcome(const Outcome& o) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) os << ",";
        os << o[i];
    }
    os << ")";
    return os.str();
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return static_cast<std::int64_t>(r);
}

}  // namespace

JointDistribution JointDistribution::unchecked(std::vector<VariableSpec> variables,
                                               std::vector<PmfEntry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const PmfEntry& a, const PmfEntry& b) { return a.outcome < b.outcome; });
    JointDistribution d;
    d.variables_ = std::move(variables);
    d.entries_ = std::move(entries);
    return d;
}

std::size_t JointDistribution::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name) return i;
    throw unknown_variable_error("unknown variable \"" + std::string(name) + "\"");
}

bool JointDistribution::has_variable(std::string_view name) const {
    for (const auto& v : variables_)
        if (v.name == name) return true;
    return false;
}

std::optional<std::size_t> JointDistribution::eve_index() const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].role == Role::eavesdropper) return i;
    return std::nullopt;
}

std::vector<std::string> JointDistribution::honest_names() const {
    std::vector<std::string> names;
    for (const auto& v : variables_)
        if (v.role == Role::honest) names.push_back(v.name);
    return names;
}

double JointDistribution::total_mass() const {
    KahanSum sum;
    for (const auto& e : entries_) sum.add(e.p);
    return sum.value();
}

DistributionBuilder::DistributionBuilder(std::vector<VariableSpec> variables)
    : variables_(std::move(variables)) {}

void DistributionBuilder::add(const Outcome& outcome, double p,
                              const std::optional<Rational>& exact) {
    auto [it, inserted] = acc_.try_emplace(outcome);
    auto& acc = it->second;
    acc.p += p;
    if (inserted) {
        acc.exact = exact;
        acc.exact_ok = exact.has_value();
    } else if (acc.exact_ok && exact) {
        acc.exact = rat_add(*acc.exact, *exact);
        acc.exact_ok = acc.exact.has_value();
    } else {
        acc.exact.reset();
        acc.exact_ok = false;
    }
}

JointDistribution DistributionBuilder::build() && {
    std::vector<PmfEntry> entries;
    entries.reserve(acc_.size());
    for (auto& [outcome, acc] : acc_) {
        if (acc.p == 0.0) continue;
        entries.push_back({outcome, acc.p, acc.exact_ok ? acc.exact : std::nullopt});
    }
    return JointDistribution::unchecked(std::move(variables_), std::move(entries));
}

Channel Channel::identity(std::int64_t size) {
    Channel ch;
    ch.input_size = size;
    ch.output_size = size;
    ch.matrix.assign(size, std::vector<double>(size, 0.0));
    for (std::int64_t i = 0; i < size; ++i) ch.matrix[i][i] = 1.0;
    return ch;
}

Channel Channel::deterministic_map(std::int64_t input_size, std::int64_t output_size,
                                   std::span<const std::int64_t> map) {
    if (static_cast<std::int64_t>(map.size()) != input_size)
        throw validation_error("deterministic map must assign every input symbol");
    Channel ch;
    ch.input_size = input_size;
    ch.output_size = output_size;
    ch.matrix.assign(input_size, std::vector<double>(output_size, 0.0));
    for (std::int64_t i = 0; i < input_size; ++i) {
        if (map[i] < 0 || map[i] >= output_size)
            throw validation_error("deterministic map image out of range");
        ch.matrix[i][map[i]] = 1.0;
    }
    return ch;
}

bool Channel::deterministic() const {
    for (const auto& row : matrix) {
        int ones = 0;
        for (double v : row) {
            if (std::abs(v - 1.0) <= 1e-12)
                ++ones;
            else if (std::abs(v) > 1e-12)
                return false;
        }
        if (ones != 1) return false;
    }
    return true;
}

Validation validate(const JointDistribution& d) {
    std::set<std::string> names;
    for (const auto& v : d.variables()) {
        if (v.name.empty()) return {false, "variable with empty name"};
        if (!names.insert(v.name).second)
            return {false, "duplicate variable name \"" + v.name + "\""};
        if (v.alphabet_size < 1)
            return {false, "variable \"" + v.name + "\" has alphabet size " +
                               std::to_string(v.alphabet_size) + ", expected >= 1"};
    }
    int eves = 0;
    for (const auto& v : d.variables())
        if (v.role == Role::eavesdropper) ++eves;
    if (eves > 1) return {false, "more than one eavesdropper variable"};

    const PmfEntry* prev = nullptr;
    KahanSum sum;
    for (const auto& e : d.entries()) {
        if (e.outcome.size() != d.variable_count())
            return {false, "outcome " + format_outcome(e.outcome) + " has arity " +
                               std::to_string(e.outcome.size()) + ", expected " +
                               std::to_string(d.variable_count())};
        for (std::size_t i = 0; i < e.outcome.size(); ++i) {
            if (e.outcome[i] < 0 || e.outcome[i] >= d.variables()[i].alphabet_size)
                return {false, "outcome " + format_outcome(e.outcome) + " indexes symbol " +
                                   std::to_string(e.outcome[i]) + " outside the alphabet of \"" +
                                   d.variables()[i].name + "\""};
        }
        if (prev && prev->outcome == e.outcome)
            return {false, "outcome " + format_outcome(e.outcome) + " appears twice"};
        if (!(e.p >= 0.0) || !std::isfinite(e.p))
            return {false, "negative probability " + format_double(e.p) + " at outcome " +
                               format_outcome(e.outcome)};
        sum.add(e.p);
        prev = &e;
    }
    if (std::abs(sum.value() - 1.0) > kSumTol)
        return {false, "probabilities sum to " + format_double(sum.value()) +
                           ", not 1 (tolerance 1e-9)"};
    return {true, ""};
}

Validation validate(const Channel& ch) {
    if (ch.input_size < 1 || ch.output_size < 1)
        return {false, "channel alphabet sizes must be >= 1"};
    if (static_cast<std::int64_t>(ch.matrix.size()) != ch.input_size)
        return {false, "channel has " + std::to_string(ch.matrix.size()) + " rows, expected " +
                           std::to_string(ch.input_size)};
    for (std::int64_t i = 0; i < ch.input_size; ++i) {
        const auto& row = ch.matrix[i];
        if (static_cast<std::int64_t>(row.size()) != ch.output_size)
            return {false, "channel row " + std::to_string(i) + " has length " +
                               std::to_string(row.size()) + ", expected " +
                               std::to_string(ch.output_size)};
        KahanSum sum;
        for (double v : row) {
            if (!(v >= 0.0) || !std::isfinite(v))
                return {false, "negative entry in channel row " + std::to_string(i)};
            sum.add(v);
        }
        if (std::abs(sum.value() - 1.0) > kSumTol)
            return {false, "channel row " + std::to_string(i) + " sums to " +
                               format_double(sum.value()) + ", not 1 (tolerance 1e-9)"};
    }
    return {true, ""};
}

Validation validate(const JointDistribution& d, const Splitting& s) {
    if (s.side_x.empty() || s.side_y.empty()) return {false, "splitting sides must be nonempty"};
    std::set<std::string> x(s.side_x.begin(), s.side_x.end());
    std::set<std::string> y(s.side_y.begin(), s.side_y.end());
    for (const auto& n : x)
        if (y.count(n)) return {false, "variable \"" + n + "\" appears on both sides"};
    for (const auto& n : s.side_x) {
        if (!d.has_variable(n)) return {false, "unknown variable \"" + n + "\""};
        if (d.variables()[d.index_of(n)].role != Role::honest)
            return {false, "side variable \"" + n + "\" is not honest"};
    }
    for (const auto& n : s.side_y) {
        if (!d.has_variable(n)) return {false, "unknown variable \"" + n + "\""};
        if (d.variables()[d.index_of(n)].role != Role::honest)
            return {false, "side variable \"" + n + "\" is not honest"};
    }
    if (!d.has_variable(s.eve)) return {false, "unknown variable \"" + s.eve + "\""};
    if (d.variables()[d.index_of(s.eve)].role != Role::eavesdropper)
        return {false, "\"" + s.eve + "\" is not the eavesdropper"};
    if (x.count(s.eve) || y.count(s.eve))
        return {false, "the eavesdropper cannot sit on an honest side"};
    return {true, ""};
}

std::vector<std::size_t> resolve_variables(const JointDistribution& d,
                                           std::span<const std::string> names) {
    std::vector<std::size_t> positions;
    positions.reserve(names.size());
    for (const auto& n : names) positions.push_back(d.index_of(n));
    auto sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw validation_error("duplicate variable in selection");
    return positions;
}

ProjectionTable project(const JointDistribution& d,
                        std::span<const std::size_t> positions) {
    ProjectionTable table;
    table.entry_cell.reserve(d.entries().size());
    std::map<Outcome, std::size_t> seen;
    Outcome key(positions.size());
    for (const auto& e : d.entries()) {
        for (std::size_t i = 0; i < positions.size(); ++i) key[i] = e.outcome[positions[i]];
        auto it = seen.find(key);
        if (it == seen.end()) it = seen.emplace(key, seen.size()).first;
        table.entry_cell.push_back(it->second);
    }
    // Renumber cells into lexicographic order.
    std::vector<std::size_t> renumber(seen.size());
    table.cells.resize(seen.size());
    std::size_t next = 0;
    for (const auto& [cell, idx] : seen) {
        renumber[idx] = next;
        table.cells[next] = cell;
        ++next;
    }
    for (auto& c : table.entry_cell) c = renumber[c];
    return table;
}

JointDistribution marginalize(const JointDistribution& d,
                              std::span<const std::string> keep) {
    if (keep.empty()) throw validation_error("marginalize requires a nonempty variable set");
    auto positions = resolve_variables(d, keep);
    std::sort(positions.begin(), positions.end());

    std::vector<VariableSpec> vars;
    vars.reserve(positions.size());
    for (auto p : positions) vars.push_back(d.variables()[p]);

    DistributionBuilder builder(std::move(vars));
    Outcome key(positions.size());
    for (const auto& e : d.entries()) {
        for (std::size_t i = 0; i < positions.size(); ++i) key[i] = e.outcome[positions[i]];
        builder.add(key, e.p, e.exact);
    }
    return std::move(builder).build();
}

Conditioned condition(const JointDistribution& d, std::string_view var, Symbol value) {
    auto pos = d.index_of(var);
    if (value < 0 || value >= d.variables()[pos].alphabet_size)
        throw validation_error("value " + std::to_string(value) +
                               " outside the alphabet of \"" + std::string(var) + "\"");

    KahanSum event;
    std::optional<Rational> event_exact = Rational{0, 1};
    for (const auto& e : d.entries()) {
        if (e.outcome[pos] != value) continue;
        event.add(e.p);
        if (event_exact && e.exact)
            event_exact = rat_add(*event_exact, *e.exact);
        else
            event_exact.reset();
    }
    double prob = event.value();
    if (prob <= 0.0)
        throw validation_error("conditioning on the zero-probability event \"" +
                               std::string(var) + " = " + std::to_string(value) + "\"");

    std::vector<VariableSpec> vars;
    for (std::size_t i = 0; i < d.variable_count(); ++i)
        if (i != pos) vars.push_back(d.variables()[i]);

    DistributionBuilder builder(std::move(vars));
    Outcome key(d.variable_count() - 1);
    for (const auto& e : d.entries()) {
        if (e.outcome[pos] != value) continue;
        std::size_t k = 0;
        for (std::size_t i = 0; i < e.outcome.size(); ++i)
            if (i != pos) key[k++] = e.outcome[i];
        std::optional<Rational> exact;
        if (e.exact && event_exact) exact = rat_div(*e.exact, *event_exact);
        builder.add(key, e.p / prob, exact);
    }
    Conditioned out{std::move(builder).build(), prob, event_exact};
    return out;
}

std::int64_t ProductCoding::encode(std::span<const Symbol> symbols) const {
    std::int64_t index = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) index = index * sizes[i] + symbols[i];
    return index;
}

Outcome ProductCoding::decode(std::int64_t index) const {
    Outcome out(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
        out[i] = index % sizes[i];
        index /= sizes[i];
    }
    return out;
}

MergeResult merge(const JointDistribution& d, std::span<const std::string> parts,
                  std::string new_name) {
    if (parts.empty()) throw validation_error("merge requires a nonempty variable set");
    auto positions = resolve_variables(d, parts);
    std::sort(positions.begin(), positions.end());
    for (auto p : positions)
        if (d.variables()[p].role != Role::honest)
            throw validation_error("cannot merge the eavesdropper variable \"" +
                                   d.variables()[p].name + "\" with honest ones");
    for (std::size_t i = 0; i < d.variable_count(); ++i) {
        bool dropped = std::binary_search(positions.begin(), positions.end(), i);
        if (!dropped && d.variables()[i].name == new_name)
            throw validation_error("merged name \"" + new_name + "\" collides with a variable");
    }

    ProductCoding coding;
    std::int64_t alphabet = 1;
    for (auto p : positions) {
        coding.parts.push_back(d.variables()[p].name);
        coding.sizes.push_back(d.variables()[p].alphabet_size);
        auto next = checked_mul(alphabet, d.variables()[p].alphabet_size);
        if (!next) throw budget_error("merged alphabet exceeds the representable range");
        alphabet = *next;
    }

    std::vector<VariableSpec> vars;
    for (std::size_t i = 0; i < d.variable_count(); ++i) {
        if (i == positions.front()) {
            vars.push_back({new_name, alphabet, Role::honest});
        } else if (!std::binary_search(positions.begin(), positions.end(), i)) {
            vars.push_back(d.variables()[i]);
        }
    }

    DistributionBuilder builder(std::move(vars));
    Outcome key;
    Outcome part_syms(positions.size());
    for (const auto& e : d.entries()) {
        key.clear();
        for (std::size_t i = 0; i < positions.size(); ++i) part_syms[i] = e.outcome[positions[i]];
        for (std::size_t i = 0; i < d.variable_count(); ++i) {
            if (i == positions.front())
                key.push_back(coding.encode(part_syms));
            else if (!std::binary_search(positions.begin(), positions.end(), i))
                key.push_back(e.outcome[i]);
        }
        builder.add(key, e.p, e.exact);
    }
    return {std::move(builder).build(), std::move(coding)};
}

JointDistribution permute(const JointDistribution& d,
                          const std::map<std::string, std::string>& mapping) {
    std::set<std::string> domain, image;
    for (const auto& [from, to] : mapping) {
        domain.insert(from);
        image.insert(to);
    }
    if (domain != image)
        throw validation_error("mapping is not a bijection on honest variable names");
    for (const auto& [from, to] : mapping) {
        auto fi = d.index_of(from);
        auto ti = d.index_of(to);
        if (d.variables()[fi].role != Role::honest || d.variables()[ti].role != Role::honest)
            throw validation_error("only honest variables can be permuted");
        if (d.variables()[fi].alphabet_size != d.variables()[ti].alphabet_size)
            throw validation_error("permutation between variables of different alphabets");
    }

    // target[i] = position that receives the value currently at position i.
    std::vector<std::size_t> target(d.variable_count());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = i;
    for (const auto& [from, to] : mapping) target[d.index_of(from)] = d.index_of(to);

    DistributionBuilder builder(d.variables());
    Outcome key(d.variable_count());
    for (const auto& e : d.entries()) {
        for (std::size_t i = 0; i < e.outcome.size(); ++i) key[target[i]] = e.outcome[i];
        builder.add(key, e.p, e.exact);
    }
    return std::move(builder).build();
}

JointDistribution mix(std::span<const JointDistribution> ds,
                      std::span<const double> weights) {
    if (ds.empty()) throw validation_error("mix requires at least one distribution");
    if (weights.size() != ds.size())
        throw validation_error("mix weights must match the number of distributions");
    KahanSum wsum;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw validation_error("mix weights must be >= 0");
        wsum.add(w);
    }
    if (std::abs(wsum.value() - 1.0) > kSumTol)
        throw validation_error("mix weights must sum to 1 (tolerance 1e-9)");

    // All inputs must agree on the honest variable sequence.
    std::vector<VariableSpec> honest;
    for (const auto& v : ds.front().variables())
        if (v.role == Role::honest) honest.push_back(v);
    for (const auto& d : ds) {
        std::vector<VariableSpec> h;
        for (const auto& v : d.variables())
            if (v.role == Role::honest) h.push_back(v);
        if (h != honest)
            throw validation_error("mixed distributions must share honest variables and alphabets");
    }

    // Tagged disjoint union of the Eve alphabets; a missing eavesdropper
    // contributes a single tag.
    std::vector<std::int64_t> offsets(ds.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        offsets[i] = total;
        auto eve = ds[i].eve_index();
        total += eve ? ds[i].variables()[*eve].alphabet_size : 1;
    }

    std::string eve_name;
    for (const auto& d : ds)
        if (auto eve = d.eve_index()) {
            eve_name = d.variables()[*eve].name;
            break;
        }
    if (eve_name.empty()) {
        eve_name = "E";
        for (const auto& v : honest)
            if (v.name == eve_name) eve_name = "EVE";
    }

    std::vector<VariableSpec> vars = honest;
    vars.push_back({eve_name, total, Role::eavesdropper});

    DistributionBuilder builder(std::move(vars));
    Outcome key(honest.size() + 1);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (weights[i] == 0.0) continue;
        const auto& d = ds[i];
        auto eve = d.eve_index();
        std::vector<std::size_t> honest_pos;
        for (std::size_t j = 0; j < d.variable_count(); ++j)
            if (d.variables()[j].role == Role::honest) honest_pos.push_back(j);
        for (const auto& e : d.entries()) {
            for (std::size_t j = 0; j < honest_pos.size(); ++j) key[j] = e.outcome[honest_pos[j]];
            key.back() = offsets[i] + (eve ? e.outcome[*eve] : 0);
            builder.add(key, weights[i] * e.p);
        }
    }
    return std::move(builder).build();
}

JointDistribution eve_canonicalize(const JointDistribution& d, double tol) {
    auto eve = d.eve_index();
    if (!eve) throw validation_error("eve_canonicalize requires an eavesdropper variable");

    std::vector<std::size_t> honest_pos;
    for (std::size_t i = 0; i < d.variable_count(); ++i)
        if (i != *eve) honest_pos.push_back(i);
    auto proj = project(d, honest_pos);

    const std::int64_t eve_size = d.variables()[*eve].alphabet_size;
    std::vector<double> mass(eve_size, 0.0);
    std::vector<std::vector<double>> joint(eve_size,
                                           std::vector<double>(proj.cells.size(), 0.0));
    for (std::size_t i = 0; i < d.entries().size(); ++i) {
        const auto& e = d.entries()[i];
        Symbol s = e.outcome[*eve];
        mass[s] += e.p;
        joint[s][proj.entry_cell[i]] += e.p;
    }

    struct Cls {
        std::vector<Symbol> members;
        double mass = 0.0;
        std::vector<double> conditional;  // mass-weighted over cells
    };
    std::vector<Cls> classes;
    for (Symbol s = 0; s < eve_size; ++s) {
        if (mass[s] <= 0.0) continue;  // zero-probability Eve symbols are dropped
        std::vector<double> cond(proj.cells.size());
        for (std::size_t c = 0; c < cond.size(); ++c) cond[c] = joint[s][c] / mass[s];
        Cls* home = nullptr;
        for (auto& cls : classes) {
            bool same = true;
            for (std::size_t c = 0; c < cond.size(); ++c)
                if (std::abs(cls.conditional[c] - cond[c]) > tol) {
                    same = false;
                    break;
                }
            if (same) {
                home = &cls;
                break;
            }
        }
        if (!home) {
            classes.push_back({{s}, mass[s], cond});
        } else {
            double m = home->mass + mass[s];
            for (std::size_t c = 0; c < cond.size(); ++c)
                home->conditional[c] = (home->conditional[c] * home->mass + cond[c] * mass[s]) / m;
            home->mass = m;
            home->members.push_back(s);
        }
    }

    // Canonical class order: largest conditional first, lexicographically
    // over honest outcomes. Reproduces the compact tables where Eve labels
    // follow the honest outcomes they identify.
    std::stable_sort(classes.begin(), classes.end(), [](const Cls& a, const Cls& b) {
        for (std::size_t c = 0; c < a.conditional.size(); ++c)
            if (a.conditional[c] != b.conditional[c]) return a.conditional[c] > b.conditional[c];
        return false;
    });

    std::vector<Symbol> relabel(eve_size, -1);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (Symbol s : classes[k].members) relabel[s] = static_cast<Symbol>(k);

    std::vector<VariableSpec> vars = d.variables();
    vars[*eve].alphabet_size = static_cast<std::int64_t>(classes.size());

    DistributionBuilder builder(std::move(vars));
    Outcome key;
    for (const auto& e : d.entries()) {
        if (mass[e.outcome[*eve]] <= 0.0) continue;
        key = e.outcome;
        key[*eve] = relabel[e.outcome[*eve]];
        builder.add(key, e.p, e.exact);
    }
    return std::move(builder).build();
}

JointDistribution iid_power(const JointDistribution& d, int n,
                            const EnumerationBudget& budget) {
    if (n < 1) throw validation_error("iid_power requires n >= 1");
    if (n == 1) return d;

    unsigned __int128 tuples = 1;
    for (int i = 0; i < n; ++i) {
        tuples *= d.support_size();
        if (tuples > budget.max_tuples)
            throw budget_error("iid_power would enumerate more than " +
                               std::to_string(budget.max_tuples) + " outcome tuples");
    }

    std::vector<VariableSpec> vars = d.variables();
    for (auto& v : vars) {
        std::int64_t a = 1;
        for (int i = 0; i < n; ++i) {
            auto next = checked_mul(a, v.alphabet_size);
            if (!next) throw budget_error("iid_power alphabet exceeds the representable range");
            a = *next;
        }
        v.alphabet_size = a;
    }

    const auto& src = d.entries();
    std::vector<PmfEntry> entries;
    entries.reserve(static_cast<std::size_t>(tuples));
    std::vector<std::size_t> idx(n, 0);
    Outcome key(d.variable_count());
    for (;;) {
        key.assign(d.variable_count(), 0);
        double p = 1.0;
        std::optional<Rational> exact = Rational{1, 1};
        for (int k = 0; k < n; ++k) {
            const auto& e = src[idx[k]];
            p *= e.p;
            if (exact && e.exact)
                exact = rat_mul(*exact, *e.exact);
            else
                exact.reset();
            for (std::size_t v = 0; v < key.size(); ++v)
                key[v] = key[v] * d.variables()[v].alphabet_size + e.outcome[v];
        }
        entries.push_back({key, p, exact});
        int k = n - 1;
        while (k >= 0 && ++idx[k] == src.size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return JointDistribution::unchecked(std::move(vars), std::move(entries));
}

JointDistribution apply_channel(const JointDistribution& d, std::string_view var,
                                const Channel& ch) {
    auto pos = d.index_of(var);
    if (auto v = validate(ch); !v.ok) throw validation_error("invalid channel: " + v.message);
    if (ch.input_size != d.variables()[pos].alphabet_size)
        throw validation_error("channel input size " + std::to_string(ch.input_size) +
                               " does not match the alphabet of \"" + std::string(var) + "\"");

    const bool det = ch.deterministic();
    std::vector<VariableSpec> vars = d.variables();
    vars[pos].alphabet_size = ch.output_size;

    DistributionBuilder builder(std::move(vars));
    Outcome key;
    for (const auto& e : d.entries()) {
        const auto& row = ch.matrix[e.outcome[pos]];
        key = e.outcome;
        for (std::int64_t j = 0; j < ch.output_size; ++j) {
            if (row[j] == 0.0) continue;
            key[pos] = j;
            builder.add(key, e.p * row[j], det ? e.exact : std::nullopt);
        }
    }
    return std::move(builder).build();
}

bool approx_equal(const JointDistribution& a, const JointDistribution& b, double tol) {
    if (a.variables() != b.variables()) return false;
    std::size_t i = 0, j = 0;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].outcome < eb[j].outcome)) {
            if (std::abs(ea[i].p) > tol) return false;
            ++i;
        } else if (i == ea.size() || eb[j].outcome < ea[i].outcome) {
            if (std::abs(eb[j].p) > tol) return false;
            ++j;
        } else {
            if (std::abs(ea[i].p - eb[j].p) > tol) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

}  // namespace skat
