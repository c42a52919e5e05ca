#include "skat/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace skat {

namespace {

double h2(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

struct ProtocolSetup {
    std::vector<std::size_t> honest_pos;  // first entry broadcasts
    std::optional<std::size_t> eve_pos;
    std::vector<Symbol> eve_support;  // sorted; {0} when there is no eavesdropper
    std::size_t eve_index(Symbol s) const {
        return std::lower_bound(eve_support.begin(), eve_support.end(), s) -
               eve_support.begin();
    }
};

ProtocolSetup protocol_setup(const JointDistribution& d) {
    ProtocolSetup setup;
    for (std::size_t i = 0; i < d.variable_count(); ++i) {
        const auto& v = d.variables()[i];
        if (v.role == Role::honest) {
            if (v.alphabet_size != 2)
                throw validation_error("the repeated-code protocol requires binary honest "
                                       "variables; \"" + v.name + "\" has alphabet size " +
                                       std::to_string(v.alphabet_size));
            setup.honest_pos.push_back(i);
        } else {
            setup.eve_pos = i;
        }
    }
    if (setup.honest_pos.size() < 2)
        throw validation_error("the repeated-code protocol requires at least two honest parties");
    if (setup.eve_pos) {
        std::set<Symbol> seen;
        for (const auto& e : d.entries())
            if (e.p > 0.0) seen.insert(e.outcome[*setup.eve_pos]);
        setup.eve_support.assign(seen.begin(), seen.end());
        if (setup.eve_support.empty()) setup.eve_support.push_back(0);
    } else {
        setup.eve_support.push_back(0);
    }
    return setup;
}

// q[w][a][ei] = P(first party = a, party j = a xor bit_{j-1}(w), Eve = ei).
struct PatternTable {
    std::size_t npat = 0;
    std::vector<double> p;
    std::vector<std::optional<Rational>> exact;
    std::vector<std::array<std::vector<double>, 2>> q;
};

PatternTable pattern_table(const JointDistribution& d, const ProtocolSetup& setup) {
    PatternTable t;
    const std::size_t parties = setup.honest_pos.size();
    t.npat = std::size_t{1} << (parties - 1);
    t.p.assign(t.npat, 0.0);
    t.exact.assign(t.npat, Rational{0, 1});
    t.q.resize(t.npat);
    for (auto& arr : t.q) {
        arr[0].assign(setup.eve_support.size(), 0.0);
        arr[1].assign(setup.eve_support.size(), 0.0);
    }
    for (const auto& e : d.entries()) {
        Symbol a = e.outcome[setup.honest_pos[0]];
        std::size_t w = 0;
        for (std::size_t j = 1; j < parties; ++j)
            if (e.outcome[setup.honest_pos[j]] != a) w |= std::size_t{1} << (j - 1);
        std::size_t ei =
            setup.eve_pos ? setup.eve_index(e.outcome[*setup.eve_pos]) : 0;
        t.p[w] += e.p;
        t.q[w][a][ei] += e.p;
        if (t.exact[w] && e.exact)
            t.exact[w] = rat_add(*t.exact[w], *e.exact);
        else
            t.exact[w].reset();
    }
    return t;
}

double compositions_count(int n, std::size_t m) {
    // C(n + m - 1, m - 1)
    double r = 1.0;
    for (std::size_t i = 1; i < m; ++i) r = r * (n + i) / i;
    return r;
}

/// Sums Eve's posterior entropy on the key bit over the types of her
/// (broadcast bit, symbol) sequences. The joint over (s, sequence) is a
/// mixture of product measures, one per (pattern, s) pair, so the type of
/// the sequence is a sufficient statistic.
class EveInformation {
public:
    EveInformation(const PatternTable& t, std::size_t eve_symbols, int n,
                   std::uint64_t max_types)
        : n_(n) {
        // One y symbol per (broadcast bit x, Eve symbol); r[w][s](y) is the
        // per-realization mass q_w(x xor s, e).
        struct YSym {
            int x;
            std::size_t ei;
        };
        std::vector<YSym> ys;
        for (int x = 0; x < 2; ++x)
            for (std::size_t ei = 0; ei < eve_symbols; ++ei) {
                bool used = false;
                for (std::size_t w = 0; w < t.npat && !used; ++w)
                    for (int s = 0; s < 2 && !used; ++s)
                        if (t.q[w][x ^ s][ei] > 0.0) used = true;
                if (used) ys.push_back({x, ei});
            }
        m_ = ys.size();
        combos_ = t.npat * 2;
        if (compositions_count(n, m_) > static_cast<double>(max_types))
            throw budget_error("exact Eve-view analysis would enumerate more than " +
                               std::to_string(max_types) + " sequence types");

        pow_.assign(combos_, std::vector<double>(m_ * (n + 1)));
        for (std::size_t w = 0; w < t.npat; ++w)
            for (int s = 0; s < 2; ++s) {
                auto& tab = pow_[w * 2 + s];
                for (std::size_t y = 0; y < m_; ++y) {
                    double base = t.q[w][ys[y].x ^ s][ys[y].ei];
                    tab[y * (n + 1)] = 1.0;
                    for (int c = 1; c <= n; ++c)
                        tab[y * (n + 1) + c] = tab[y * (n + 1) + c - 1] * base;
                }
            }
        fact_.resize(n + 1);
        fact_[0] = 1.0;
        for (int i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * i;
    }

    // Returns H(s | view, accepted) * P(accepted) and the accumulated
    // acceptance mass as a consistency check.
    std::pair<double, double> conditional_entropy_mass() {
        hsum_ = 0.0;
        total_ = 0.0;
        std::vector<double> prod(combos_, 0.5);  // the fair key bit
        recurse(0, n_, prod, 1.0);
        return {hsum_, total_};
    }

private:
    void recurse(std::size_t y, int rem, const std::vector<double>& prod, double denom) {
        if (y + 1 == m_) {
            leaf(rem, prod, denom * fact_[rem]);
            return;
        }
        std::vector<double> child(combos_);
        for (int c = 0; c <= rem; ++c) {
            for (std::size_t cb = 0; cb < combos_; ++cb)
                child[cb] = prod[cb] * pow_[cb][y * (n_ + 1) + c];
            recurse(y + 1, rem - c, child, denom * fact_[c]);
        }
    }

    void leaf(int c_last, const std::vector<double>& prod, double denom) {
        double m0 = 0.0, m1 = 0.0;
        for (std::size_t cb = 0; cb < combos_; cb += 2) {
            m0 += prod[cb] * pow_[cb][(m_ - 1) * (n_ + 1) + c_last];
            m1 += prod[cb + 1] * pow_[cb + 1][(m_ - 1) * (n_ + 1) + c_last];
        }
        double tot = m0 + m1;
        if (tot <= 0.0) return;
        double mult = fact_[n_] / denom;
        hsum_ += mult * tot * h2(m0 / tot);
        total_ += mult * tot;
    }

    int n_;
    std::size_t m_ = 0, combos_ = 0;
    std::vector<std::vector<double>> pow_;
    std::vector<double> fact_;
    double hsum_ = 0.0, total_ = 0.0;
};

struct VerdictInput {
    bool pairwise_zero = false;
    bool positive_rate = false;
    bool distillable = false;
    bool one_vs_rest_zero = false;
};

std::pair<bool, std::string> decide_verdict(const VerdictInput& v) {
    if (v.distillable) return {false, "distillable"};
    if (v.pairwise_zero && v.positive_rate) return {true, "bound-information"};
    if (v.pairwise_zero && !v.positive_rate && v.one_vs_rest_zero)
        return {false, "no-secret-correlations"};
    return {false, "inconclusive"};
}

}  // namespace

PatternMasses mismatch_pattern_masses(const JointDistribution& d) {
    auto setup = protocol_setup(d);
    auto table = pattern_table(d, setup);
    return {table.p, table.exact};
}

FilterResult equality_filter(const JointDistribution& d, std::string_view p,
                             std::string_view q) {
    auto pi = d.index_of(p);
    auto qi = d.index_of(q);
    if (pi == qi) throw validation_error("equality_filter requires two distinct variables");
    const auto& vp = d.variables()[pi];
    const auto& vq = d.variables()[qi];
    if (vp.role != Role::honest || vq.role != Role::honest)
        throw validation_error("equality_filter applies to honest variables");
    if (vp.alphabet_size != vq.alphabet_size)
        throw validation_error("equality_filter requires equal alphabets for \"" +
                               vp.name + "\" and \"" + vq.name + "\"");

    KahanSum survival;
    std::optional<Rational> exact = Rational{0, 1};
    for (const auto& e : d.entries()) {
        if (e.outcome[pi] != e.outcome[qi]) continue;
        survival.add(e.p);
        if (exact && e.exact)
            exact = rat_add(*exact, *e.exact);
        else
            exact.reset();
    }
    double s = survival.value();
    if (s <= 0.0)
        throw validation_error("the event " + vp.name + " = " + vq.name +
                               " has zero probability");

    DistributionBuilder builder(d.variables());
    for (const auto& e : d.entries()) {
        if (e.outcome[pi] != e.outcome[qi]) continue;
        std::optional<Rational> ex;
        if (e.exact && exact) ex = rat_div(*e.exact, *exact);
        builder.add(e.outcome, e.p / s, ex);
    }
    return {std::move(builder).build(), s, exact};
}

ProtocolStats repeated_code_exact(const JointDistribution& d, int n,
                                  const ExactProtocolConfig& config) {
    if (n < 1) throw validation_error("repeated_code_exact requires n >= 1");
    if (n > config.max_block_length)
        throw budget_error("block length " + std::to_string(n) +
                           " exceeds the exact-analysis budget of " +
                           std::to_string(config.max_block_length));
    auto setup = protocol_setup(d);
    auto table = pattern_table(d, setup);

    // Acceptance requires a constant mismatch pattern across the block.
    KahanSum accept_sum;
    std::optional<Rational> accept_exact = Rational{0, 1};
    for (std::size_t w = 0; w < table.npat; ++w) {
        accept_sum.add(pow_int(table.p[w], n));
        if (accept_exact && table.exact[w]) {
            auto pw = rat_pow(*table.exact[w], n);
            accept_exact = pw ? rat_add(*accept_exact, *pw) : std::nullopt;
        } else {
            accept_exact.reset();
        }
    }
    double accept = accept_sum.value();
    double agree = accept > 0.0 ? pow_int(table.p[0], n) / accept : 0.0;
    std::optional<Rational> agree_exact;
    if (accept_exact && table.exact[0]) {
        auto p0n = rat_pow(*table.exact[0], n);
        if (p0n) agree_exact = rat_div(*p0n, *accept_exact);
    }

    EveInformation eve(table, setup.eve_support.size(), n, config.max_types);
    auto [hsum, total] = eve.conditional_entropy_mass();
    if (std::abs(total - accept) > 1e-9 * (1.0 + accept))
        throw error("exact protocol analysis lost probability mass; internal inconsistency");
    double eve_info = accept > 0.0 ? 1.0 - hsum / accept : 0.0;
    eve_info = std::clamp(eve_info, 0.0, 1.0);

    ProtocolStats stats;
    stats.block_length = n;
    stats.accept_probability = accept;
    stats.agree_probability_given_accept = agree;
    stats.eve_key_information = {eve_info};
    stats.method = ProtocolStats::Method::exact;
    stats.trials = 0;
    stats.accept_exact = accept_exact;
    stats.agree_exact = agree_exact;
    return stats;
}

ProtocolStats repeated_code_monte_carlo(const JointDistribution& d, int n,
                                        std::uint64_t trials, std::uint64_t seed) {
    if (n < 1) throw validation_error("repeated_code_monte_carlo requires n >= 1");
    if (trials < 1) throw validation_error("repeated_code_monte_carlo requires trials >= 1");
    auto setup = protocol_setup(d);
    const auto& entries = d.entries();
    std::vector<double> cum;
    cum.reserve(entries.size());
    double running = 0.0;
    for (const auto& e : entries) {
        running += e.p;
        cum.push_back(running);
    }

    const std::size_t parties = setup.honest_pos.size();
    std::uint64_t accepted = 0;
    std::uint64_t agreed = 0;
    // Counts of Eve's view (her symbols then the broadcast string) per key bit.
    std::map<std::vector<Symbol>, std::array<std::uint64_t, 2>> views;

    std::vector<std::size_t> block(n);
    std::vector<Symbol> view(2 * n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ (trial + 1)));
        for (int i = 0; i < n; ++i) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
            block[i] = std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
            if (block[i] >= entries.size()) block[i] = entries.size() - 1;
        }
        Symbol s = static_cast<Symbol>(rng() & 1);

        // Broadcast, then every other party checks its block for a
        // constant decoded bit.
        bool accept = true;
        bool agree = true;
        for (int i = 0; i < n; ++i) {
            Symbol a = entries[block[i]].outcome[setup.honest_pos[0]];
            view[i + n] = a ^ s;  // X_i
        }
        for (std::size_t j = 1; j < parties && accept; ++j) {
            Symbol sj = 0;
            for (int i = 0; i < n; ++i) {
                Symbol h = entries[block[i]].outcome[setup.honest_pos[j]];
                Symbol dec = h ^ view[i + n];
                if (i == 0) {
                    sj = dec;
                } else if (dec != sj) {
                    accept = false;
                    break;
                }
            }
            if (accept && sj != s) agree = false;
        }
        if (!accept) continue;
        ++accepted;
        if (agree) ++agreed;
        for (int i = 0; i < n; ++i)
            view[i] = setup.eve_pos ? entries[block[i]].outcome[*setup.eve_pos] : 0;
        ++views[view][s];
    }

    double t = static_cast<double>(trials);
    double acc = static_cast<double>(accepted) / t;
    double agr = accepted > 0 ? static_cast<double>(agreed) / accepted : 0.0;

    // Plug-in mutual information between the key bit and the view.
    double info = 0.0;
    double second_moment = 0.0;
    double bias_allowance = 0.0;
    std::size_t occupied = 0;
    if (accepted > 0) {
        double na = static_cast<double>(accepted);
        std::array<std::uint64_t, 2> s_tot{0, 0};
        for (const auto& [v, c] : views) {
            s_tot[0] += c[0];
            s_tot[1] += c[1];
        }
        for (const auto& [v, c] : views) {
            double pv = static_cast<double>(c[0] + c[1]) / na;
            for (int s = 0; s < 2; ++s) {
                if (c[s] == 0) continue;
                ++occupied;
                double psv = static_cast<double>(c[s]) / na;
                double ps = static_cast<double>(s_tot[s]) / na;
                double term = std::log2(psv / (ps * pv));
                info += psv * term;
                second_moment += psv * term * term;
            }
        }
        info = std::max(0.0, info);
        // First-order plug-in bias of the mutual information,
        // (K_sv - K_s - K_v + 1) / (2 N ln 2); folded into the error bar
        // because the estimate itself is reported uncorrected.
        double ks = (s_tot[0] > 0 ? 1.0 : 0.0) + (s_tot[1] > 0 ? 1.0 : 0.0);
        double excess = static_cast<double>(occupied) - ks -
                        static_cast<double>(views.size()) + 1.0;
        bias_allowance = std::max(0.0, excess) / (2.0 * na * std::numbers::ln2);
    }

    ProtocolStats stats;
    stats.block_length = n;
    stats.accept_probability = acc;
    stats.agree_probability_given_accept = agr;
    stats.eve_key_information = {info};
    stats.method = ProtocolStats::Method::monte_carlo;
    stats.trials = trials;
    stats.std_error_accept = std::sqrt(std::max(0.0, acc * (1.0 - acc) / t));
    stats.std_error_agree =
        accepted > 0 ? std::sqrt(std::max(0.0, agr * (1.0 - agr) / accepted)) : 0.0;
    stats.std_error_eve_info =
        accepted > 0
            ? std::sqrt(std::max(0.0, second_moment - info * info) / accepted) +
                  bias_allowance
            : 0.0;
    stats.std_error =
        std::max({stats.std_error_accept, stats.std_error_agree, stats.std_error_eve_info});
    stats.eve_info_small_sample = accepted < 50 * occupied;
    return stats;
}

Certificate certify(const JointDistribution& d, const CertifyConfig& config) {
    int honest = 0;
    int eves = 0;
    for (const auto& v : d.variables()) {
        if (v.role == Role::honest) {
            ++honest;
            if (v.alphabet_size != 2)
                throw validation_error("certify targets three binary honest parties; \"" +
                                       v.name + "\" has alphabet size " +
                                       std::to_string(v.alphabet_size));
        } else {
            ++eves;
        }
    }
    if (honest != 3 || eves != 1)
        throw validation_error(
            "certify targets distributions with exactly three binary honest variables and "
            "one eavesdropper");

    auto names = d.honest_names();
    const std::string& a = names[0];
    const std::string& b = names[1];
    const std::string& c = names[2];
    const std::string eve = d.variables()[*d.eve_index()].name;

    Certificate cert;
    cert.config = config;

    // Two cuts cover every pair of honest parties: a bipartite key between
    // a pair survives across any cut separating that pair.
    auto run_splitting = [&](std::vector<std::string> x, std::vector<std::string> y) {
        SplittingEvidence ev;
        ev.splitting = {x, y, eve};
        ev.intrinsic = intrinsic_info(d, x, y, eve, config.intrinsic);
        ev.zero_within_tol = ev.intrinsic.value.value <= config.zero_tolerance;
        return ev;
    };
    cert.pairwise.push_back(run_splitting({a, b}, {c}));
    cert.pairwise.push_back(run_splitting({a, c}, {b}));
    cert.one_vs_rest = run_splitting({a}, {b, c});

    // Distillation across the one-vs-rest cut when the other two parties
    // share a private channel: announce equality, then count the secret
    // bits in the surviving events.
    cert.filter.p = b;
    cert.filter.q = c;
    try {
        auto filtered = equality_filter(d, b, c);
        std::vector<std::string> xa{a}, ybc{b, c};
        cert.filter.survival_probability = filtered.survival_probability;
        cert.filter.survival_exact = filtered.survival_exact;
        cert.filter.filtered_key_bound =
            ck_lower_bound(filtered.filtered, xa, ybc, eve).value;
        cert.filter.rate = cert.filter.survival_probability * cert.filter.filtered_key_bound;
    } catch (const validation_error&) {
        cert.filter.survival_probability = 0.0;
        cert.filter.filtered_key_bound = 0.0;
        cert.filter.rate = 0.0;
    }

    // Repeated-code statistics; the induced one-way bound
    // min_j I(s_A:s_j | accept) - I(s_A:view | accept) is an achievable
    // key rate per accepted block, so a positive value proves
    // distillability.
    auto patterns = mismatch_pattern_masses(d);
    for (int nn = 1; nn <= config.max_block_length; ++nn) {
        ProtocolStats stats;
        try {
            stats = repeated_code_exact(d, nn, config.exact);
        } catch (const budget_error&) {
            break;
        }
        double accept = stats.accept_probability;
        double worst_match = 1.0;
        for (std::size_t j = 0; j < 2; ++j) {
            double match = 0.0;
            for (std::size_t w = 0; w < patterns.p.size(); ++w)
                if (!(w & (std::size_t{1} << j))) match += pow_int(patterns.p[w], nn);
            match = accept > 0.0 ? match / accept : 0.0;
            worst_match = std::min(worst_match, match);
        }
        double bound = (1.0 - h2(worst_match)) - stats.eve_key_information.value;
        cert.repeated_code.stats.push_back(stats);
        cert.repeated_code.induced_key_bound.push_back(bound);
        if (bound > cert.repeated_code.best_bound) {
            cert.repeated_code.best_bound = bound;
            cert.repeated_code.best_block_length = nn;
        }
    }

    VerdictInput v;
    v.pairwise_zero = cert.pairwise[0].zero_within_tol && cert.pairwise[1].zero_within_tol;
    v.positive_rate = cert.filter.rate > config.rate_tolerance;
    v.distillable = cert.repeated_code.best_bound > config.rate_tolerance;
    v.one_vs_rest_zero = cert.one_vs_rest.intrinsic.value.value <= config.zero_tolerance;
    std::tie(cert.bound_information, cert.reason) = decide_verdict(v);

    cert.iform_lower_bound = 0.0;
    if (v.positive_rate) cert.iform_lower_bound = cert.filter.rate;
    if (v.distillable)
        cert.iform_lower_bound = std::max(cert.iform_lower_bound, cert.repeated_code.best_bound);
    return cert;
}

CertificateCheck verify_certificate(const JointDistribution& d, const Certificate& cert,
                                    double tol) {
    auto fail = [&](const std::string& msg) { return CertificateCheck{false, msg}; };

    auto check_splitting = [&](const SplittingEvidence& ev, const char* label)
        -> std::optional<CertificateCheck> {
        double v = cmi_after_channel(d, ev.splitting.side_x, ev.splitting.side_y,
                                     ev.splitting.eve, ev.intrinsic.witness)
                       .value;
        if (std::abs(v - ev.intrinsic.value.value) > tol)
            return fail(std::string(label) + ": witness reproduces " + std::to_string(v) +
                        " instead of " + std::to_string(ev.intrinsic.value.value));
        if (ev.zero_within_tol != (ev.intrinsic.value.value <= cert.config.zero_tolerance))
            return fail(std::string(label) + ": zero flag inconsistent with value");
        return std::nullopt;
    };

    for (std::size_t i = 0; i < cert.pairwise.size(); ++i)
        if (auto bad = check_splitting(cert.pairwise[i], "pairwise splitting")) return *bad;
    if (auto bad = check_splitting(cert.one_vs_rest, "one-vs-rest splitting")) return *bad;

    if (cert.filter.survival_probability > 0.0) {
        auto filtered = equality_filter(d, cert.filter.p, cert.filter.q);
        if (std::abs(filtered.survival_probability - cert.filter.survival_probability) > tol)
            return fail("filter: survival probability mismatch");
        std::vector<std::string> x{d.honest_names()[0]};
        std::vector<std::string> y{cert.filter.p, cert.filter.q};
        double bound = ck_lower_bound(filtered.filtered, x, y,
                                      d.variables()[*d.eve_index()].name)
                           .value;
        if (std::abs(bound - cert.filter.filtered_key_bound) > tol)
            return fail("filter: key bound mismatch");
        if (std::abs(cert.filter.rate -
                     cert.filter.survival_probability * cert.filter.filtered_key_bound) > tol)
            return fail("filter: rate is not survival * bound");
    }

    double best_bound = 0.0;
    for (std::size_t i = 0; i < cert.repeated_code.stats.size(); ++i) {
        const auto& s = cert.repeated_code.stats[i];
        auto redo = repeated_code_exact(d, s.block_length, cert.config.exact);
        if (std::abs(redo.accept_probability - s.accept_probability) > tol ||
            std::abs(redo.agree_probability_given_accept - s.agree_probability_given_accept) >
                tol ||
            std::abs(redo.eve_key_information.value - s.eve_key_information.value) > tol)
            return fail("repeated-code statistics mismatch at block length " +
                        std::to_string(s.block_length));
        best_bound = std::max(best_bound, cert.repeated_code.induced_key_bound[i]);
    }
    if (std::abs(best_bound - cert.repeated_code.best_bound) > tol)
        return fail("repeated-code best bound mismatch");

    VerdictInput v;
    v.pairwise_zero = cert.pairwise.size() == 2 && cert.pairwise[0].zero_within_tol &&
                      cert.pairwise[1].zero_within_tol;
    v.positive_rate = cert.filter.rate > cert.config.rate_tolerance;
    v.distillable = cert.repeated_code.best_bound > cert.config.rate_tolerance;
    v.one_vs_rest_zero =
        cert.one_vs_rest.intrinsic.value.value <= cert.config.zero_tolerance;
    auto [verdict, reason] = decide_verdict(v);
    if (verdict != cert.bound_information || reason != cert.reason)
        return fail("verdict does not follow from the evidence");
    return {true, ""};
}

}  // namespace skat
