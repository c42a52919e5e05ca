#include "skat/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace skat {

namespace {

double plog2p(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Precomputed per-Eve-symbol joint masses over the (x, y) projections;
/// evaluates I(x:y|E') for a channel without materializing the mapped
/// distribution.
class ChannelObjective {
public:
    ChannelObjective(const JointDistribution& d, std::span<const std::string> x,
                     std::span<const std::string> y, std::string_view eve) {
        if (x.empty() || y.empty())
            throw validation_error("intrinsic information requires nonempty variable sets");
        auto px = resolve_variables(d, x);
        auto py = resolve_variables(d, y);
        auto pe = d.index_of(eve);
        if (d.variables()[pe].role != Role::eavesdropper)
            throw validation_error("\"" + std::string(eve) + "\" is not the eavesdropper");
        for (auto i : px)
            for (auto j : py)
                if (i == j) throw validation_error("the x and y sets must be disjoint");
        for (auto i : px)
            if (i == pe) throw validation_error("the eavesdropper cannot appear in x");
        for (auto j : py)
            if (j == pe) throw validation_error("the eavesdropper cannot appear in y");

        auto tx = project(d, px);
        auto ty = project(d, py);
        nx_ = tx.cells.size();
        ny_ = ty.cells.size();
        ne_ = static_cast<std::size_t>(d.variables()[pe].alphabet_size);
        sym_.assign(ne_, std::vector<double>(nx_ * ny_, 0.0));
        for (std::size_t i = 0; i < d.entries().size(); ++i) {
            const auto& e = d.entries()[i];
            sym_[e.outcome[pe]][tx.entry_cell[i] * ny_ + ty.entry_cell[i]] += e.p;
        }
        acc_.resize(nx_ * ny_);
        rows_.resize(nx_);
        cols_.resize(ny_);
    }

    std::size_t eve_size() const { return ne_; }

    double eval(const std::vector<std::vector<double>>& matrix, std::size_t out) {
        double total = 0.0;
        for (std::size_t j = 0; j < out; ++j) {
            std::fill(acc_.begin(), acc_.end(), 0.0);
            bool any = false;
            for (std::size_t e = 0; e < ne_; ++e) {
                double w = matrix[e][j];
                if (w == 0.0) continue;
                any = true;
                const auto& v = sym_[e];
                for (std::size_t c = 0; c < acc_.size(); ++c) acc_[c] += w * v[c];
            }
            if (any) total += cell_contribution();
        }
        return total;
    }

    double eval_map(std::span<const std::int64_t> map, std::size_t out) {
        double total = 0.0;
        for (std::size_t j = 0; j < out; ++j) {
            std::fill(acc_.begin(), acc_.end(), 0.0);
            bool any = false;
            for (std::size_t e = 0; e < ne_; ++e) {
                if (static_cast<std::size_t>(map[e]) != j) continue;
                any = true;
                const auto& v = sym_[e];
                for (std::size_t c = 0; c < acc_.size(); ++c) acc_[c] += v[c];
            }
            if (any) total += cell_contribution();
        }
        return total;
    }

private:
    // sum_cells M log M - sum_rows r log r - sum_cols c log c + m log m
    // for the accumulated class in acc_.
    double cell_contribution() {
        std::fill(rows_.begin(), rows_.end(), 0.0);
        std::fill(cols_.begin(), cols_.end(), 0.0);
        double cells = 0.0;
        double mass = 0.0;
        for (std::size_t ix = 0; ix < nx_; ++ix) {
            for (std::size_t iy = 0; iy < ny_; ++iy) {
                double v = acc_[ix * ny_ + iy];
                if (v <= 0.0) continue;
                cells += plog2p(v);
                rows_[ix] += v;
                cols_[iy] += v;
                mass += v;
            }
        }
        double r = 0.0, c = 0.0;
        for (double v : rows_) r += plog2p(v);
        for (double v : cols_) c += plog2p(v);
        return cells - r - c + plog2p(mass);
    }

    std::size_t nx_ = 0, ny_ = 0, ne_ = 0;
    std::vector<std::vector<double>> sym_;
    std::vector<double> acc_, rows_, cols_;
};

double clamp_value(double v) { return v < 0.0 && v > -1e-9 ? 0.0 : v; }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

struct GoldenResult {
    double t = 0.0;
    double value = 0.0;
};

GoldenResult golden_section(const std::function<double(double)>& f) {
    constexpr double kGr = 0.6180339887498949;
    double a = 0.0, b = 1.0;
    double x1 = b - kGr * (b - a);
    double x2 = a + kGr * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < 48; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGr * (b - a);
            f2 = f(x2);
        }
    }
    GoldenResult best{x1, f1};
    if (f2 < best.value) best = {x2, f2};
    double fend = f(1.0);
    if (fend <= best.value) best = {1.0, fend};
    return best;
}

}  // namespace

std::string to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::exhaustive_deterministic: return "exhaustive-deterministic";
        case SearchMethod::continuous_local_search: return "continuous-local-search";
        case SearchMethod::combined: return "combined";
    }
    return "";
}

Bits cmi_after_channel(const JointDistribution& d, std::span<const std::string> x,
                       std::span<const std::string> y, std::string_view eve,
                       const Channel& ch) {
    auto mapped = apply_channel(d, eve, ch);
    std::vector<std::string> e{std::string(eve)};
    return conditional_mutual_information(mapped, x, y, e);
}

IntrinsicResult min_over_deterministic(const JointDistribution& d,
                                       std::span<const std::string> x,
                                       std::span<const std::string> y,
                                       std::string_view eve,
                                       std::int64_t max_output_size,
                                       std::uint64_t max_maps) {
    ChannelObjective objective(d, x, y, eve);
    const std::size_t ne = objective.eve_size();
    const std::size_t out =
        max_output_size > 0 ? static_cast<std::size_t>(max_output_size) : ne;
    if (checked_pow(out, ne, max_maps) > max_maps)
        throw budget_error("deterministic search would enumerate more than " +
                           std::to_string(max_maps) + " maps");

    std::vector<std::int64_t> map(ne, 0);
    std::vector<std::int64_t> best_map;
    double best = std::numeric_limits<double>::infinity();
    for (;;) {
        double v = objective.eval_map(map, out);
        if (v < best) {
            best = v;
            best_map = map;
        }
        // Advance in lexicographic order so ties keep the smallest map.
        std::size_t k = ne;
        while (k > 0 && ++map[k - 1] == static_cast<std::int64_t>(out)) map[--k] = 0;
        if (k == 0) break;
    }

    IntrinsicResult r;
    r.value = {clamp_value(best)};
    r.witness = Channel::deterministic_map(static_cast<std::int64_t>(ne),
                                           static_cast<std::int64_t>(out), best_map);
    r.method = SearchMethod::exhaustive_deterministic;
    r.restarts_used = 0;
    r.converged = true;
    return r;
}

IntrinsicResult local_search(const JointDistribution& d, std::span<const std::string> x,
                             std::span<const std::string> y, std::string_view eve,
                             int restarts, std::uint64_t seed, int max_iters,
                             std::int64_t max_output_size) {
    if (restarts < 1) throw validation_error("local_search requires restarts >= 1");
    ChannelObjective objective(d, x, y, eve);
    const std::size_t ne = objective.eve_size();
    const std::size_t out =
        max_output_size > 0 ? static_cast<std::size_t>(max_output_size) : ne;
    constexpr double kImproveTol = 1e-12;

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best_matrix;
    SearchMethod best_method = SearchMethod::continuous_local_search;
    bool best_converged = false;

    for (int restart = 0; restart < restarts; ++restart) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(restart))));
        // Rows drawn uniformly from the simplex via normalized exponentials.
        std::vector<std::vector<double>> matrix(ne, std::vector<double>(out));
        for (auto& row : matrix) {
            double sum = 0.0;
            for (auto& v : row) {
                v = -std::log1p(-uniform01(rng));
                sum += v;
            }
            for (auto& v : row) v /= sum;
        }

        double current = objective.eval(matrix, out);
        bool last_sweep_improved = true;
        int sweeps = 0;
        while (last_sweep_improved && sweeps < max_iters) {
            last_sweep_improved = false;
            for (std::size_t e = 0; e < ne; ++e) {
                for (std::size_t j = 0; j < out; ++j) {
                    const std::vector<double> saved = matrix[e];
                    auto line = [&](double t) {
                        auto& row = matrix[e];
                        for (std::size_t k = 0; k < out; ++k)
                            row[k] = (1.0 - t) * saved[k] + (k == j ? t : 0.0);
                        return objective.eval(matrix, out);
                    };
                    auto cand = golden_section(line);
                    if (cand.value < current - kImproveTol) {
                        double t = cand.t >= 1.0 - 1e-9 ? 1.0 : cand.t;
                        auto& row = matrix[e];
                        double sum = 0.0;
                        for (std::size_t k = 0; k < out; ++k) {
                            row[k] = (1.0 - t) * saved[k] + (k == j ? t : 0.0);
                            sum += row[k];
                        }
                        for (auto& v : row) v /= sum;
                        current = objective.eval(matrix, out);
                        last_sweep_improved = true;
                    } else {
                        matrix[e] = saved;
                    }
                }
            }
            ++sweeps;
        }

        if (current < best) {
            best = current;
            best_matrix = matrix;
            best_method = SearchMethod::continuous_local_search;
            best_converged = !last_sweep_improved;
        }
    }

    // The identity channel is always a valid candidate when it fits the
    // output alphabet; the exhaustive deterministic result is included
    // when it is cheap.
    if (out >= ne) {
        std::vector<std::vector<double>> matrix(ne, std::vector<double>(out, 0.0));
        for (std::size_t e = 0; e < ne; ++e) matrix[e][e] = 1.0;
        double v = objective.eval(matrix, out);
        if (v < best) {
            best = v;
            best_matrix = matrix;
            best_method = SearchMethod::continuous_local_search;
            best_converged = true;
        }
    }
    constexpr std::uint64_t kCheapMaps = 100'000;
    if (checked_pow(out, ne, kCheapMaps) <= kCheapMaps) {
        auto det = min_over_deterministic(d, x, y, eve,
                                          static_cast<std::int64_t>(out), kCheapMaps);
        if (det.value.value < best) {
            best = det.value.value;
            best_matrix = det.witness.matrix;
            best_method = SearchMethod::exhaustive_deterministic;
            best_converged = true;
        }
    }

    IntrinsicResult r;
    r.value = {clamp_value(best)};
    r.witness = Channel{static_cast<std::int64_t>(ne), static_cast<std::int64_t>(out),
                        std::move(best_matrix)};
    r.method = best_method;
    r.restarts_used = restarts;
    r.converged = best_converged;
    return r;
}

IntrinsicResult intrinsic_info(const JointDistribution& d, std::span<const std::string> x,
                               std::span<const std::string> y, std::string_view eve,
                               const IntrinsicConfig& config) {
    auto det = min_over_deterministic(d, x, y, eve, config.max_output_size,
                                      config.max_deterministic_maps);
    auto cont = local_search(d, x, y, eve, config.restarts, config.seed, config.max_iters,
                             config.max_output_size);

    IntrinsicResult r;
    if (std::abs(det.value.value - cont.value.value) <= config.improvement_tol) {
        r = det.value.value <= cont.value.value ? det : cont;
        r.method = SearchMethod::combined;
        r.converged = true;
    } else if (det.value.value < cont.value.value) {
        r = det;
    } else {
        r = cont;
    }
    r.restarts_used = cont.restarts_used;
    return r;
}

}  // namespace skat
