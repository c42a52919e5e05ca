#include "skat/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace skat {

namespace {

constexpr double kClampTol = 1e-12;

double entropy_of_masses(std::span<const double> masses) {
    KahanSum h;
    for (double p : masses)
        if (p > 0.0) h.add(-p * std::log2(p));
    return h.value();
}

double clamp_information(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -kClampTol) return 0.0;
    throw error(std::string(what) + " came out " + std::to_string(v) +
                "; internal consistency violated");
}

double marginal_entropy(const JointDistribution& d, std::span<const std::size_t> positions) {
    if (positions.empty()) return 0.0;
    auto proj = project(d, positions);
    std::vector<double> masses(proj.cells.size(), 0.0);
    for (std::size_t i = 0; i < d.entries().size(); ++i)
        masses[proj.entry_cell[i]] += d.entries()[i].p;
    return entropy_of_masses(masses);
}

std::vector<std::size_t> union_positions(std::span<const std::size_t> a,
                                         std::span<const std::size_t> b) {
    std::vector<std::size_t> u(a.begin(), a.end());
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
}

void require_disjoint(std::span<const std::size_t> a, std::span<const std::size_t> b,
                      const char* what) {
    for (auto i : a)
        for (auto j : b)
            if (i == j) throw validation_error(std::string(what) + " must be disjoint");
}

}  // namespace

Bits entropy(const JointDistribution& d, std::span<const std::string> vars) {
    if (vars.empty()) throw validation_error("entropy requires a nonempty variable set");
    auto positions = resolve_variables(d, vars);
    return {clamp_information(marginal_entropy(d, positions), "entropy")};
}

Bits mutual_information(const JointDistribution& d, std::span<const std::string> x,
                        std::span<const std::string> y) {
    return conditional_mutual_information(d, x, y, {});
}

Bits conditional_mutual_information(const JointDistribution& d,
                                    std::span<const std::string> x,
                                    std::span<const std::string> y,
                                    std::span<const std::string> z) {
    if (x.empty() || y.empty())
        throw validation_error("mutual information requires nonempty variable sets");
    auto px = resolve_variables(d, x);
    auto py = resolve_variables(d, y);
    auto pz = resolve_variables(d, z);
    require_disjoint(px, py, "the x and y sets");
    require_disjoint(px, pz, "the x and z sets");
    require_disjoint(py, pz, "the y and z sets");

    auto xz = union_positions(px, pz);
    auto yz = union_positions(py, pz);
    auto xyz = union_positions(xz, py);
    std::sort(pz.begin(), pz.end());

    double value = marginal_entropy(d, xz) + marginal_entropy(d, yz) -
                   marginal_entropy(d, xyz) - marginal_entropy(d, pz);
    return {clamp_information(value, "conditional mutual information")};
}

Bits ck_lower_bound(const JointDistribution& d, std::span<const std::string> x,
                    std::span<const std::string> y, std::string_view eve) {
    auto pos = d.index_of(eve);
    if (d.variables()[pos].role != Role::eavesdropper)
        throw validation_error("\"" + std::string(eve) + "\" is not the eavesdropper");
    std::vector<std::string> e{std::string(eve)};
    double ixy = mutual_information(d, x, y).value;
    double ixe = mutual_information(d, x, e).value;
    double iye = mutual_information(d, y, e).value;
    return {std::max({0.0, ixy - ixe, ixy - iye})};
}

}  // namespace skat
